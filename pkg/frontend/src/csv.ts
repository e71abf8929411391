/** Minimal CSV reader for the simulator's numeric output files. */

export interface CsvTable {
  header: string[];
  /** column name -> values, in file order */
  columns: Map<string, number[]>;
  rows: number;
}

export class MissingChannelError extends Error {
  constructor(channel: string, available: string[]) {
    super(`channel '${channel}' not found in CSV header (available: ${available.join(', ')})`);
    this.name = 'MissingChannelError';
  }
}

export function parseCsv(text: string): CsvTable {
  const lines = text.split(/\r?\n/).filter((line) => line.trim().length > 0);
  if (lines.length < 2) {
    throw new Error('CSV must contain a header row and at least one data row');
  }
  const header = lines[0].split(',').map((h) => h.trim());
  const columns = new Map<string, number[]>(header.map((h) => [h, []]));
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(',');
    if (cells.length !== header.length) {
      throw new Error(`row ${i + 1} has ${cells.length} cells, expected ${header.length}`);
    }
    for (let j = 0; j < header.length; j++) {
      const value = Number(cells[j]);
      // non-numeric columns (basis-state labels) are parsed as NaN and kept
      columns.get(header[j])!.push(value);
    }
  }
  return { header, columns, rows: lines.length - 1 };
}

/** Fetch a numeric channel, failing loudly with the channel name. */
export function channel(table: CsvTable, name: string): number[] {
  const values = table.columns.get(name);
  if (values === undefined) {
    throw new MissingChannelError(name, table.header);
  }
  return values;
}

/** Raw (possibly non-numeric) column as strings, re-split from numbers is not
 *  possible, so label columns are re-read by the caller when needed. */
export function requireChannels(table: CsvTable, names: string[]): void {
  for (const name of names) {
    if (!table.columns.has(name)) {
      throw new MissingChannelError(name, table.header);
    }
  }
}
