/** Standalone renderer: reads simulator CSV files, writes SVG figures.
 *
 *  Usage: node dist/cli.js <knob-switch|spectrum|phase-rabi> <csv> [--out DIR]
 */

import { mkdirSync, readFileSync, writeFileSync } from 'node:fs';
import { join } from 'node:path';
import { parseCsv } from './csv.js';
import { FigureKind, PlotSpec, buildFigure } from './figures.js';

const KINDS: FigureKind[] = ['knob-switch', 'spectrum', 'phase-rabi'];

export function render(spec: PlotSpec): string {
  const table = parseCsv(readFileSync(spec.csvPaths[0], 'utf-8'));
  const svg = buildFigure(spec.kind, table);
  writeFileSync(spec.outPath, svg);
  return spec.outPath;
}

export function main(argv: string[]): number {
  const args = [...argv];
  let outDir = '.';
  const outFlag = args.indexOf('--out');
  if (outFlag >= 0) {
    if (outFlag + 1 >= args.length) {
      console.error('error: --out requires a directory');
      return 2;
    }
    outDir = args[outFlag + 1];
    args.splice(outFlag, 2);
  }
  const [kind, ...csvPaths] = args;
  if (!kind || !KINDS.includes(kind as FigureKind) || csvPaths.length === 0) {
    console.error(`usage: cli.js <${KINDS.join('|')}> <csv...> [--out DIR]`);
    return 2;
  }
  try {
    mkdirSync(outDir, { recursive: true });
    const outPath = render({
      kind: kind as FigureKind,
      csvPaths,
      outPath: join(outDir, `${kind}.svg`),
    });
    console.log(`wrote ${outPath}`);
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 1;
  }
}

if (process.argv[1] && process.argv[1].endsWith('cli.js')) {
  process.exit(main(process.argv.slice(2)));
}
