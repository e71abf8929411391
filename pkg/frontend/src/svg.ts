/** Deterministic SVG scene building: fixed canvas, fixed-precision
 *  coordinates, no timestamps, so identical inputs give identical bytes. */

export interface Viewport {
  /** pixel rectangle the data maps into */
  x0: number;
  y0: number;
  width: number;
  height: number;
  /** data ranges */
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

const fmt = (v: number): string => v.toFixed(2);

export function xPix(vp: Viewport, x: number): number {
  return vp.x0 + ((x - vp.xMin) / (vp.xMax - vp.xMin)) * vp.width;
}

export function yPix(vp: Viewport, y: number): number {
  return vp.y0 + vp.height - ((y - vp.yMin) / (vp.yMax - vp.yMin)) * vp.height;
}

export interface LineStyle {
  stroke: string;
  width: number;
  dash?: string;
}

export function polyline(vp: Viewport, xs: number[], ys: number[], style: LineStyle): string {
  const points: string[] = [];
  for (let i = 0; i < xs.length; i++) {
    points.push(`${fmt(xPix(vp, xs[i]))},${fmt(yPix(vp, ys[i]))}`);
  }
  const dash = style.dash ? ` stroke-dasharray="${style.dash}"` : '';
  return `<polyline fill="none" stroke="${style.stroke}" stroke-width="${style.width}"${dash} points="${points.join(' ')}"/>`;
}

export function line(x1: number, y1: number, x2: number, y2: number, style: LineStyle): string {
  const dash = style.dash ? ` stroke-dasharray="${style.dash}"` : '';
  return `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="${style.stroke}" stroke-width="${style.width}"${dash}/>`;
}

export function rect(x: number, y: number, w: number, h: number, stroke: string): string {
  return `<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(w)}" height="${fmt(h)}" fill="none" stroke="${stroke}" stroke-width="1"/>`;
}

export function text(x: number, y: number, content: string,
                     opts: { size?: number; anchor?: string; rotate?: boolean } = {}): string {
  const size = opts.size ?? 12;
  const anchor = opts.anchor ?? 'middle';
  const transform = opts.rotate ? ` transform="rotate(-90 ${fmt(x)} ${fmt(y)})"` : '';
  return `<text x="${fmt(x)}" y="${fmt(y)}" font-family="sans-serif" font-size="${size}" text-anchor="${anchor}"${transform}>${content}</text>`;
}

function niceTicks(min: number, max: number, count = 5): number[] {
  const span = max - min;
  const rawStep = span / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const candidates = [1, 2, 2.5, 5, 10].map((m) => m * mag);
  const step = candidates.find((s) => span / s <= count + 1) ?? candidates[candidates.length - 1];
  const ticks: number[] = [];
  for (let v = Math.ceil(min / step) * step; v <= max + 1e-12; v += step) {
    ticks.push(Math.abs(v) < 1e-12 ? 0 : v);
  }
  return ticks;
}

const tickLabel = (v: number): string =>
  Math.abs(v) >= 1000 || (v !== 0 && Math.abs(v) < 0.01) ? v.toExponential(1) : String(Number(v.toPrecision(6)));

/** Axis frame with ticks and labels; labels carry the units. */
export function axes(vp: Viewport, xLabel: string, yLabel: string): string {
  const parts: string[] = [];
  const bottom = vp.y0 + vp.height;
  parts.push(line(vp.x0, bottom, vp.x0 + vp.width, bottom, { stroke: '#000', width: 1 }));
  parts.push(line(vp.x0, vp.y0, vp.x0, bottom, { stroke: '#000', width: 1 }));
  for (const t of niceTicks(vp.xMin, vp.xMax)) {
    const px = xPix(vp, t);
    parts.push(line(px, bottom, px, bottom + 4, { stroke: '#000', width: 1 }));
    parts.push(text(px, bottom + 16, tickLabel(t), { size: 10 }));
  }
  for (const t of niceTicks(vp.yMin, vp.yMax)) {
    const py = yPix(vp, t);
    parts.push(line(vp.x0 - 4, py, vp.x0, py, { stroke: '#000', width: 1 }));
    parts.push(text(vp.x0 - 8, py + 3, tickLabel(t), { size: 10, anchor: 'end' }));
  }
  parts.push(text(vp.x0 + vp.width / 2, bottom + 32, xLabel));
  parts.push(text(vp.x0 - 40, vp.y0 + vp.height / 2, yLabel, { rotate: true }));
  return parts.join('\n');
}

export function document(width: number, height: number, body: string): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    `<rect x="0" y="0" width="${width}" height="${height}" fill="#ffffff"/>`,
    body,
    '</svg>',
    '',
  ].join('\n');
}
