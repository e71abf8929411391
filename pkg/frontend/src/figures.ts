/** Figure builders for the three reference plots: the knob-switching
 *  time-series pair, the two-manifold level diagram, and the Rabi-overlap
 *  trace with the equal-superposition instants marked. */

import { CsvTable, channel, requireChannels } from './csv.js';
import { Viewport, axes, document as svgDoc, line, polyline, rect, text, yPix, xPix } from './svg.js';

export type FigureKind = 'knob-switch' | 'spectrum' | 'phase-rabi';

export interface PlotSpec {
  kind: FigureKind;
  csvPaths: string[];
  outPath: string;
}

const WIDTH = 720;
const PANEL_HEIGHT = 260;
const MARGIN = { left: 64, right: 16, top: 28, bottom: 48 };
const SQRT_HALF = Math.SQRT1_2;

function panelViewport(panelIndex: number, xMin: number, xMax: number,
                       yMin: number, yMax: number): Viewport {
  return {
    x0: MARGIN.left,
    y0: MARGIN.top + panelIndex * PANEL_HEIGHT,
    width: WIDTH - MARGIN.left - MARGIN.right,
    height: PANEL_HEIGHT - MARGIN.top - MARGIN.bottom,
    xMin, xMax, yMin, yMax,
  };
}

/** Two panels (knob ground / knob excited); resonator 1 thick, resonator 2
 *  thin; exact Hamiltonian solid, effective dashed. */
export function knobSwitchFigure(table: CsvTable): string {
  const needed = ['t'];
  for (const ch of ['n1', 'n2']) {
    for (const kind of ['full', 'eff']) {
      for (const knob of ['g', 'e']) {
        needed.push(`${ch}_${kind}_knob_${knob}`);
      }
    }
  }
  requireChannels(table, needed);
  const t = channel(table, 't');
  const parts: string[] = [];
  const panels: Array<{ knob: 'g' | 'e'; title: string }> = [
    { knob: 'g', title: '(a) knob qubit in its ground state (hopping off)' },
    { knob: 'e', title: '(b) knob qubit excited (hopping on)' },
  ];
  panels.forEach(({ knob, title }, i) => {
    const vp = panelViewport(i, t[0], t[t.length - 1], 0, 1.05);
    parts.push(axes(vp, 't  (units of 1/g)', 'polariton number'));
    parts.push(text(vp.x0 + vp.width / 2, vp.y0 - 8, title, { size: 13 }));
    const styles = [
      { ch: `n1_full_knob_${knob}`, style: { stroke: '#1f4e9c', width: 2.2 } },
      { ch: `n2_full_knob_${knob}`, style: { stroke: '#1f4e9c', width: 1.0 } },
      { ch: `n1_eff_knob_${knob}`, style: { stroke: '#c03020', width: 2.2, dash: '6,4' } },
      { ch: `n2_eff_knob_${knob}`, style: { stroke: '#c03020', width: 1.0, dash: '6,4' } },
    ];
    for (const { ch, style } of styles) {
      parts.push(polyline(vp, t, channel(table, ch), style));
    }
  });
  const legendY = 2 * PANEL_HEIGHT + 6;
  parts.push(text(MARGIN.left, legendY, 'solid: exact H   dashed: effective H   thick: resonator 1   thin: resonator 2', { anchor: 'start', size: 11 }));
  return svgDoc(WIDTH, 2 * PANEL_HEIGHT + 24, parts.join('\n'));
}

/** Sixteen horizontal level lines, lower and upper manifold in separate
 *  panels so the meV-scale structure inside each group stays visible. */
export function spectrumFigure(table: CsvTable): string {
  requireChannels(table, ['index', 'relative_to_E1']);
  const index = channel(table, 'index');
  const energy = channel(table, 'relative_to_E1');
  const groups = [
    { name: 'knob-excited manifold (delocalized regime)', levels: [] as number[][] },
    { name: 'knob-ground manifold (localized regime)', levels: [] as number[][] },
  ];
  for (let i = 0; i < index.length; i++) {
    (index[i] <= 8 ? groups[1] : groups[0]).levels.push([index[i], energy[i]]);
  }
  const parts: string[] = [];
  groups.forEach((group, panel) => {
    const values = group.levels.map(([, e]) => e);
    const lo = Math.min(...values);
    const hi = Math.max(...values);
    const pad = (hi - lo) * 0.08 + 0.05;
    const vp = panelViewport(panel, 0, 1, lo - pad, hi + pad);
    parts.push(axes(vp, '', 'E - E_1  (units of g)'));
    parts.push(text(vp.x0 + vp.width / 2, vp.y0 - 8, group.name, { size: 13 }));
    for (const [idx, e] of group.levels) {
      const py = yPix(vp, e);
      parts.push(line(xPix(vp, 0.15), py, xPix(vp, 0.85), py, { stroke: '#1f4e9c', width: 1.6 }));
      parts.push(text(xPix(vp, 0.88), py + 3, `E_${idx}`, { size: 9, anchor: 'start' }));
    }
  });
  return svgDoc(WIDTH, 2 * PANEL_HEIGHT + 24, parts.join('\n'));
}

/** Both overlap channels with the sqrt(1/2) guide line; instants where both
 *  channels sit within 0.05 of sqrt(1/2) are marked with small rectangles. */
export function phaseRabiFigure(table: CsvTable): string {
  requireChannels(table, ['t', 'overlap_psi1', 'overlap_phi1e']);
  const t = channel(table, 't');
  const o1 = channel(table, 'overlap_psi1');
  const o2 = channel(table, 'overlap_phi1e');
  const vp = panelViewport(0, t[0], t[t.length - 1], 0, 1.05);
  const parts: string[] = [];
  parts.push(axes(vp, 't  (units of 1/g)', 'overlap magnitude'));
  parts.push(text(vp.x0 + vp.width / 2, vp.y0 - 8,
    'Rabi oscillation between the localized and delocalized photon phases', { size: 13 }));
  const guideY = yPix(vp, SQRT_HALF);
  parts.push(line(vp.x0, guideY, vp.x0 + vp.width, guideY,
    { stroke: '#888888', width: 0.8, dash: '2,3' }));
  parts.push(polyline(vp, t, o1, { stroke: '#1f4e9c', width: 1.8 }));
  parts.push(polyline(vp, t, o2, { stroke: '#c03020', width: 1.8, dash: '6,4' }));

  // contiguous runs where both channels are near sqrt(1/2): one marker each
  const near = (v: number) => Math.abs(v - SQRT_HALF) <= 0.05;
  let runStart = -1;
  const markers: number[] = [];
  for (let i = 0; i <= t.length; i++) {
    const inRun = i < t.length && near(o1[i]) && near(o2[i]);
    if (inRun && runStart < 0) runStart = i;
    if (!inRun && runStart >= 0) {
      markers.push(Math.floor((runStart + i - 1) / 2));
      runStart = -1;
    }
  }
  for (const i of markers) {
    const px = xPix(vp, t[i]);
    parts.push(rect(px - 5, guideY - 9, 10, 18, '#000000'));
  }
  parts.push(text(MARGIN.left, PANEL_HEIGHT + 6,
    'solid: |<psi_1|Psi(t)>|   dashed: |<e^c,phi_1|Psi(t)>|   rectangles: equal-superposition instants', { anchor: 'start', size: 11 }));
  return svgDoc(WIDTH, PANEL_HEIGHT + 24, parts.join('\n'));
}

export function buildFigure(kind: FigureKind, table: CsvTable): string {
  switch (kind) {
    case 'knob-switch':
      return knobSwitchFigure(table);
    case 'spectrum':
      return spectrumFigure(table);
    case 'phase-rabi':
      return phaseRabiFigure(table);
  }
}
