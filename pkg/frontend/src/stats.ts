/**
 * Per-curve aggregation: group one metric's rows by algorithm, align seeds on
 * the nodes-touched grid, and compute mean with a 95% confidence band
 * (mean +- 1.96 * sd / sqrt(n)). Grid points missing for some seed are
 * dropped from that point, never interpolated.
 */

import { ResultRow } from "./csv.js";

export interface CurvePoint {
  x: number;
  mean: number;
  lo: number;
  hi: number;
  n: number;
}

export interface Curve {
  label: string;
  points: CurvePoint[];
}

export interface AggregateOptions {
  metric: string;
  clip?: number;
  normalizeX?: boolean;
}

export function aggregateCurves(rows: ResultRow[], opts: AggregateOptions): Curve[] {
  const byAlgo = new Map<string, ResultRow[]>();
  for (const row of rows) {
    if (row.metric !== opts.metric) continue;
    const bucket = byAlgo.get(row.algo);
    if (bucket) bucket.push(row);
    else byAlgo.set(row.algo, [row]);
  }
  const curves: Curve[] = [];
  for (const algo of [...byAlgo.keys()].sort()) {
    const algoRows = byAlgo.get(algo)!;
    // per seed, order evaluation points by nodes touched
    const seeds = new Map<number, ResultRow[]>();
    for (const row of algoRows) {
      const s = seeds.get(row.seed);
      if (s) s.push(row);
      else seeds.set(row.seed, [row]);
    }
    for (const list of seeds.values()) {
      list.sort((a, b) => a.nodes_touched - b.nodes_touched);
    }
    // align seeds by evaluation index: the harness emits points on a fixed
    // nodes-touched grid, but the exact node count at a grid mark varies a
    // little per seed, so the k-th evaluation is the alignment unit and the
    // x value is the mean node count at that index.
    const maxLen = Math.max(...[...seeds.values()].map((l) => l.length));
    const points: CurvePoint[] = [];
    const total = Math.max(...algoRows.map((r) => r.nodes_touched));
    for (let k = 0; k < maxLen; k++) {
      const values: number[] = [];
      const xs: number[] = [];
      for (const list of seeds.values()) {
        if (k < list.length) {
          values.push(clipValue(list[k].value, opts.clip));
          xs.push(list[k].nodes_touched);
        }
      }
      if (values.length !== seeds.size) continue; // incomplete point: drop
      const mean = avg(values);
      const half = values.length > 1 ? (1.96 * sampleSd(values)) / Math.sqrt(values.length) : 0;
      const x = opts.normalizeX ? avg(xs) / total : avg(xs);
      points.push({
        x,
        mean,
        lo: clipValue(mean - half, opts.clip),
        hi: mean + half,
        n: values.length,
      });
    }
    curves.push({ label: algo, points });
  }
  return curves;
}

function clipValue(v: number, clip?: number): number {
  return clip !== undefined && v < clip ? clip : v;
}

function avg(xs: number[]): number {
  return xs.reduce((a, b) => a + b, 0) / xs.length;
}

export function sampleSd(xs: number[]): number {
  const m = avg(xs);
  const ss = xs.reduce((a, x) => a + (x - m) * (x - m), 0);
  return Math.sqrt(ss / (xs.length - 1));
}
