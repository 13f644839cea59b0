/** Figure assembly: CSVs in, one SVG out. */

import { readFileSync, writeFileSync } from "fs";

import { parseResultsCsv, ResultRow } from "./csv.js";
import { aggregateCurves } from "./stats.js";
import { renderSvg } from "./svg.js";

export interface FigureSpec {
  csvPaths: string[];
  metric: string;
  logY: boolean;
  clip?: number;
  normalizeX?: boolean;
  out: string;
  title?: string;
}

export function buildFigure(spec: FigureSpec): string {
  if (spec.logY && spec.clip !== undefined && spec.clip <= 0) {
    throw new Error("log scale requires a strictly positive clip floor");
  }
  const rows: ResultRow[] = [];
  for (const path of spec.csvPaths) {
    rows.push(...parseResultsCsv(readFileSync(path, "utf-8"), path));
  }
  const metrics = new Set(rows.map((r) => r.metric));
  if (!metrics.has(spec.metric)) {
    throw new Error(
      `metric '${spec.metric}' not present; available: ${[...metrics].sort().join(", ")}`,
    );
  }
  const curves = aggregateCurves(rows, {
    metric: spec.metric,
    clip: spec.clip,
    normalizeX: spec.normalizeX,
  });
  const envs = [...new Set(rows.map((r) => r.env))].sort().join("+");
  const title = spec.title ?? `${envs}: ${spec.metric}`;
  return renderSvg(curves, {
    title,
    xLabel: spec.normalizeX ? "fraction of nodes touched" : "nodes touched",
    yLabel: spec.metric,
    logY: spec.logY,
  });
}

export function renderFigure(spec: FigureSpec): void {
  const svg = buildFigure(spec);
  writeFileSync(spec.out, svg, "utf-8");
}
