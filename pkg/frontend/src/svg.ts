/**
 * Deterministic SVG rendering: fixed layout, fixed palette, fixed number
 * formatting — identical input produces byte-identical output.
 */

import { Curve } from "./stats.js";

export interface PlotOptions {
  title: string;
  xLabel: string;
  yLabel: string;
  logY: boolean;
  width?: number;
  height?: number;
}

const PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];
const MARGIN = { left: 70, right: 20, top: 36, bottom: 48 };

function fmt(x: number): string {
  if (!Number.isFinite(x)) return "0";
  return Number(x.toFixed(3)).toString();
}

function tickLabel(v: number): string {
  if (v === 0) return "0";
  const exp = Math.log10(Math.abs(v));
  if (exp >= 5 || exp < -3) {
    return v.toExponential(0).replace("+", "");
  }
  return Number(v.toPrecision(3)).toString();
}

interface Scale {
  (v: number): number;
  ticks: number[];
}

function linearScale(lo: number, hi: number, outLo: number, outHi: number): Scale {
  const span = hi - lo || 1;
  const s = ((v: number) => outLo + ((v - lo) / span) * (outHi - outLo)) as Scale;
  const step = niceStep(span / 5);
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + 1e-12 * span; t += step) {
    ticks.push(Number(t.toPrecision(12)));
  }
  s.ticks = ticks;
  return s;
}

function logScale(lo: number, hi: number, outLo: number, outHi: number): Scale {
  const llo = Math.log10(lo);
  const lhi = Math.log10(hi);
  const span = lhi - llo || 1;
  const s = ((v: number) => outLo + ((Math.log10(v) - llo) / span) * (outHi - outLo)) as Scale;
  const ticks: number[] = [];
  for (let e = Math.ceil(llo); e <= Math.floor(lhi); e++) {
    ticks.push(Math.pow(10, e));
  }
  if (ticks.length === 0) ticks.push(lo, hi);
  s.ticks = ticks;
  return s;
}

function niceStep(raw: number): number {
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const unit = raw / mag;
  const nice = unit >= 5 ? 10 : unit >= 2 ? 5 : unit >= 1 ? 2 : 1;
  return nice * mag;
}

export function renderSvg(curves: Curve[], opts: PlotOptions): string {
  const width = opts.width ?? 720;
  const height = opts.height ?? 480;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const pts = curves.flatMap((c) => c.points);
  const xs = pts.map((p) => p.x);
  const ys = pts.flatMap((p) => [p.lo, p.hi, p.mean]);
  const posYs = ys.filter((y) => y > 0);
  const xLo = xs.length ? Math.min(...xs) : 0;
  const xHi = xs.length ? Math.max(...xs) : 1;
  let yLo: number;
  let yHi: number;
  if (opts.logY) {
    yLo = posYs.length ? Math.min(...posYs) : 1e-6;
    yHi = posYs.length ? Math.max(...posYs) : 1;
  } else {
    yLo = ys.length ? Math.min(...ys) : 0;
    yHi = ys.length ? Math.max(...ys) : 1;
  }
  const xScale = linearScale(xLo, xHi, MARGIN.left, MARGIN.left + plotW);
  const yScale = (opts.logY ? logScale : linearScale)(
    yLo,
    yHi,
    MARGIN.top + plotH,
    MARGIN.top,
  );

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="#ffffff"/>`);
  parts.push(
    `<text x="${width / 2}" y="20" text-anchor="middle" font-size="15">${escapeXml(opts.title)}</text>`,
  );

  // axes and grid
  for (const t of xScale.ticks) {
    const x = fmt(xScale(t));
    parts.push(
      `<line x1="${x}" y1="${MARGIN.top}" x2="${x}" y2="${MARGIN.top + plotH}" stroke="#e0e0e0" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${x}" y="${MARGIN.top + plotH + 18}" text-anchor="middle" font-size="11">${tickLabel(t)}</text>`,
    );
  }
  for (const t of yScale.ticks) {
    const y = fmt(yScale(t));
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${MARGIN.left + plotW}" y2="${y}" stroke="#e0e0e0" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 6}" y="${y}" text-anchor="end" dominant-baseline="middle" font-size="11">${tickLabel(t)}</text>`,
    );
  }
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" fill="none" stroke="#333333"/>`,
  );
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${height - 10}" text-anchor="middle" font-size="12">${escapeXml(opts.xLabel)}</text>`,
  );
  parts.push(
    `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" font-size="12" transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">${escapeXml(opts.yLabel)}</text>`,
  );

  // bands then lines, one color per curve
  curves.forEach((curve, i) => {
    if (curve.points.length === 0) return;
    const color = PALETTE[i % PALETTE.length];
    const upper = curve.points.map((p) => `${fmt(xScale(p.x))},${fmt(yScale(clampY(p.hi, yLo, opts.logY)))}`);
    const lower = [...curve.points]
      .reverse()
      .map((p) => `${fmt(xScale(p.x))},${fmt(yScale(clampY(p.lo, yLo, opts.logY)))}`);
    parts.push(
      `<polygon points="${upper.join(" ")} ${lower.join(" ")}" fill="${color}" fill-opacity="0.18" stroke="none"/>`,
    );
    const line = curve.points
      .map((p) => `${fmt(xScale(p.x))},${fmt(yScale(clampY(p.mean, yLo, opts.logY)))}`)
      .join(" ");
    parts.push(
      `<polyline points="${line}" fill="none" stroke="${color}" stroke-width="1.8"/>`,
    );
  });

  // legend
  curves.forEach((curve, i) => {
    const color = PALETTE[i % PALETTE.length];
    const y = MARGIN.top + 14 + i * 16;
    const x = MARGIN.left + plotW - 150;
    parts.push(
      `<line x1="${x}" y1="${y}" x2="${x + 22}" y2="${y}" stroke="${color}" stroke-width="2"/>`,
    );
    parts.push(
      `<text x="${x + 28}" y="${y + 4}" font-size="12">${escapeXml(curve.label)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}

function clampY(v: number, yLo: number, logY: boolean): number {
  if (logY && v < yLo) return yLo;
  return v;
}

function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
