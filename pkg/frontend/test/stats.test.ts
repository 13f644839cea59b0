import { describe, expect, it } from "vitest";

import { ResultRow } from "../src/csv.js";
import { aggregateCurves, sampleSd } from "../src/stats.js";

function row(algo: string, seed: number, nodes: number, value: number): ResultRow {
  return {
    algo,
    env: "kuhn",
    seed,
    iteration: nodes,
    nodes_touched: nodes,
    metric: "exploitability",
    value,
  };
}

describe("aggregateCurves", () => {
  it("single seed collapses the band onto the curve", () => {
    const curves = aggregateCurves(
      [row("abcs", 0, 100, 0.5), row("abcs", 0, 200, 0.25)],
      { metric: "exploitability" },
    );
    expect(curves).toHaveLength(1);
    for (const p of curves[0].points) {
      expect(p.lo).toBe(p.mean);
      expect(p.hi).toBe(p.mean);
    }
  });

  it("identical seeds give a zero-width band", () => {
    const rows = [0, 1, 2].flatMap((seed) => [
      row("abcs", seed, 100, 0.5),
      row("abcs", seed, 200, 0.25),
    ]);
    const curves = aggregateCurves(rows, { metric: "exploitability" });
    for (const p of curves[0].points) {
      expect(p.hi - p.lo).toBe(0);
      expect(p.n).toBe(3);
    }
  });

  it("computes mean +- 1.96 sd/sqrt(n)", () => {
    const rows = [
      row("abcs", 0, 100, 0.2),
      row("abcs", 1, 100, 0.4),
      row("abcs", 2, 100, 0.6),
    ];
    const [curve] = aggregateCurves(rows, { metric: "exploitability" });
    const sd = sampleSd([0.2, 0.4, 0.6]);
    expect(curve.points[0].mean).toBeCloseTo(0.4, 12);
    expect(curve.points[0].hi).toBeCloseTo(0.4 + (1.96 * sd) / Math.sqrt(3), 12);
  });

  it("drops grid points missing for some seed instead of interpolating", () => {
    const rows = [
      row("abcs", 0, 100, 0.5),
      row("abcs", 0, 200, 0.25),
      row("abcs", 1, 100, 0.5),
    ];
    const [curve] = aggregateCurves(rows, { metric: "exploitability" });
    expect(curve.points).toHaveLength(1);
  });

  it("clips values at the floor", () => {
    const rows = [row("abcs", 0, 100, 1e-9)];
    const [curve] = aggregateCurves(rows, {
      metric: "exploitability",
      clip: 1e-5,
    });
    expect(curve.points[0].mean).toBe(1e-5);
  });

  it("separates algorithms into labeled curves sorted by name", () => {
    const rows = [row("es-mccfr", 0, 100, 0.1), row("abcs", 0, 100, 0.2)];
    const curves = aggregateCurves(rows, { metric: "exploitability" });
    expect(curves.map((c) => c.label)).toEqual(["abcs", "es-mccfr"]);
  });

  it("normalizes x to the fraction of the total budget", () => {
    const rows = [row("abcs", 0, 100, 0.5), row("abcs", 0, 200, 0.25)];
    const [curve] = aggregateCurves(rows, {
      metric: "exploitability",
      normalizeX: true,
    });
    expect(curve.points.map((p) => p.x)).toEqual([0.5, 1]);
  });
});
