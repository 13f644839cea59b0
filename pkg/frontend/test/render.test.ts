import { mkdtempSync, writeFileSync, readFileSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";

import { describe, expect, it } from "vitest";

import { buildFigure, renderFigure } from "../src/figure.js";
import { parseArgs } from "../src/cli.js";

const HEADER = "algo,env,seed,iteration,nodes_touched,metric,value";

function sampleCsv(): string {
  const lines = [HEADER];
  const algos = ["abcs", "bql", "es-mccfr", "max-cfr", "os-mccfr"];
  for (const algo of algos) {
    for (const seed of [0, 1, 2]) {
      for (let k = 1; k <= 5; k++) {
        const value = (1 / k) * (1 + 0.1 * seed) * (algos.indexOf(algo) + 1);
        lines.push(
          `${algo},kuhn,${seed},${k * 10},${k * 1000},exploitability,${value}`,
        );
      }
    }
  }
  return lines.join("\n") + "\n";
}

describe("figure rendering", () => {
  it("renders five labeled curves with bands on a log axis, byte-stable", () => {
    const dir = mkdtempSync(join(tmpdir(), "abcs-plot-"));
    const csv = join(dir, "kuhn.csv");
    writeFileSync(csv, sampleCsv());
    const spec = {
      csvPaths: [csv],
      metric: "exploitability",
      logY: true,
      clip: 1e-5,
      out: join(dir, "fig.svg"),
    };
    const first = buildFigure(spec);
    const second = buildFigure(spec);
    expect(first).toBe(second); // byte-stable
    expect(first.startsWith("<svg")).toBe(true);
    for (const algo of ["abcs", "bql", "es-mccfr", "max-cfr", "os-mccfr"]) {
      expect(first).toContain(`>${algo}</text>`);
    }
    expect((first.match(/<polyline/g) ?? []).length).toBe(5);
    expect((first.match(/<polygon/g) ?? []).length).toBe(5);
    renderFigure(spec);
    expect(readFileSync(spec.out, "utf-8")).toBe(first);
  });

  it("rejects an unknown metric with the available ones listed", () => {
    const dir = mkdtempSync(join(tmpdir(), "abcs-plot-"));
    const csv = join(dir, "kuhn.csv");
    writeFileSync(csv, sampleCsv());
    expect(() =>
      buildFigure({
        csvPaths: [csv],
        metric: "regret",
        logY: false,
        out: join(dir, "x.svg"),
      }),
    ).toThrowError(/exploitability/);
  });
});

describe("cli argument parsing", () => {
  it("parses the documented flag set", () => {
    const spec = parseArgs([
      "--csv", "a.csv", "b.csv",
      "--metric", "exploitability",
      "--logy",
      "--clip", "1e-5",
      "--out", "fig.svg",
    ]);
    expect(spec).toMatchObject({
      csvPaths: ["a.csv", "b.csv"],
      metric: "exploitability",
      logY: true,
      clip: 1e-5,
      out: "fig.svg",
    });
  });

  it("requires csv and metric", () => {
    expect(() => parseArgs(["--metric", "x"])).toThrowError(/--csv/);
    expect(() => parseArgs(["--csv", "a.csv"])).toThrowError(/--metric/);
  });
});
