#!/usr/bin/env node
/**
 * abcs-plot --csv results1.csv [results2.csv ...] --metric exploitability \
 *           [--logy] [--clip 1e-5] [--normalize-x] [--title T] --out fig.svg
 *
 * Reads harness result CSVs and writes one SVG figure: one curve per
 * algorithm (mean over seeds) with a shaded 95% confidence band. Output is
 * always SVG markup regardless of the --out extension.
 */

import { renderFigure, FigureSpec } from "./figure.js";

export function parseArgs(argv: string[]): FigureSpec {
  const csvPaths: string[] = [];
  let metric: string | undefined;
  let logY = false;
  let clip: number | undefined;
  let normalizeX = false;
  let out = "fig.svg";
  let title: string | undefined;
  let i = 0;
  const next = (flag: string): string => {
    if (i + 1 >= argv.length) throw new Error(`${flag} expects a value`);
    i += 1;
    return argv[i];
  };
  for (; i < argv.length; i++) {
    const arg = argv[i];
    switch (arg) {
      case "--csv":
        csvPaths.push(next("--csv"));
        while (i + 1 < argv.length && !argv[i + 1].startsWith("--")) {
          i += 1;
          csvPaths.push(argv[i]);
        }
        break;
      case "--metric":
        metric = next("--metric");
        break;
      case "--logy":
        logY = true;
        break;
      case "--clip":
        clip = Number(next("--clip"));
        if (Number.isNaN(clip)) throw new Error("--clip expects a number");
        break;
      case "--normalize-x":
        normalizeX = true;
        break;
      case "--out":
        out = next("--out");
        break;
      case "--title":
        title = next("--title");
        break;
      default:
        throw new Error(`unknown flag '${arg}'`);
    }
  }
  if (csvPaths.length === 0) throw new Error("--csv is required");
  if (!metric) throw new Error("--metric is required");
  return { csvPaths, metric, logY, clip, normalizeX, out, title };
}

export function main(argv: string[]): number {
  try {
    const spec = parseArgs(argv);
    if (!spec.out.endsWith(".svg")) {
      process.stderr.write(
        `note: output is SVG markup even though '${spec.out}' has no .svg extension\n`,
      );
    }
    renderFigure(spec);
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 2;
  }
  return 0;
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
