/**
 * Harness result CSV parsing with schema validation.
 *
 * Expected header: algo,env,seed,iteration,nodes_touched,metric,value
 * A mismatch reports the offending column by name.
 */

export interface ResultRow {
  algo: string;
  env: string;
  seed: number;
  iteration: number;
  nodes_touched: number;
  metric: string;
  value: number;
}

export const CSV_COLUMNS = [
  "algo",
  "env",
  "seed",
  "iteration",
  "nodes_touched",
  "metric",
  "value",
] as const;

const NUMERIC_COLUMNS = new Set(["seed", "iteration", "nodes_touched", "value"]);

export class SchemaError extends Error {}

export function parseResultsCsv(text: string, source = "<csv>"): ResultRow[] {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new SchemaError(`${source}: empty file`);
  }
  const header = lines[0].split(",");
  for (let i = 0; i < CSV_COLUMNS.length; i++) {
    if (header[i] !== CSV_COLUMNS[i]) {
      throw new SchemaError(
        `${source}: expected column ${i + 1} to be '${CSV_COLUMNS[i]}', found '${header[i] ?? ""}'`,
      );
    }
  }
  if (header.length !== CSV_COLUMNS.length) {
    throw new SchemaError(
      `${source}: unexpected extra column '${header[CSV_COLUMNS.length]}'`,
    );
  }
  const rows: ResultRow[] = [];
  for (let lineNo = 1; lineNo < lines.length; lineNo++) {
    const parts = lines[lineNo].split(",");
    if (parts.length !== CSV_COLUMNS.length) {
      throw new SchemaError(
        `${source}:${lineNo + 1}: expected ${CSV_COLUMNS.length} fields, found ${parts.length}`,
      );
    }
    const raw: Record<string, string> = {};
    CSV_COLUMNS.forEach((name, i) => {
      raw[name] = parts[i];
    });
    for (const name of NUMERIC_COLUMNS) {
      if (raw[name] === "" || Number.isNaN(Number(raw[name]))) {
        throw new SchemaError(
          `${source}:${lineNo + 1}: column '${name}' is not numeric: '${raw[name]}'`,
        );
      }
    }
    rows.push({
      algo: raw.algo,
      env: raw.env,
      seed: Number(raw.seed),
      iteration: Number(raw.iteration),
      nodes_touched: Number(raw.nodes_touched),
      metric: raw.metric,
      value: Number(raw.value),
    });
  }
  return rows;
}
