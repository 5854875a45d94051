// Sweep CSV loading and header validation.
//
// The renderer only consumes the sweep table written by `cylcas figure`
// (and `cylcas sweep`), so the expected header is fixed. Extra columns
// are tolerated (raw-unit dumps append a couple); missing ones are a
// hard error so a truncated or hand-edited file fails loudly instead of
// producing an empty-looking plot.

import Papa from "papaparse";

// ---------------------------------------------------------------------------

export const SWEEP_COLUMNS = [
  "r",
  "theta",
  "E_num",
  "E_pfa",
  "E_asym",
  "E_gradexp",
  "ratio_num_pfa",
  "omega_ratio",
  "omega_ratio_asym",
] as const;

export type Row = Record<string, number | null>;

export class SchemaError extends Error {
  missing: string[];

  constructor(missing: string[], found: string[]) {
    super(
      `csv header does not match the sweep schema; ` +
        `missing columns: ${missing.join(", ")} ` +
        `(found: ${found.join(", ") || "none"})`
    );
    this.name = "SchemaError";
    this.missing = missing;
  }
}

export class EmptyDataError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "EmptyDataError";
  }
}

// ---------------------------------------------------------------------------

function toNumber(value: unknown): number | null {
  if (value === null || value === undefined) return null;
  const text = String(value).trim();
  if (text === "") return null;
  const num = Number(text);
  return Number.isFinite(num) ? num : null;
}

/** Parse CSV text and check the header. Cell values become numbers;
 *  blanks and non-numeric cells become null. */
export function parseSweepCsv(text: string): { columns: string[]; rows: Row[] } {
  const parsed = Papa.parse<Record<string, unknown>>(text, {
    header: true,
    skipEmptyLines: true,
  });
  const columns = (parsed.meta.fields ?? []).map((c) => c.trim());

  const missing = SWEEP_COLUMNS.filter((c) => !columns.includes(c));
  if (missing.length > 0) {
    throw new SchemaError(missing, columns);
  }

  const rows: Row[] = parsed.data.map((raw) => {
    const row: Row = {};
    for (const col of columns) {
      row[col] = toNumber(raw[col]);
    }
    return row;
  });
  return { columns, rows };
}
