// Figure assembly: pick columns out of the sweep rows and hand curve
// data to the chart builder. Strictly presentational; every number
// drawn here was computed upstream and read back from the CSV.

import { buildChart, Curve, Point } from "./svg";
import { EmptyDataError, parseSweepCsv, Row } from "./schema";

export type FigureId = 2 | 3 | 4;

export interface RenderOpts {
  logX?: boolean;
}

const PALETTE = ["#1f6eb4", "#c23b22", "#2c8a4b", "#8a56b0", "#8c5a44", "#c26fa8"];
const DASH = "7 5";
const DOT = "2 4";

// ---------------------------------------------------------------------------

function pt(x: number | null | undefined, y: number | null | undefined): Point | null {
  if (x == null || y == null) return null;
  return { x, y };
}

function div(a: number | null | undefined, b: number | null | undefined): number | null {
  if (a == null || b == null || b === 0) return null;
  return a / b;
}

function hasData(points: (Point | null)[]): boolean {
  return points.some((p) => p !== null);
}

// ---------------------------------------------------------------------------

/** Figures 2 and 3: energy-to-PFA ratios against r = R/d. The numeric
 *  ratio ships precomputed; the reference curves are column quotients. */
function ratioCurves(rows: Row[]): Curve[] {
  const sorted = [...rows]
    .filter((row) => row.r != null)
    .sort((a, b) => (a.r as number) - (b.r as number));

  return [
    {
      label: "num/pfa",
      points: sorted.map((row) => pt(row.r, row.ratio_num_pfa)),
      color: PALETTE[0],
    },
    {
      label: "asym/pfa",
      points: sorted.map((row) => pt(row.r, div(row.E_asym, row.E_pfa))),
      color: PALETTE[1],
      dash: DASH,
    },
    {
      label: "gradexp/pfa",
      points: sorted.map((row) => pt(row.r, div(row.E_gradexp, row.E_pfa))),
      color: PALETTE[2],
      dash: DOT,
    },
  ];
}

/** Figure 4: one rescaled-energy curve per r value, plus the shared
 *  large-distance asymptote. Self-normalized, so every curve passes
 *  through 1 at theta = pi/2. */
function omegaCurves(rows: Row[]): Curve[] {
  const byR = new Map<number, Row[]>();
  for (const row of rows) {
    if (row.r == null || row.theta == null) continue;
    const bucket = byR.get(row.r);
    if (bucket) bucket.push(row);
    else byR.set(row.r, [row]);
  }

  const curves: Curve[] = [...byR.keys()]
    .sort((a, b) => a - b)
    .map((r, i) => ({
      label: `r=${r}`,
      points: (byR.get(r) as Row[])
        .slice()
        .sort((a, b) => (a.theta as number) - (b.theta as number))
        .map((row) => pt(row.theta, row.omega_ratio)),
      color: PALETTE[i % PALETTE.length],
    }));

  // the asymptote repeats identically inside every r block; keep the
  // first value seen per theta
  const asym = new Map<number, number>();
  for (const row of rows) {
    if (row.theta == null || row.omega_ratio_asym == null) continue;
    if (!asym.has(row.theta)) asym.set(row.theta, row.omega_ratio_asym);
  }
  curves.push({
    label: "asym",
    points: [...asym.keys()].sort((a, b) => a - b).map((th) => ({
      x: th,
      y: asym.get(th) as number,
    })),
    color: "#555555",
    dash: DASH,
  });
  return curves;
}

// ---------------------------------------------------------------------------

export function renderFigure(csvText: string, figure: FigureId, opts: RenderOpts = {}): string {
  const { rows } = parseSweepCsv(csvText);

  if (figure === 4) {
    const curves = omegaCurves(rows);
    const solid = curves.slice(0, -1);
    if (solid.length === 0 || !solid.some((c) => hasData(c.points))) {
      throw new EmptyDataError("no plottable rows: omega_ratio is empty");
    }
    return buildChart({
      title: "figure 4: rescaled energy vs inclination",
      xLabel: "theta (rad)",
      yLabel: "E(theta) sin(theta) / E(pi/2)",
      curves,
      logX: false,
    });
  }

  const curves = ratioCurves(rows);
  if (!hasData(curves[0].points)) {
    throw new EmptyDataError("no plottable rows: ratio_num_pfa is empty");
  }
  // the gradient-expansion quotient diverges once the gap is no longer
  // small; it must not set the scale of the plot
  return buildChart({
    title: `figure ${figure}: energy vs PFA`,
    xLabel: "r = R/d",
    yLabel: "E / E_pfa",
    curves,
    domainCurves: [0, 1],
    logX: opts.logX ?? false,
  });
}
