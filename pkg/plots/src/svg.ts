// Deterministic SVG line chart assembly. No timestamps, no randomness:
// the same inputs must serialize to the same bytes, since downstream
// checks diff the rendered files.

export interface Point {
  x: number;
  y: number;
}

export interface Curve {
  label: string;
  // null entries break the line so gaps in the data stay visible gaps
  points: (Point | null)[];
  color: string;
  width?: number;
  dash?: string;
}

export interface ChartOpts {
  title: string;
  xLabel: string;
  yLabel: string;
  curves: Curve[];
  // indices of the curves that set the y range; others get clipped.
  // A diverging correction term must not flatten the main curve.
  domainCurves?: number[];
  logX?: boolean;
}

// ---------------------------------------------------------------------------

const WIDTH = 760;
const HEIGHT = 480;
const MARGIN = { top: 44, right: 28, bottom: 52, left: 72 };

export function esc(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Round tick steps to a 1/2/5 mantissa so labels stay readable. */
export function niceTicks(min: number, max: number, count: number): number[] {
  if (!(max > min)) return [min];
  const span = max - min;
  const step0 = span / Math.max(1, count);
  const mag = Math.pow(10, Math.floor(Math.log10(step0)));
  let step = 10 * mag;
  for (const m of [1, 2, 5]) {
    if (m * mag >= step0) {
      step = m * mag;
      break;
    }
  }
  const ticks: number[] = [];
  const start = Math.ceil(min / step) * step;
  for (let v = start; v <= max + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

export function fmtNum(v: number): string {
  if (v === 0) return "0";
  const abs = Math.abs(v);
  if (abs >= 1e5 || abs < 1e-4) return v.toExponential(2);
  return String(parseFloat(v.toPrecision(6)));
}

function px(v: number): string {
  return v.toFixed(2);
}

// ---------------------------------------------------------------------------

interface Scale {
  (v: number): number;
}

function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return (v) => r0 + ((v - d0) / span) * (r1 - r0);
}

function pathFor(points: (Point | null)[], sx: Scale, sy: Scale): string {
  const parts: string[] = [];
  let pen = false;
  for (const p of points) {
    if (p === null) {
      pen = false;
      continue;
    }
    parts.push(`${pen ? "L" : "M"}${px(sx(p.x))} ${px(sy(p.y))}`);
    pen = true;
  }
  return parts.join(" ");
}

function domainOf(
  curves: Curve[],
  pick: (p: Point) => number,
  indices?: number[]
): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  curves.forEach((curve, i) => {
    if (indices && !indices.includes(i)) return;
    for (const p of curve.points) {
      if (p === null) continue;
      const v = pick(p);
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  });
  if (lo > hi) return [0, 1];
  if (lo === hi) return [lo - 0.5, hi + 0.5];
  return [lo, hi];
}

// ---------------------------------------------------------------------------

export function buildChart(opts: ChartOpts): string {
  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;

  const curves = opts.logX
    ? opts.curves.map((c) => ({
        ...c,
        points: c.points.map((p) =>
          p === null || p.x <= 0 ? null : { x: Math.log10(p.x), y: p.y }
        ),
      }))
    : opts.curves;

  const [x0, x1] = domainOf(curves, (p) => p.x);
  let [y0, y1] = domainOf(curves, (p) => p.y, opts.domainCurves);
  const pad = (y1 - y0) * 0.08;
  y0 -= pad;
  y1 += pad;

  const sx = linearScale(x0, x1, MARGIN.left, MARGIN.left + plotW);
  const sy = linearScale(y0, y1, MARGIN.top + plotH, MARGIN.top);

  // On a log axis ticks sit at the data x positions; nice mantissa
  // steps over an exponent range would label as fractional powers.
  let xTicks: { pos: number; label: string }[];
  if (opts.logX) {
    const seen = new Set<number>();
    for (const c of curves) {
      for (const p of c.points) {
        if (p !== null) seen.add(p.x);
      }
    }
    xTicks = [...seen]
      .sort((a, b) => a - b)
      .map((v) => ({ pos: v, label: fmtNum(Math.pow(10, v)) }));
  } else {
    xTicks = niceTicks(x0, x1, 7).map((v) => ({ pos: v, label: fmtNum(v) }));
  }
  const yTicks = niceTicks(y0, y1, 6);

  const grid: string[] = [];
  const axes: string[] = [];
  for (const t of xTicks) {
    const gx = px(sx(t.pos));
    grid.push(
      `<line x1="${gx}" y1="${MARGIN.top}" x2="${gx}" y2="${MARGIN.top + plotH}" stroke="#e4e4e4" stroke-width="1"/>`
    );
    axes.push(
      `<text x="${gx}" y="${MARGIN.top + plotH + 18}" font-size="11" text-anchor="middle" fill="#444">${esc(t.label)}</text>`
    );
  }
  for (const v of yTicks) {
    const gy = px(sy(v));
    grid.push(
      `<line x1="${MARGIN.left}" y1="${gy}" x2="${MARGIN.left + plotW}" y2="${gy}" stroke="#e4e4e4" stroke-width="1"/>`
    );
    axes.push(
      `<text x="${MARGIN.left - 8}" y="${gy}" font-size="11" text-anchor="end" dominant-baseline="middle" fill="#444">${esc(fmtNum(v))}</text>`
    );
  }

  const curveMarkup = curves
    .map((c) => {
      const dash = c.dash ? ` stroke-dasharray="${c.dash}"` : "";
      return `<path class="curve" d="${pathFor(c.points, sx, sy)}" fill="none" stroke="${c.color}" stroke-width="${c.width ?? 2}"${dash}/>`;
    })
    .join("\n    ");

  const legendX = MARGIN.left + plotW - 150;
  const legendY = MARGIN.top + 10;
  const legendRows = opts.curves
    .map((c, i) => {
      const y = legendY + 14 + i * 18;
      const dash = c.dash ? ` stroke-dasharray="${c.dash}"` : "";
      return (
        `<line x1="${legendX + 8}" y1="${y}" x2="${legendX + 34}" y2="${y}" stroke="${c.color}" stroke-width="${c.width ?? 2}"${dash}/>` +
        `<text x="${legendX + 40}" y="${y + 4}" font-size="11" fill="#222">${esc(c.label)}</text>`
      );
    })
    .join("\n    ");
  const legendH = 10 + opts.curves.length * 18;

  return `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">
  <defs>
    <clipPath id="clip"><rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}"/></clipPath>
  </defs>
  <rect width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>
  <g>
    ${grid.join("\n    ")}
  </g>
  <rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" fill="none" stroke="#888" stroke-width="1"/>
  <g clip-path="url(#clip)">
    ${curveMarkup}
  </g>
  <g>
    ${axes.join("\n    ")}
  </g>
  <text x="${WIDTH / 2}" y="24" font-size="15" text-anchor="middle" fill="#111">${esc(opts.title)}</text>
  <text x="${MARGIN.left + plotW / 2}" y="${HEIGHT - 12}" font-size="12" text-anchor="middle" fill="#222">${esc(opts.xLabel)}</text>
  <text x="18" y="${MARGIN.top + plotH / 2}" font-size="12" text-anchor="middle" fill="#222" transform="rotate(-90 18 ${MARGIN.top + plotH / 2})">${esc(opts.yLabel)}</text>
  <g>
    <rect x="${legendX}" y="${legendY}" width="142" height="${legendH}" fill="#ffffff" fill-opacity="0.85" stroke="#bbb" stroke-width="1"/>
    ${legendRows}
  </g>
</svg>
`;
}
