// Pure knot-drag model. Each handle k owns the data interval
// (tau[k], tau[k+1]); confining it there means handles can never cross
// or leave the data range, no neighbor checks needed.

// fraction of the interval width kept clear of an open endpoint
const EDGE_MARGIN = 1e-6;

export interface KnotBounds {
  lo: number;
  hi: number;
}

export function knotBounds(tau: number[], k: number): KnotBounds {
  if (k < 0 || k >= tau.length - 1) {
    throw new RangeError(`handle ${k} out of range for ${tau.length} sites`);
  }
  const width = tau[k + 1] - tau[k];
  const margin = EDGE_MARGIN * width;
  // first handle may sit on the left end, last handle on the right end;
  // every other endpoint is open
  const lo = k === 0 ? tau[0] : tau[k] + margin;
  const hi = k === tau.length - 2 ? tau[k + 1] : tau[k + 1] - margin;
  return { lo, hi };
}

export function clampKnot(tau: number[], k: number, x: number): number {
  const { lo, hi } = knotBounds(tau, k);
  if (Number.isNaN(x)) return lo;
  return Math.min(hi, Math.max(lo, x));
}

// returns a new knot vector; the untouched entries are kept as-is so a
// drag changes exactly one float
export function moveKnot(tau: number[], knots: number[], k: number, x: number): number[] {
  const next = knots.slice();
  next[k] = clampKnot(tau, k, x);
  return next;
}

export function centeredKnots(tau: number[]): number[] {
  const knots: number[] = [];
  for (let k = 0; k < tau.length - 1; k++) {
    if (k === 0) knots.push(tau[0]);
    else if (k === tau.length - 2) knots.push(tau[k + 1]);
    else knots.push(0.5 * (tau[k] + tau[k + 1]));
  }
  return knots;
}

export function validKnots(tau: number[], knots: number[]): boolean {
  if (knots.length !== tau.length - 1) return false;
  for (let k = 0; k < knots.length; k++) {
    const x = knots[k];
    if (k > 0 && !(x > knots[k - 1])) return false;
    if (k === 0 ? x < tau[0] : x <= tau[k]) return false;
    if (k === knots.length - 1 ? x > tau[k + 1] : x >= tau[k + 1]) return false;
  }
  return true;
}
