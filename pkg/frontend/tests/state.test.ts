import { describe, expect, it } from "vitest";

import { centeredKnots, clampKnot, knotBounds, moveKnot, validKnots } from "../src/state.js";

const TAU = [7.99, 8.09, 8.19, 8.7, 9.2, 10.0, 12.0, 15.0, 20.0];

// deterministic LCG so fuzz failures reproduce
function lcg(seed: number): () => number {
  let s = seed >>> 0;
  return () => {
    s = (s * 1664525 + 1013904223) >>> 0;
    return s / 2 ** 32;
  };
}

describe("knotBounds", () => {
  it("closes the outer ends and opens every interior endpoint", () => {
    const first = knotBounds(TAU, 0);
    expect(first.lo).toBe(TAU[0]);
    expect(first.hi).toBeLessThan(TAU[1]);

    const last = knotBounds(TAU, TAU.length - 2);
    expect(last.hi).toBe(TAU[TAU.length - 1]);
    expect(last.lo).toBeGreaterThan(TAU[TAU.length - 2]);

    const mid = knotBounds(TAU, 3);
    expect(mid.lo).toBeGreaterThan(TAU[3]);
    expect(mid.hi).toBeLessThan(TAU[4]);
  });

  it("rejects out-of-range handles", () => {
    expect(() => knotBounds(TAU, -1)).toThrow(RangeError);
    expect(() => knotBounds(TAU, TAU.length - 1)).toThrow(RangeError);
  });
});

describe("clampKnot", () => {
  it("passes interior targets through untouched", () => {
    // bitwise: a clean drag must not perturb the requested float
    expect(clampKnot(TAU, 5, 10.1)).toBe(10.1);
    expect(clampKnot(TAU, 6, 12.1)).toBe(12.1);
  });

  it("clamps runaway targets into the handle's own interval", () => {
    expect(clampKnot(TAU, 3, -100)).toBe(knotBounds(TAU, 3).lo);
    expect(clampKnot(TAU, 3, 100)).toBe(knotBounds(TAU, 3).hi);
    expect(clampKnot(TAU, 0, 0)).toBe(TAU[0]);
    expect(clampKnot(TAU, 7, 1e9)).toBe(TAU[8]);
  });

  it("maps NaN to the lower bound instead of poisoning state", () => {
    expect(clampKnot(TAU, 2, Number.NaN)).toBe(knotBounds(TAU, 2).lo);
  });
});

describe("moveKnot", () => {
  it("changes exactly one entry", () => {
    const knots = centeredKnots(TAU);
    const next = moveKnot(TAU, knots, 5, 10.1);
    expect(next).not.toBe(knots);
    for (let k = 0; k < knots.length; k++) {
      if (k !== 5) expect(next[k]).toBe(knots[k]);
    }
    expect(next[5]).toBe(10.1);
  });
});

describe("centeredKnots", () => {
  it("pins the ends to the data range and centers the rest", () => {
    const knots = centeredKnots(TAU);
    expect(knots).toHaveLength(TAU.length - 1);
    expect(knots[0]).toBe(TAU[0]);
    expect(knots[knots.length - 1]).toBe(TAU[TAU.length - 1]);
    expect(knots[3]).toBeCloseTo(0.5 * (TAU[3] + TAU[4]), 12);
    expect(validKnots(TAU, knots)).toBe(true);
  });
});

describe("drag fuzzing", () => {
  it("500 scripted drags never cross handles or leave their intervals", () => {
    const rand = lcg(20240817);
    let knots = centeredKnots(TAU);
    const lo = TAU[0] - 5;
    const span = TAU[TAU.length - 1] - lo + 10;
    for (let event = 0; event < 500; event++) {
      const k = Math.floor(rand() * knots.length);
      const target = lo + rand() * span;
      knots = moveKnot(TAU, knots, k, target);
      expect(validKnots(TAU, knots)).toBe(true);
      for (let j = 1; j < knots.length; j++) {
        expect(knots[j]).toBeGreaterThan(knots[j - 1]);
      }
    }
  });
});
