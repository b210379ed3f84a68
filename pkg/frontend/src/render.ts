// Pure geometry helpers behind the SVG view: scales, path strings, and
// the scene description (what gets drawn where). Kept DOM-free so the
// drag behavior is testable headless.

export type Scale = (v: number) => number;

export function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0;
  return (v: number) => r0 + ((v - d0) / span) * (r1 - r0);
}

export function curvePath(samples: number[][], sx: Scale, sy: Scale): string {
  const parts: string[] = [];
  for (let i = 0; i < samples.length; i++) {
    const cmd = i === 0 ? "M" : "L";
    parts.push(`${cmd}${sx(samples[i][0])} ${sy(samples[i][1])}`);
  }
  return parts.join(" ");
}

export interface ScenePoint {
  x: number;
  y: number;
}

export interface SceneHandle {
  index: number;
  x: number;
}

export interface Scene {
  points: ScenePoint[];
  handles: SceneHandle[];
}

// one dot per data site, one handle per knot
export function buildScene(tau: number[], F: number[], knots: number[]): Scene {
  return {
    points: tau.map((x, i) => ({ x, y: F[i] })),
    handles: knots.map((x, index) => ({ index, x })),
  };
}

export function valueRange(F: number[]): [number, number] {
  let lo = Math.min(...F);
  let hi = Math.max(...F);
  if (lo === hi) {
    lo -= 1;
    hi += 1;
  }
  const pad = 0.08 * (hi - lo);
  return [lo - pad, hi + pad];
}
