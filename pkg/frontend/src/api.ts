// Thin client for the curve service; same-origin by default.

const BASE_URL = "";

export interface SegmentDto {
  x_lo: number;
  x_hi: number;
  f_lo: number;
  f_hi: number;
  d_lo: number;
  d_hi: number;
  A: number;
  B: number;
}

export interface KnotEstimateDto {
  i: number;
  tau: number;
  C1: number;
  C2: number;
  f1_est: number;
  f2_est: number;
  delta1: number;
  delta2_raw: number;
  h_bar: number;
}

export interface CurveDto {
  knots: number[];
  segments: SegmentDto[];
  samples: number[][];
  knot_estimates: KnotEstimateDto[];
}

export interface FixtureDto {
  name: string;
  tau: number[];
  F: number[];
  presets: Record<string, number[]>;
}

export interface CurveRequest {
  tau: number[];
  F: number[];
  knots?: number[];
  samples?: number;
}

export class ApiError extends Error {
  constructor(readonly code: string, detail: string, readonly index?: number) {
    super(detail);
  }
}

async function reject(res: Response): Promise<never> {
  let body: any = null;
  try {
    body = await res.json();
  } catch {
    // fall through to the generic error
  }
  if (body && typeof body.error === "string") {
    throw new ApiError(body.error, body.detail ?? body.error, body.index);
  }
  throw new ApiError("HttpError", `request failed with ${res.status}`);
}

export async function fetchFixtureNames(): Promise<string[]> {
  const res = await fetch(`${BASE_URL}/api/fixtures`);
  if (!res.ok) await reject(res);
  const body = await res.json();
  return body.fixtures.map((f: { name: string }) => f.name);
}

export async function fetchFixture(name: string): Promise<FixtureDto> {
  const res = await fetch(`${BASE_URL}/api/fixtures/${name}`);
  if (!res.ok) await reject(res);
  return res.json();
}

export async function fetchCurve(req: CurveRequest): Promise<CurveDto> {
  const res = await fetch(`${BASE_URL}/api/curve`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(req),
  });
  if (!res.ok) await reject(res);
  return res.json();
}
