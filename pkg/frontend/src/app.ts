import { ApiError, CurveDto, FixtureDto, fetchCurve, fetchFixture, fetchFixtureNames } from "./api.js";
import { Debouncer, ResponseGate } from "./scheduler.js";
import { buildScene, curvePath, linearScale, valueRange, Scale } from "./render.js";
import { centeredKnots, clampKnot } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 860;
const HEIGHT = 420;
const MARGIN = { top: 16, right: 20, bottom: 46, left: 20 };
const RAIL_Y = HEIGHT - 24;
const SAMPLES = 201;

const svg = document.getElementById("plot") as unknown as SVGSVGElement;
const fixtureSelect = document.getElementById("fixture") as HTMLSelectElement;
const presetBox = document.getElementById("presets") as HTMLSpanElement;
const statusLine = document.getElementById("status") as HTMLParagraphElement;
const estimateBody = document.getElementById("estimates") as HTMLTableSectionElement;

let fixture: FixtureDto | null = null;
let knots: number[] = [];
let dragHandle = -1;
let sx: Scale = (v) => v;
let sy: Scale = (v) => v;

const debouncer = new Debouncer(60);
const gate = new ResponseGate();

function el(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

function setStatus(text: string, isError = false) {
  statusLine.textContent = text;
  statusLine.className = isError ? "error" : "";
}

function renderEstimates(curve: CurveDto) {
  estimateBody.innerHTML = "";
  for (const est of curve.knot_estimates) {
    const tr = document.createElement("tr");
    for (const v of [est.i, est.tau, est.f1_est, est.f2_est]) {
      const td = document.createElement("td");
      td.textContent = typeof v === "number" && !Number.isInteger(v) ? v.toPrecision(6) : String(v);
      tr.appendChild(td);
    }
    estimateBody.appendChild(tr);
  }
}

function render(curve: CurveDto) {
  if (!fixture) return;
  const scene = buildScene(fixture.tau, fixture.F, knots);
  const [yLo, yHi] = valueRange(fixture.F);
  sx = linearScale(fixture.tau[0], fixture.tau[fixture.tau.length - 1], MARGIN.left, WIDTH - MARGIN.right);
  sy = linearScale(yLo, yHi, HEIGHT - MARGIN.bottom, MARGIN.top);

  svg.innerHTML = "";
  svg.appendChild(el("line", {
    x1: String(MARGIN.left), y1: String(RAIL_Y),
    x2: String(WIDTH - MARGIN.right), y2: String(RAIL_Y),
    class: "rail",
  }));
  svg.appendChild(el("path", { d: curvePath(curve.samples, sx, sy), class: "curve" }));
  for (const p of scene.points) {
    svg.appendChild(el("circle", {
      cx: String(sx(p.x)), cy: String(sy(p.y)), r: "4", class: "site",
    }));
  }
  for (const h of scene.handles) {
    const node = el("circle", {
      cx: String(sx(h.x)), cy: String(RAIL_Y), r: "7",
      class: "handle", "data-index": String(h.index),
    });
    node.addEventListener("pointerdown", (ev) => startDrag(ev as PointerEvent, h.index));
    svg.appendChild(node);
  }
  renderEstimates(curve);
}

function requestCurve() {
  if (!fixture) return;
  const seq = gate.next();
  const body = { tau: fixture.tau, F: fixture.F, knots, samples: SAMPLES };
  fetchCurve(body).then(
    (curve) => {
      if (!gate.accept(seq)) return;
      render(curve);
      setStatus(`${curve.segments.length} segments`);
    },
    (err) => {
      if (!gate.accept(seq)) return;
      const detail = err instanceof ApiError ? err.message : String(err);
      setStatus(detail, true);
    },
  );
}

function svgX(ev: PointerEvent): number {
  const rect = svg.getBoundingClientRect();
  // viewBox units, not CSS pixels
  return ((ev.clientX - rect.left) / rect.width) * WIDTH;
}

function startDrag(ev: PointerEvent, index: number) {
  dragHandle = index;
  (ev.target as Element).setPointerCapture(ev.pointerId);
  ev.preventDefault();
}

function dragMove(ev: PointerEvent) {
  if (dragHandle < 0 || !fixture) return;
  const domainX = invertX(svgX(ev));
  knots[dragHandle] = clampKnot(fixture.tau, dragHandle, domainX);
  const node = svg.querySelector(`[data-index="${dragHandle}"]`);
  if (node) node.setAttribute("cx", String(sx(knots[dragHandle])));
  debouncer.run(requestCurve);
}

function invertX(px: number): number {
  if (!fixture) return px;
  const t0 = fixture.tau[0];
  const t1 = fixture.tau[fixture.tau.length - 1];
  return t0 + ((px - MARGIN.left) / (WIDTH - MARGIN.right - MARGIN.left)) * (t1 - t0);
}

function endDrag() {
  dragHandle = -1;
}

function applyPreset(name: string | null) {
  if (!fixture) return;
  knots = name ? fixture.presets[name].slice() : centeredKnots(fixture.tau);
  requestCurve();
}

async function loadFixture(name: string) {
  try {
    fixture = await fetchFixture(name);
  } catch (err) {
    setStatus(err instanceof ApiError ? err.message : String(err), true);
    return;
  }
  presetBox.innerHTML = "";
  const names = Object.keys(fixture.presets);
  for (const preset of [...names, "centered"]) {
    const button = document.createElement("button");
    button.textContent = preset;
    button.addEventListener("click", () => applyPreset(preset === "centered" ? null : preset));
    presetBox.appendChild(button);
  }
  applyPreset(names.length > 0 ? names[0] : null);
}

async function init() {
  svg.addEventListener("pointermove", dragMove);
  svg.addEventListener("pointerup", endDrag);
  svg.addEventListener("pointercancel", endDrag);

  let names: string[];
  try {
    names = await fetchFixtureNames();
  } catch (err) {
    setStatus(err instanceof ApiError ? err.message : String(err), true);
    return;
  }
  fixtureSelect.innerHTML = "";
  for (const name of names) {
    const opt = document.createElement("option");
    opt.value = name;
    opt.textContent = name;
    fixtureSelect.appendChild(opt);
  }
  fixtureSelect.addEventListener("change", () => loadFixture(fixtureSelect.value));
  if (names.length > 0) await loadFixture(names[0]);
}

init();
