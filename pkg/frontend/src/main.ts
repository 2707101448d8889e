/**
 * Browser bootstrap: wires the input mapper, the step pump, the software
 * renderer and the HUD to the DOM. Everything testable lives in the other
 * modules; this file only touches document/window/fetch.
 */

import { ServiceClient, StepPump } from "./api.js";
import { InputMapper, TICK_HZ, trajectoryLines } from "./input.js";
import type { Sample } from "./input.js";
import { axisAngle, mul, normalize } from "./quat.js";
import type { Quat } from "./quat.js";
import { renderFrame } from "./render.js";
import type { MeshPayload } from "./render.js";
import { applyStep, applySummary, hudModel, initialState } from "./state.js";

const client = new ServiceClient("");
const state = initialState();
const mapper = new InputMapper();

let mesh: MeshPayload | null = null;
let pump: StepPump | null = null;
let tick = 0;
let paused = false;

const canvas = document.getElementById("view") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const hudLine = document.getElementById("hud-line")!;
const hudBar = document.getElementById("hud-bar-fill") as HTMLElement;
const banner = document.getElementById("banner")!;
const status = document.getElementById("status")!;
const select = document.getElementById("level") as HTMLSelectElement;
const notice = document.getElementById("notice")!;

async function loadLevel(name: string): Promise<void> {
  paused = true;
  mesh = await client.getMesh(name);
  const summary = await client.newGame(name);
  applySummary(state, summary);
  mapper.orientation = [1, 0, 0, 0];
  tick = 0;
  pump = new StepPump(
    client,
    summary.id,
    (r) => applyStep(state, r),
    () => {
      state.connection = "reconnecting";
      paused = true;
      retryLoop();
    },
  );
  paused = false;
}

function retryLoop(): void {
  const timer = setInterval(async () => {
    if (state.sessionId === null) return;
    try {
      const summary = await client.gameState(state.sessionId);
      applySummary(state, summary);
      clearInterval(timer);
      paused = false;
    } catch {
      state.connection = "reconnecting";
    }
  }, 1000);
}

const heldKeys = new Set<string>();

document.addEventListener("keydown", (e) => heldKeys.add(e.code));
document.addEventListener("keyup", (e) => heldKeys.delete(e.code));

let dragging = false;
let lastX = 0;
let lastY = 0;

canvas.addEventListener("mousedown", (e) => {
  dragging = true;
  lastX = e.clientX;
  lastY = e.clientY;
});
window.addEventListener("mouseup", () => {
  dragging = false;
});
window.addEventListener("mousemove", (e) => {
  if (!dragging || paused) return;
  mapper.drag(e.clientX - lastX, e.clientY - lastY, e.shiftKey);
  lastX = e.clientX;
  lastY = e.clientY;
});

/** Device orientation angles (degrees, Z-X'-Y'' intrinsic) to w-first. */
function sensorQuat(alpha: number, beta: number, gamma: number, screen: number): Quat {
  const d = Math.PI / 180;
  let q = mul(
    mul(axisAngle([0, 0, 1], alpha * d), axisAngle([1, 0, 0], beta * d)),
    axisAngle([0, 1, 0], gamma * d),
  );
  // camera looks out of the screen back; undo the screen rotation
  q = mul(q, axisAngle([1, 0, 0], -Math.PI / 2));
  q = mul(q, axisAngle([0, 0, 1], -screen * d));
  return normalize(q);
}

function enableSensor(): void {
  const ctor = (window as any).DeviceOrientationEvent;
  if (!ctor) {
    notice.textContent = "no orientation sensor; staying in mouse mode";
    return;
  }
  const attach = () => {
    window.addEventListener("deviceorientation", (e) => {
      if (paused || e.alpha === null || e.beta === null || e.gamma === null) return;
      const screen = (window.screen.orientation?.angle ?? 0) as number;
      mapper.sensor(sensorQuat(e.alpha, e.beta, e.gamma, screen));
    });
  };
  if (typeof ctor.requestPermission === "function") {
    ctor.requestPermission().then((v: string) => {
      if (v === "granted") attach();
      else notice.textContent = "sensor permission denied; staying in mouse mode";
    });
  } else {
    attach();
  }
}

document.getElementById("sensor")!.addEventListener("click", enableSensor);

function download(name: string, text: string, type: string): void {
  const a = document.createElement("a");
  a.href = URL.createObjectURL(new Blob([text], { type }));
  a.download = name;
  a.click();
  URL.revokeObjectURL(a.href);
}

document.getElementById("save-trajectory")!.addEventListener("click", () => {
  const posted: Sample[] = pump ? pump.posted : [];
  download("trajectory.jsonl", trajectoryLines(posted), "application/json");
});

document.getElementById("save-log")!.addEventListener("click", async () => {
  if (state.sessionId === null) return;
  download("events.jsonl", await client.eventLog(state.sessionId), "application/x-ndjson");
});

select.addEventListener("change", () => void loadLevel(select.value));

function frame(): void {
  requestAnimationFrame(frame);
  if (mesh === null) return;
  if (!paused) {
    if (heldKeys.has("KeyQ")) mapper.keyRoll(-1);
    if (heldKeys.has("KeyE")) mapper.keyRoll(1);
    state.orientation = mapper.orientation;
    if (tick % 2 === 0 && pump !== null) {
      pump.push({ t: tick / TICK_HZ, q: mapper.orientation });
    }
    tick++;
  }
  const out = renderFrame(mesh, state.orientation, state.eatenCells, canvas.width, canvas.height);
  ctx.putImageData(new ImageData(new Uint8ClampedArray(out.pixels), out.width, out.height), 0, 0);
  const hud = hudModel(state);
  hudLine.textContent = hud.line;
  hudBar.style.width = `${100 * hud.coverage}%`;
  banner.hidden = !hud.banner;
  status.textContent = hud.connection === "ok" ? "" : hud.connection;
}

async function start(): Promise<void> {
  const { polytopes } = await client.listPolytopes();
  for (const p of polytopes) {
    const opt = document.createElement("option");
    opt.value = p.name;
    opt.textContent = `${p.name} (${p.cells} cells)`;
    select.appendChild(opt);
  }
  await loadLevel(polytopes[0].name);
  frame();
}

void start();
