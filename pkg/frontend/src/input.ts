/**
 * Maps human input to the quaternion stream the game consumes.
 *
 * Mouse drags pitch (vertical) and yaw (horizontal); with the roll modifier
 * held, horizontal motion rolls instead. Roll keys turn at a fixed rate per
 * second. Device-orientation samples pass through as absolute orientations,
 * sign-matched to the current sheet so the stream stays continuous.
 *
 * Increments compose on the right (body frame): turning "left" always means
 * left of where you currently face.
 */

import { ONE, axisAngle, mul, normalize, resolveSign } from "./quat.js";
import type { Quat } from "./quat.js";

export const TICK_HZ = 60;
export const DRAG_RAD_PER_PX = 0.005;
export const ROLL_RAD_PER_S = 1.5;

export type ScriptEvent =
  | { tick: number; kind: "drag"; dx: number; dy: number; roll?: boolean }
  | { tick: number; kind: "key"; key: "rollLeft" | "rollRight" }
  | { tick: number; kind: "sensor"; q: [number, number, number, number] };

export interface MapperOptions {
  dragSensitivity?: number;
  rollRate?: number;
}

export interface Sample {
  t: number;
  q: Quat;
}

export class InputMapper {
  orientation: Quat = ONE;
  private readonly sens: number;
  private readonly rollRate: number;

  constructor(opts: MapperOptions = {}) {
    this.sens = opts.dragSensitivity ?? DRAG_RAD_PER_PX;
    this.rollRate = opts.rollRate ?? ROLL_RAD_PER_S;
  }

  /** Pitch from dy, yaw from dx; with the modifier, dx rolls instead. */
  drag(dx: number, dy: number, roll = false): void {
    const inc = roll
      ? axisAngle([0, 0, 1], dx * this.sens)
      : mul(axisAngle([1, 0, 0], dy * this.sens), axisAngle([0, 1, 0], dx * this.sens));
    this.orientation = normalize(mul(this.orientation, inc));
  }

  /** One 60 Hz tick of a held roll key. */
  keyRoll(dir: 1 | -1): void {
    const inc = axisAngle([0, 0, 1], (dir * this.rollRate) / TICK_HZ);
    this.orientation = normalize(mul(this.orientation, inc));
  }

  /** Absolute device-orientation sample. */
  sensor(q: Quat): void {
    this.orientation = resolveSign(this.orientation, normalize(q));
  }

  apply(ev: ScriptEvent): void {
    if (ev.kind === "drag") this.drag(ev.dx, ev.dy, ev.roll ?? false);
    else if (ev.kind === "key") this.keyRoll(ev.key === "rollRight" ? 1 : -1);
    else this.sensor(ev.q);
  }
}

/**
 * Replay a recorded script at 60 Hz. Emits one sample per tick, after that
 * tick's events have been applied, so two replays of one script are
 * identical by construction.
 */
export function replayScript(script: ScriptEvent[], opts: MapperOptions = {}): Sample[] {
  const mapper = new InputMapper(opts);
  const byTick = new Map<number, ScriptEvent[]>();
  let last = 0;
  for (const ev of script) {
    const list = byTick.get(ev.tick);
    if (list) list.push(ev);
    else byTick.set(ev.tick, [ev]);
    if (ev.tick > last) last = ev.tick;
  }
  const samples: Sample[] = [];
  for (let tick = 0; tick <= last; tick++) {
    const events = byTick.get(tick);
    if (events) for (const ev of events) mapper.apply(ev);
    samples.push({ t: tick / TICK_HZ, q: mapper.orientation });
  }
  return samples;
}

/** Down-sample the 60 Hz stream to the 30 Hz posting rate (even ticks). */
export function decimate(samples: Sample[]): Sample[] {
  return samples.filter((_, i) => i % 2 === 0);
}

/** Engine trajectory format: one {"t": seconds, "q": [w,x,y,z]} per line. */
export function trajectoryLines(samples: Sample[]): string {
  return samples.map((s) => JSON.stringify({ t: s.t, q: s.q })).join("\n") + "\n";
}
