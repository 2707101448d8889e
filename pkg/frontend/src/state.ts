/**
 * Client-side mirror of the game session. The service is authoritative for
 * eaten cells and coverage; this module only folds responses in and derives
 * what the HUD shows.
 */

import { ONE } from "./quat.js";
import type { Quat } from "./quat.js";
import type { GameSummary, StepResult } from "./api.js";

export type ConnectionStatus = "connecting" | "ok" | "reconnecting";

export interface ClientState {
  sessionId: string | null;
  polytopeName: string;
  orientation: Quat;
  eatenCells: Set<number>;
  cellCount: number;
  coverage: number;
  won: boolean;
  connection: ConnectionStatus;
}

export function initialState(): ClientState {
  return {
    sessionId: null,
    polytopeName: "",
    orientation: ONE,
    eatenCells: new Set(),
    cellCount: 0,
    coverage: 0,
    won: false,
    connection: "connecting",
  };
}

/** Adopt a full game summary, e.g. after creating or switching a session. */
export function applySummary(state: ClientState, s: GameSummary): void {
  state.sessionId = s.id;
  state.polytopeName = s.polytope;
  state.cellCount = s.cellCount;
  state.eatenCells = new Set(s.eaten);
  state.coverage = s.coverage;
  state.won = s.won;
  state.connection = "ok";
}

/** Fold one step response into the mirror. */
export function applyStep(state: ClientState, r: StepResult): void {
  for (const cell of r.eaten) state.eatenCells.add(cell);
  state.coverage = r.coverage;
  state.won = r.won;
  state.connection = "ok";
}

export interface HudModel {
  line: string;
  coverage: number;
  banner: boolean;
  connection: ConnectionStatus;
}

export function hudModel(state: ClientState): HudModel {
  const pct = (100 * state.coverage).toFixed(1);
  return {
    line: `${state.polytopeName} · eaten ${state.eatenCells.size}/${state.cellCount} · ${pct}%`,
    coverage: state.coverage,
    banner: state.coverage === 1,
    connection: state.connection,
  };
}
