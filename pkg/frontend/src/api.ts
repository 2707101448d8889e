/**
 * Thin client over the service endpoints, plus the step pump that enforces
 * the posting discipline: at most one request in flight, a waiting slot of
 * depth one where newer samples overwrite older unsent ones.
 */

import type { Quat } from "./quat.js";
import type { Sample } from "./input.js";
import type { MeshPayload } from "./render.js";

export interface PolytopeRow {
  name: string;
  vertices: number;
  edges: number;
  faces: number;
  cells: number;
}

export interface GameSummary {
  id: string;
  polytope: string;
  cellCount: number;
  eatRadius: number;
  eaten: number[];
  coverage: number;
  won: boolean;
  player: number[];
}

export interface StepResult {
  eaten: number[];
  coverage: number;
  won: boolean;
  player: number[];
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ServiceClient {
  constructor(
    private readonly base: string,
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchFn(this.base + path, init);
    if (!res.ok) {
      throw new Error(`${init?.method ?? "GET"} ${path} failed with ${res.status}`);
    }
    return res.json() as Promise<T>;
  }

  listPolytopes(): Promise<{ polytopes: PolytopeRow[] }> {
    return this.request("/polytopes");
  }

  getMesh(name: string, subdiv?: number): Promise<MeshPayload> {
    const suffix = subdiv === undefined ? "" : `?subdiv=${subdiv}`;
    return this.request(`/polytope/${name}${suffix}`);
  }

  newGame(polytope: string): Promise<GameSummary> {
    return this.request("/games", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ polytope }),
    });
  }

  gameState(id: string): Promise<GameSummary> {
    return this.request(`/games/${id}`);
  }

  step(id: string, t: number, q: Quat): Promise<StepResult> {
    return this.request(`/games/${id}/step`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ t, q }),
    });
  }

  async eventLog(id: string): Promise<string> {
    const res = await this.fetchFn(`${this.base}/games/${id}/log`);
    if (!res.ok) throw new Error(`GET /games/${id}/log failed with ${res.status}`);
    return res.text();
  }

  deleteGame(id: string): Promise<{ id: string; deleted: boolean }> {
    return this.request(`/games/${id}`, { method: "DELETE" });
  }
}

/**
 * Latest-wins step queue of depth one. Rendering never blocks on the
 * network; while a request is in flight only the newest orientation sample
 * waits, so a slow service sees a decimated but current stream.
 *
 * Every sample actually posted lands in `posted` in order; that list is
 * what the trajectory export saves, so an exported file replayed offline
 * reproduces exactly the stream the service saw.
 */
export class StepPump {
  readonly posted: Sample[] = [];
  private pending: Sample | null = null;
  private busy = false;

  constructor(
    private readonly client: ServiceClient,
    private readonly gameId: string,
    private readonly onResult: (r: StepResult) => void,
    private readonly onError: (err: unknown) => void = () => {},
  ) {}

  push(sample: Sample): void {
    if (this.busy) {
      this.pending = sample;
      return;
    }
    void this.send(sample);
  }

  /** Resolves once nothing is in flight or waiting. */
  async idle(): Promise<void> {
    while (this.busy || this.pending !== null) {
      await new Promise((r) => setTimeout(r, 1));
    }
  }

  private async send(sample: Sample): Promise<void> {
    this.busy = true;
    this.posted.push(sample);
    try {
      const result = await this.client.step(this.gameId, sample.t, sample.q);
      this.onResult(result);
    } catch (err) {
      this.onError(err);
    } finally {
      this.busy = false;
      const next = this.pending;
      if (next !== null) {
        this.pending = null;
        void this.send(next);
      }
    }
  }
}
