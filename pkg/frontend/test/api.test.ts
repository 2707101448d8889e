import { describe, expect, it } from "vitest";

import { ServiceClient, StepPump } from "../src/api.js";
import type { FetchLike, StepResult } from "../src/api.js";
import { ONE } from "../src/quat.js";
import type { Sample } from "../src/input.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

/** Records every call and answers from a scripted queue. */
function recordingFetch(answers: Array<Response | (() => Response)>) {
  const calls: Array<{ url: string; init?: RequestInit }> = [];
  const fetchFn: FetchLike = (url, init) => {
    calls.push({ url, init });
    const next = answers.shift();
    if (!next) throw new Error("unexpected fetch: " + url);
    return Promise.resolve(typeof next === "function" ? next() : next);
  };
  return { calls, fetchFn };
}

const stepOk: StepResult = { eaten: [], coverage: 0.25, won: false, player: [1, 0, 0, 0] };

describe("ServiceClient", () => {
  it("lists polytopes from /polytopes", async () => {
    const rows = { polytopes: [{ name: "8-cell", vertices: 16, edges: 32, faces: 24, cells: 8 }] };
    const { calls, fetchFn } = recordingFetch([jsonResponse(rows)]);
    const got = await new ServiceClient("http://s", fetchFn).listPolytopes();
    expect(got).toEqual(rows);
    expect(calls[0].url).toBe("http://s/polytopes");
  });

  it("omits the subdiv query unless one is given", async () => {
    const { calls, fetchFn } = recordingFetch([jsonResponse({}), jsonResponse({})]);
    const client = new ServiceClient("", fetchFn);
    await client.getMesh("5-cell");
    await client.getMesh("5-cell", 2);
    expect(calls[0].url).toBe("/polytope/5-cell");
    expect(calls[1].url).toBe("/polytope/5-cell?subdiv=2");
  });

  it("posts the polytope name to create a game", async () => {
    const summary = {
      id: "g1",
      polytope: "8-cell",
      cellCount: 8,
      eatRadius: 0.9553,
      eaten: [7],
      coverage: 0.125,
      won: false,
      player: [1, 0, 0, 0],
    };
    const { calls, fetchFn } = recordingFetch([jsonResponse(summary, 201)]);
    const got = await new ServiceClient("", fetchFn).newGame("8-cell");
    expect(got).toEqual(summary);
    expect(calls[0].init?.method).toBe("POST");
    expect(JSON.parse(String(calls[0].init?.body))).toEqual({ polytope: "8-cell" });
  });

  it("posts {t, q} on each step", async () => {
    const { calls, fetchFn } = recordingFetch([jsonResponse(stepOk)]);
    await new ServiceClient("", fetchFn).step("g1", 0.5, [0, 0, 0, 1]);
    expect(calls[0].url).toBe("/games/g1/step");
    expect(JSON.parse(String(calls[0].init?.body))).toEqual({ t: 0.5, q: [0, 0, 0, 1] });
  });

  it("throws with method, path and status on a failed request", async () => {
    const { fetchFn } = recordingFetch([jsonResponse({ detail: "stale" }, 409)]);
    await expect(new ServiceClient("", fetchFn).step("g1", 0, ONE)).rejects.toThrow(
      "POST /games/g1/step failed with 409",
    );
  });

  it("returns the event log as raw text", async () => {
    const body = '{"t": 0.0, "cell": 7, "pos": [1.0, 0.0, 0.0, 0.0]}\n';
    const { calls, fetchFn } = recordingFetch([new Response(body, { status: 200 })]);
    const text = await new ServiceClient("", fetchFn).eventLog("g1");
    expect(text).toBe(body);
    expect(calls[0].url).toBe("/games/g1/log");
  });

  it("deletes games", async () => {
    const { calls, fetchFn } = recordingFetch([jsonResponse({ id: "g1", deleted: true })]);
    const got = await new ServiceClient("", fetchFn).deleteGame("g1");
    expect(got.deleted).toBe(true);
    expect(calls[0].init?.method).toBe("DELETE");
  });
});

function sampleAt(t: number): Sample {
  return { t, q: ONE };
}

/** Fetch whose responses resolve only when the test releases them. */
function gatedFetch() {
  const calls: Array<{ url: string; release: (r: Response) => void }> = [];
  const fetchFn: FetchLike = (url) =>
    new Promise<Response>((resolve) => {
      calls.push({ url, release: resolve });
    });
  return { calls, fetchFn };
}

async function waitFor(cond: () => boolean): Promise<void> {
  const deadline = Date.now() + 5000;
  while (!cond()) {
    if (Date.now() > deadline) throw new Error("condition not met in time");
    await new Promise((r) => setTimeout(r, 1));
  }
}

describe("StepPump", () => {
  it("keeps only the newest sample while a request is in flight", async () => {
    const { calls, fetchFn } = gatedFetch();
    const results: StepResult[] = [];
    const pump = new StepPump(new ServiceClient("", fetchFn), "g1", (r) => results.push(r));

    pump.push(sampleAt(0));
    pump.push(sampleAt(1)); // overwritten before it can send
    pump.push(sampleAt(2));
    expect(calls.length).toBe(1);

    calls[0].release(jsonResponse(stepOk));
    await waitFor(() => calls.length === 2); // the kept sample goes out next
    calls[1].release(jsonResponse(stepOk));
    await pump.idle();

    expect(pump.posted.map((s) => s.t)).toEqual([0, 2]);
    expect(results.length).toBe(2);
  });

  it("posts every sample when the service keeps up", async () => {
    const { calls, fetchFn } = recordingFetch([
      jsonResponse(stepOk),
      jsonResponse(stepOk),
      jsonResponse(stepOk),
    ]);
    const pump = new StepPump(new ServiceClient("", fetchFn), "g1", () => {});
    for (const t of [0, 1, 2]) {
      pump.push(sampleAt(t));
      await pump.idle();
    }
    expect(pump.posted.map((s) => s.t)).toEqual([0, 1, 2]);
    expect(calls.length).toBe(3);
  });

  it("reports failures through onError and keeps pumping", async () => {
    const { fetchFn } = recordingFetch([jsonResponse({}, 500), jsonResponse(stepOk)]);
    const errors: unknown[] = [];
    const results: StepResult[] = [];
    const pump = new StepPump(
      new ServiceClient("", fetchFn),
      "g1",
      (r) => results.push(r),
      (err) => errors.push(err),
    );
    pump.push(sampleAt(0));
    await pump.idle();
    pump.push(sampleAt(1));
    await pump.idle();
    expect(errors.length).toBe(1);
    expect(String(errors[0])).toContain("500");
    expect(results.length).toBe(1);
    expect(pump.posted.map((s) => s.t)).toEqual([0, 1]);
  });

  it("records posted samples in posting order for the export", async () => {
    const { calls, fetchFn } = gatedFetch();
    const pump = new StepPump(new ServiceClient("", fetchFn), "g1", () => {});
    pump.push(sampleAt(0));
    pump.push(sampleAt(1));
    calls[0].release(jsonResponse(stepOk));
    await waitFor(() => calls.length === 2);
    calls[1].release(jsonResponse(stepOk));
    await pump.idle();
    const ts = pump.posted.map((s) => s.t);
    expect(ts).toEqual([...ts].sort((a, b) => a - b));
  });
});
