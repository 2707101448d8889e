import { readFileSync } from "node:fs";

import { describe, expect, it } from "vitest";

import {
  ONE,
  axisAngle,
  conj,
  dot,
  geodesic,
  mul,
  neg,
  norm,
  normalize,
  resolveSign,
  transformPoint,
} from "../src/quat.js";
import type { Quat } from "../src/quat.js";
import { stereo } from "../src/project.js";

interface TransformRow {
  q: number[];
  p: number[];
  transformed: number[];
  projected?: number[];
}

const rows: TransformRow[] = JSON.parse(
  readFileSync(new URL("../fixtures/transform_vectors.json", import.meta.url), "utf8"),
);

function quatOf(a: number[]): Quat {
  return [a[0], a[1], a[2], a[3]];
}

function maxAbsDiff(a: readonly number[], b: readonly number[]): number {
  let worst = 0;
  for (let i = 0; i < a.length; i++) worst = Math.max(worst, Math.abs(a[i] - b[i]));
  return worst;
}

describe("hamilton product", () => {
  it("has ONE as the identity on both sides", () => {
    const q: Quat = normalize([0.3, -0.5, 0.7, 0.2]);
    expect(maxAbsDiff(mul(ONE, q), q)).toBe(0);
    expect(maxAbsDiff(mul(q, ONE), q)).toBe(0);
  });

  it("multiplies the basis elements like i*j = k", () => {
    const i: Quat = [0, 1, 0, 0];
    const j: Quat = [0, 0, 1, 0];
    const k: Quat = [0, 0, 0, 1];
    expect(maxAbsDiff(mul(i, j), k)).toBe(0);
    expect(maxAbsDiff(mul(j, i), neg(k))).toBe(0);
    expect(maxAbsDiff(mul(i, i), neg(ONE))).toBe(0);
  });

  it("preserves norms", () => {
    const a: Quat = normalize([1, 2, 3, 4]);
    const b: Quat = normalize([-2, 0.5, 1, -0.25]);
    expect(Math.abs(norm(mul(a, b)) - 1)).toBeLessThan(1e-12);
  });

  it("conjugation inverts unit quaternions", () => {
    const q: Quat = normalize([0.2, 0.9, -0.1, 0.4]);
    expect(maxAbsDiff(mul(q, conj(q)), ONE)).toBeLessThan(1e-15);
  });
});

describe("normalize", () => {
  it("returns the same object when the norm is already within tolerance", () => {
    const q: Quat = [1, 0, 0, 0];
    expect(normalize(q)).toBe(q);
  });

  it("rescales drifted inputs to unit norm", () => {
    const q = normalize([2, 0, 0, 0]);
    expect(q).toEqual([1, 0, 0, 0]);
  });

  it("rejects the zero quaternion", () => {
    expect(() => normalize([0, 0, 0, 0])).toThrow("zero quaternion");
  });
});

describe("axisAngle", () => {
  it("builds the half-angle form around z", () => {
    const q = axisAngle([0, 0, 1], Math.PI / 2);
    const h = Math.PI / 4;
    expect(maxAbsDiff(q, [Math.cos(h), 0, 0, Math.sin(h)])).toBeLessThan(1e-15);
  });

  it("normalizes the axis, so scaling it changes nothing", () => {
    const a = axisAngle([0, 2, 0], 0.7);
    const b = axisAngle([0, 1, 0], 0.7);
    expect(maxAbsDiff(a, b)).toBeLessThan(1e-15);
  });

  it("rejects a zero axis", () => {
    expect(() => axisAngle([0, 0, 0], 1)).toThrow("axis must be nonzero");
  });
});

describe("geodesic distance", () => {
  it("is zero from a point to itself and pi to its antipode", () => {
    const q = normalize([0.5, 0.5, 0.5, 0.5]);
    expect(geodesic(q, q)).toBe(0);
    expect(geodesic(q, neg(q))).toBe(Math.PI);
  });

  it("clamps dot products that drift past the acos domain", () => {
    const drifted: Quat = [1 + 1e-12, 0, 0, 0];
    expect(geodesic(ONE, drifted)).toBe(0);
    expect(geodesic(neg(ONE), drifted)).toBe(Math.PI);
  });

  it("measures the rotation by half its angle from ONE", () => {
    const q = axisAngle([1, 0, 0], 1.0);
    expect(Math.abs(geodesic(ONE, q) - 0.5)).toBeLessThan(1e-12);
  });
});

describe("resolveSign", () => {
  it("keeps samples on the current sheet", () => {
    const prev = axisAngle([0, 0, 1], 0.3);
    const near = axisAngle([0, 0, 1], 0.31);
    expect(resolveSign(prev, near)).toBe(near);
    const flipped = resolveSign(prev, neg(near));
    expect(dot(prev, flipped)).toBeGreaterThan(0);
    expect(maxAbsDiff(flipped, near)).toBeLessThan(1e-15);
  });
});

describe("scene transform", () => {
  it("is the identity at orientation ONE", () => {
    const p: Quat = normalize([0.1, -0.3, 0.8, 0.5]);
    expect(maxAbsDiff(transformPoint(ONE, p), p)).toBe(0);
  });

  it("moves the player's own orientation to ONE", () => {
    const q = axisAngle([1, 2, -1], 0.9);
    expect(maxAbsDiff(transformPoint(q, q), ONE)).toBeLessThan(1e-15);
  });

  it("matches the engine on the shared transform vectors within 1e-6", () => {
    expect(rows.length).toBeGreaterThanOrEqual(64);
    for (const row of rows) {
      const t = transformPoint(quatOf(row.q), quatOf(row.p));
      expect(maxAbsDiff(t, row.transformed)).toBeLessThan(1e-6);
      if (row.projected) {
        expect(maxAbsDiff(stereo(t), row.projected)).toBeLessThan(1e-6);
      }
    }
  });
});

describe("stereographic projection", () => {
  it("sends the equator to the unit sphere", () => {
    expect(stereo([0, 1, 0, 0])).toEqual([1, 0, 0]);
    expect(stereo([0, 0, 0, 1])).toEqual([0, 0, 1]);
  });

  it("agrees with the naive 1/(1+w) formula on the lower hemisphere", () => {
    const w = -0.5;
    const r = Math.sqrt(1 - w * w);
    const p: Quat = [w, r * 0.6, r * 0.8, 0];
    const naive = [p[1] / (1 + w), p[2] / (1 + w), p[3] / (1 + w)];
    expect(maxAbsDiff(stereo(p), naive)).toBeLessThan(1e-12);
  });

  it("rejects points in the pole cap", () => {
    expect(() => stereo([-1, 0, 0, 0])).toThrow("pole");
    expect(() => stereo([-1 + 1e-9, 1e-5, 0, 0])).toThrow("pole");
  });
});
