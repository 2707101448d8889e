/**
 * Client-side quaternion kernel. Mirrors the engine's conventions exactly:
 * scalar-first [w, x, y, z] arrays, Hamilton product, scene transform by
 * conjugate left multiplication. The shared fixture file of transform
 * vectors pins this implementation to the engine within 1e-6.
 */

export type Quat = readonly [number, number, number, number];
export type Vec3 = readonly [number, number, number];

export const ONE: Quat = [1, 0, 0, 0];

export function mul(a: Quat, b: Quat): Quat {
  return [
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
    a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
    a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
    a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
  ];
}

export function conj(q: Quat): Quat {
  return [q[0], -q[1], -q[2], -q[3]];
}

export function neg(q: Quat): Quat {
  return [-q[0], -q[1], -q[2], -q[3]];
}

export function dot(a: Quat, b: Quat): number {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

export function norm(q: Quat): number {
  return Math.sqrt(dot(q, q));
}

/** Renormalize only on real drift, so unit inputs pass through untouched. */
export function normalize(q: Quat): Quat {
  const n = norm(q);
  if (n < 1e-12) throw new Error("cannot normalize a zero quaternion");
  if (Math.abs(n - 1) <= 1e-9) return q;
  return [q[0] / n, q[1] / n, q[2] / n, q[3] / n];
}

export function axisAngle(axis: Vec3, angle: number): Quat {
  const n = Math.hypot(axis[0], axis[1], axis[2]);
  if (n < 1e-12) throw new Error("rotation axis must be nonzero");
  const h = angle / 2;
  const s = Math.sin(h) / n;
  return normalize([Math.cos(h), axis[0] * s, axis[1] * s, axis[2] * s]);
}

/** Arc length on the 3-sphere; antipodes sit at distance pi. */
export function geodesic(a: Quat, b: Quat): number {
  return Math.acos(Math.min(1, Math.max(-1, dot(a, b))));
}

/** Keep the incoming sample on the same sheet of the double cover. */
export function resolveSign(prev: Quat, next: Quat): Quat {
  return dot(prev, next) >= 0 ? next : neg(next);
}

/** Scene transform: the player at orientation q sees the scene as q̄·p. */
export function transformPoint(q: Quat, p: Quat): Quat {
  return mul(conj(q), p);
}
