import type { Quat, Vec3 } from "./quat.js";

/** Vertices this close to the pole are culled before projecting. */
export const EPS_POLE = 1e-6;

/**
 * Stereographic projection from S³ minus the pole (-1,0,0,0) onto ℝ³.
 * Same stabilized evaluation as the engine: on the w < 0 half the factor
 * 1/(1+w) is rewritten via the sphere identity 1+w = (x²+y²+z²)/(1-w),
 * which avoids the cancellation near the pole.
 */
export function stereo(p: Quat): Vec3 {
  const [w, x, y, z] = p;
  if (w <= -1 + EPS_POLE) {
    throw new Error("point too close to the projection pole");
  }
  const s = w < 0 ? (1 - w) / (x * x + y * y + z * z) : 1 / (1 + w);
  return [x * s, y * s, z * s];
}
