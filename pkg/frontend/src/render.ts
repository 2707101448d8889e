/**
 * Software renderer for the projected mesh. Deliberately dependency-free so
 * the same code path runs in the browser (via putImageData) and under the
 * test runner, where frames are compared against committed golden images.
 *
 * Pipeline per frame: transform every vertex by the scene transform q̄·p,
 * cull triangles touching the pole region, stereographically project to ℝ³,
 * clip against the near plane, then z-buffer rasterize with flat
 * per-triangle colors from the service payload. The camera sits at the
 * origin looking down -z; the player's view rotation is already baked into
 * the 4D transform.
 */

import { transformPoint } from "./quat.js";
import type { Quat } from "./quat.js";
import { EPS_POLE, stereo } from "./project.js";

export interface MeshPayload {
  name: string;
  subdivisionLevel: number;
  vertices4: number[][];
  triangles: number[][];
  cellIds: number[];
  normals4: number[][];
  colors: number[][];
  cellCount: number;
  eatRadius: number;
}

export interface Frame {
  width: number;
  height: number;
  /** RGBA, row-major from the top-left, length width*height*4. */
  pixels: Uint8ClampedArray;
  /** Triangles that survived eaten/pole/near-plane culling. */
  trianglesDrawn: number;
}

const BG: [number, number, number] = [16, 18, 24];
const NEAR = 0.05;
const FOV_Y = Math.PI / 2;

type P3 = [number, number, number];

/** Sutherland-Hodgman against the visible half-space z <= -NEAR. */
function clipNear(poly: P3[]): P3[] {
  const out: P3[] = [];
  for (let i = 0; i < poly.length; i++) {
    const prev = poly[(i + poly.length - 1) % poly.length];
    const cur = poly[i];
    const prevIn = prev[2] <= -NEAR;
    const curIn = cur[2] <= -NEAR;
    if (curIn !== prevIn) {
      const t = (-NEAR - prev[2]) / (cur[2] - prev[2]);
      out.push([
        prev[0] + t * (cur[0] - prev[0]),
        prev[1] + t * (cur[1] - prev[1]),
        -NEAR,
      ]);
    }
    if (curIn) out.push(cur);
  }
  return out;
}

function rasterize(
  frame: Frame,
  depth: Float64Array,
  focal: number,
  a: P3,
  b: P3,
  c: P3,
  rgb: [number, number, number],
): void {
  const { width, height, pixels } = frame;
  const cx = width / 2;
  const cy = height / 2;
  // screen position plus 1/distance, which interpolates linearly on screen
  const xa = cx + (focal * a[0]) / -a[2];
  const ya = cy - (focal * a[1]) / -a[2];
  const xb = cx + (focal * b[0]) / -b[2];
  const yb = cy - (focal * b[1]) / -b[2];
  const xc = cx + (focal * c[0]) / -c[2];
  const yc = cy - (focal * c[1]) / -c[2];
  const wa = 1 / -a[2];
  const wb = 1 / -b[2];
  const wc = 1 / -c[2];

  const area = (xb - xa) * (yc - ya) - (xc - xa) * (yb - ya);
  if (area === 0) return;

  const x0 = Math.max(0, Math.floor(Math.min(xa, xb, xc)));
  const x1 = Math.min(width - 1, Math.ceil(Math.max(xa, xb, xc)));
  const y0 = Math.max(0, Math.floor(Math.min(ya, yb, yc)));
  const y1 = Math.min(height - 1, Math.ceil(Math.max(ya, yb, yc)));

  for (let py = y0; py <= y1; py++) {
    for (let px = x0; px <= x1; px++) {
      const sx = px + 0.5;
      const sy = py + 0.5;
      const la = ((xb - sx) * (yc - sy) - (xc - sx) * (yb - sy)) / area;
      const lb = ((xc - sx) * (ya - sy) - (xa - sx) * (yc - sy)) / area;
      const lc = 1 - la - lb;
      // both windings are faces; walls are visible from either side
      if (la < 0 || lb < 0 || lc < 0) continue;
      const w = la * wa + lb * wb + lc * wc;
      const idx = py * width + px;
      if (w <= depth[idx]) continue;
      depth[idx] = w;
      const o = idx * 4;
      pixels[o] = rgb[0];
      pixels[o + 1] = rgb[1];
      pixels[o + 2] = rgb[2];
      pixels[o + 3] = 255;
    }
  }
}

export function renderFrame(
  mesh: MeshPayload,
  orientation: Quat,
  eaten: ReadonlySet<number>,
  width: number,
  height: number,
): Frame {
  const pixels = new Uint8ClampedArray(width * height * 4);
  for (let i = 0; i < pixels.length; i += 4) {
    pixels[i] = BG[0];
    pixels[i + 1] = BG[1];
    pixels[i + 2] = BG[2];
    pixels[i + 3] = 255;
  }
  const frame: Frame = { width, height, pixels, trianglesDrawn: 0 };
  const depth = new Float64Array(width * height);

  const n = mesh.vertices4.length;
  const pv = new Float64Array(n * 3);
  const nearPole = new Uint8Array(n);
  for (let i = 0; i < n; i++) {
    const p = mesh.vertices4[i];
    const t = transformPoint(orientation, [p[0], p[1], p[2], p[3]]);
    if (t[0] <= -1 + EPS_POLE) {
      nearPole[i] = 1;
      continue;
    }
    const v = stereo(t);
    pv[3 * i] = v[0];
    pv[3 * i + 1] = v[1];
    pv[3 * i + 2] = v[2];
  }

  const focal = (0.5 * height) / Math.tan(FOV_Y / 2);
  for (let k = 0; k < mesh.triangles.length; k++) {
    if (eaten.has(mesh.cellIds[k])) continue;
    const [a, b, c] = mesh.triangles[k];
    if (nearPole[a] || nearPole[b] || nearPole[c]) continue;
    const poly = clipNear([
      [pv[3 * a], pv[3 * a + 1], pv[3 * a + 2]],
      [pv[3 * b], pv[3 * b + 1], pv[3 * b + 2]],
      [pv[3 * c], pv[3 * c + 1], pv[3 * c + 2]],
    ]);
    if (poly.length < 3) continue;
    frame.trianglesDrawn++;
    const col = mesh.colors[k];
    const rgb: [number, number, number] = [
      Math.round(255 * col[0]),
      Math.round(255 * col[1]),
      Math.round(255 * col[2]),
    ];
    for (let i = 2; i < poly.length; i++) {
      rasterize(frame, depth, focal, poly[0], poly[i - 1], poly[i], rgb);
    }
  }
  return frame;
}

/**
 * Fraction of pixels whose RGB distance exceeds a just-noticeable
 * threshold. Zero means perceptually identical frames.
 */
export function perceptualDiff(a: Uint8ClampedArray, b: Uint8ClampedArray): number {
  if (a.length !== b.length) throw new Error("frame sizes differ");
  let differing = 0;
  for (let i = 0; i < a.length; i += 4) {
    const dr = a[i] - b[i];
    const dg = a[i + 1] - b[i + 1];
    const db = a[i + 2] - b[i + 2];
    if (dr * dr + dg * dg + db * db > 144) differing++;
  }
  return differing / (a.length / 4);
}
