"""From 4-polytope to screen: S³ transforms, stereographic projection, meshes.

Pipeline: polytope vertices are radially projected to S³, cell boundaries are
tessellated into triangles fine enough that straight 2-faces render as the
curved surfaces they become on the sphere, the player's orientation acts on
everything by left multiplication with the conjugate quaternion, and the
result is projected stereographically to ℝ³.

Fixed conventions:
- Projection pole (−1, 0, 0, 0); the identity quaternion renders at the
  camera origin. Points within EPS_POLE of the pole are never projected;
  triangles touching that region are culled, not clamped.
- Scene transform p ↦ q̄·p, so the point rendered at the origin is always the
  player's own position q, and a rotation by θ about any axis moves the
  player a geodesic distance θ/2: one full 360° turn lands on the antipode.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NearPoleError, SubdivisionTooDeepError, ZeroVectorError
from .polytopes import Polychoron
from .quat import UnitQuaternion, conjugate, left_matrix, multiply

EPS_POLE = 1e-6
MAX_SUBDIVISION = 6


def radial_project(v) -> UnitQuaternion:
    """Normalize a nonzero 4-vector onto S³."""
    arr = np.asarray(v, dtype=float)
    n = float(np.linalg.norm(arr))
    if n <= 1e-12:
        raise ZeroVectorError("cannot radially project a zero vector")
    return UnitQuaternion(*(arr / n))


def scene_transform(q: UnitQuaternion, p: UnitQuaternion) -> UnitQuaternion:
    """Where the scene point p ends up when the player's orientation is q."""
    return multiply(conjugate(q), p)


def stereographic(p: UnitQuaternion) -> np.ndarray:
    """(x, y, z) / (1 + w). The basepoint (1,0,0,0) maps to the origin."""
    if p.w <= -1.0 + EPS_POLE:
        raise NearPoleError(f"point with w = {p.w!r} is too close to the pole")
    if p.w < 0.0:
        # 1 + w cancels badly on this half; on the unit sphere
        # 1 + w = (x^2 + y^2 + z^2) / (1 - w), which does not.
        s = (1.0 - p.w) / (p.x * p.x + p.y * p.y + p.z * p.z)
    else:
        s = 1.0 / (1.0 + p.w)
    return np.array([p.x * s, p.y * s, p.z * s])


def inverse_stereographic(v) -> UnitQuaternion:
    arr = np.asarray(v, dtype=float)
    s = float(arr @ arr)
    return UnitQuaternion(
        (1.0 - s) / (1.0 + s),
        2.0 * arr[0] / (1.0 + s),
        2.0 * arr[1] / (1.0 + s),
        2.0 * arr[2] / (1.0 + s),
    )


def default_subdivision(name: str) -> int:
    """Level keeping interactive triangle counts (~1e5) for every polytope."""
    return {"120-cell": 2, "600-cell": 1}.get(name, 3)


@dataclass(frozen=True, eq=False)
class TessellatedMesh:
    vertices4: np.ndarray      # (N, 4) on S³
    triangles: np.ndarray      # (T, 3) vertex indices
    cell_ids: np.ndarray       # (T,) owning cell per triangle
    face_normals4: np.ndarray  # (T, 4) unit, orthogonal to the triangle plane
    subdivision_level: int


@dataclass(frozen=True, eq=False)
class ProjectedMesh:
    vertices3: np.ndarray      # (M, 3)
    triangles: np.ndarray      # (K, 3) reindexed into vertices3
    cell_ids: np.ndarray       # (K,)
    normals4: np.ndarray       # (K, 4) transformed face normals
    centroids4: np.ndarray     # (K, 4) transformed triangle centroids on S³


def _subdivide(tris: list, level: int) -> list:
    """Recursive 4-way split with midpoints pushed back onto S³."""
    for _ in range(level):
        out = []
        for a, b, c in tris:
            ab = a + b
            bc = b + c
            ca = c + a
            ab /= np.linalg.norm(ab)
            bc /= np.linalg.norm(bc)
            ca /= np.linalg.norm(ca)
            out += [(a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca)]
        tris = out
    return tris


def tessellate(p: Polychoron, subdivision_level: int) -> TessellatedMesh:
    """Triangulate every cell boundary.

    Each 2-face is fan-triangulated from its (projected) centroid, split
    4-way `subdivision_level` times, and emitted once per incident cell with
    that cell's outward normal. The normal is the unit direction orthogonal
    to the face's 3D linear span (which contains every subdivided vertex of
    the face, so orthogonality to the triangle edges is exact), signed away
    from the owning cell's center.
    """
    if subdivision_level < 0:
        raise ValueError("subdivision level must be nonnegative")
    if subdivision_level > MAX_SUBDIVISION:
        raise SubdivisionTooDeepError(
            f"subdivision level {subdivision_level} exceeds {MAX_SUBDIVISION}"
        )

    incident: dict[int, list[int]] = {f: [] for f in range(len(p.faces))}
    for ci, cell in enumerate(p.cells):
        for f in cell:
            incident[f].append(ci)

    vertex_id: dict[tuple, int] = {}
    vertices: list[np.ndarray] = []

    def vid(v: np.ndarray) -> int:
        key = (float(v[0]), float(v[1]), float(v[2]), float(v[3]))
        i = vertex_id.get(key)
        if i is None:
            i = len(vertices)
            vertex_id[key] = i
            vertices.append(np.asarray(v, dtype=float))
        return i

    triangles: list[tuple[int, int, int]] = []
    cell_ids: list[int] = []
    normals: list[np.ndarray] = []

    for fi, cycle in enumerate(p.faces):
        pts = p.vertices[list(cycle)]
        centroid = pts.mean(axis=0)
        centroid = centroid / np.linalg.norm(centroid)
        fan = [
            (centroid, pts[k], pts[(k + 1) % len(cycle)])
            for k in range(len(cycle))
        ]
        tris = _subdivide(fan, subdivision_level)
        ids = [(vid(a), vid(b), vid(c)) for a, b, c in tris]

        # the face's linear span is 3D; its orthogonal complement is the
        # normal line, shared exactly by every subdivided triangle
        _, _, vh = np.linalg.svd(pts)
        u = vh[3]
        for ci in incident[fi]:
            side = float(np.dot(centroid - p.cell_centers[ci], u))
            n = u if side > 0 else -u
            for ia, ib, ic in ids:
                triangles.append((ia, ib, ic) if side > 0 else (ia, ic, ib))
                cell_ids.append(ci)
                normals.append(n)

    v4 = np.array(vertices)
    return TessellatedMesh(
        vertices4=v4,
        triangles=np.array(triangles, dtype=np.int64),
        cell_ids=np.array(cell_ids, dtype=np.int64),
        face_normals4=np.array(normals),
        subdivision_level=subdivision_level,
    )


def project_mesh(mesh: TessellatedMesh, q: UnitQuaternion, eaten_cells=()) -> ProjectedMesh:
    """Transform by the player orientation, cull, and project to ℝ³.

    Drops triangles of eaten cells, applies p ↦ q̄·p to vertices and normals,
    culls any triangle with a vertex in the pole region, and reindexes.
    """
    eaten = np.asarray(sorted(set(int(c) for c in eaten_cells)), dtype=np.int64)
    keep = ~np.isin(mesh.cell_ids, eaten) if eaten.size else np.ones(len(mesh.cell_ids), dtype=bool)

    transform = left_matrix(conjugate(q))
    tv = mesh.vertices4 @ transform.T
    near_pole = tv[:, 0] <= -1.0 + EPS_POLE
    keep &= ~np.any(near_pole[mesh.triangles], axis=1)

    tris = mesh.triangles[keep]
    used = np.unique(tris)
    remap = np.full(len(tv), -1, dtype=np.int64)
    remap[used] = np.arange(len(used))

    kept_v = tv[used]
    denom = 1.0 + kept_v[:, 0:1]
    vertices3 = kept_v[:, 1:] / denom

    corner = tv[tris]                       # (K, 3, 4)
    centroids = corner.mean(axis=1)
    centroids /= np.linalg.norm(centroids, axis=1, keepdims=True)

    return ProjectedMesh(
        vertices3=vertices3,
        triangles=remap[tris],
        cell_ids=mesh.cell_ids[keep],
        normals4=mesh.face_normals4[keep] @ transform.T,
        centroids4=centroids,
    )
