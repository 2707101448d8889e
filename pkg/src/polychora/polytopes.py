"""The six regular 4-polytopes with full combinatorics.

Each polytope is built from its standard coordinates; edges, faces and cells
are recovered from the vertex set by one generic pipeline (minimal-chord
pairs, 4D convex hull facets, per-cell 3D hulls) rather than six hand-written
incidence tables. `validate` re-derives every structural invariant without
touching the hull code, so the two routes check each other.

Determinism: vertices are sorted lexicographically by (w, x, y, z) before any
index is assigned; faces and cells are sorted by their canonical vertex
tuples. Identical runs produce identical ids, which the event logs, colors
and tests all rely on.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.spatial import ConvexHull

from .errors import UnknownPolytopeError
from .quat import UnitQuaternion

NAMES = ("5-cell", "8-cell", "16-cell", "24-cell", "120-cell", "600-cell")

# chord-length / hyperplane-offset tolerance for incidence detection;
# golden-ratio coordinates are irrational so exact arithmetic is off the table
INCIDENCE_TOL = 1e-9

PHI = (1.0 + math.sqrt(5.0)) / 2.0


@dataclass(frozen=True, eq=False)
class Polychoron:
    name: str
    vertices: np.ndarray                      # (V, 4), unit rows, read-only
    edges: tuple[tuple[int, int], ...]        # vertex-index pairs, i < j
    faces: tuple[tuple[int, ...], ...]        # ordered vertex cycles
    cells: tuple[tuple[int, ...], ...]        # face-index tuples per cell
    cell_centers: np.ndarray                  # (C, 4), unit rows, read-only

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.faces), len(self.cells))


@dataclass(frozen=True)
class DualGraph:
    node_count: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[str, ...]


def _vertices_5cell() -> np.ndarray:
    # 4-simplex: four basis vectors plus the symmetric fifth point, recentered
    s = (1.0 - math.sqrt(5.0)) / 4.0
    v = np.array([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [s, s, s, s],
    ])
    return v - v.mean(axis=0)


def _vertices_8cell() -> np.ndarray:
    return np.array(list(itertools.product((-0.5, 0.5), repeat=4)))


def _vertices_16cell() -> np.ndarray:
    v = []
    for i in range(4):
        for sign in (-1.0, 1.0):
            e = [0.0, 0.0, 0.0, 0.0]
            e[i] = sign
            v.append(e)
    return np.array(v)


def _vertices_24cell() -> np.ndarray:
    v = []
    for i in range(4):
        for j in range(i + 1, 4):
            for si in (-1.0, 1.0):
                for sj in (-1.0, 1.0):
                    e = [0.0, 0.0, 0.0, 0.0]
                    e[i], e[j] = si, sj
                    v.append(e)
    return np.array(v) / math.sqrt(2.0)


_EVEN_PERMS_4 = tuple(
    p for p in itertools.permutations(range(4))
    if sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j]) % 2 == 0
)


def _vertices_600cell() -> np.ndarray:
    # 8 + 16 + 96 golden-ratio vertices
    v = list(_vertices_16cell()) + list(_vertices_8cell())
    base = (PHI / 2.0, 0.5, 1.0 / (2.0 * PHI), 0.0)
    seen = set()
    for perm in _EVEN_PERMS_4:
        for signs in itertools.product((-1.0, 1.0), repeat=4):
            w = [0.0, 0.0, 0.0, 0.0]
            for m in range(4):
                w[perm[m]] = signs[m] * base[m]
            key = tuple(round(c, 9) for c in w)
            if key not in seen:
                seen.add(key)
                v.append(w)
    return np.array(v)


def _unit_rows(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def _min_chord_edges(verts: np.ndarray) -> tuple[tuple[int, int], ...]:
    d2 = np.sum((verts[:, None, :] - verts[None, :, :]) ** 2, axis=2)
    np.fill_diagonal(d2, np.inf)
    d = np.sqrt(d2)
    dmin = d.min()
    ii, jj = np.nonzero(np.abs(d - dmin) < INCIDENCE_TOL)
    return tuple((int(i), int(j)) for i, j in zip(ii, jj) if i < j)


def _hull_cells(verts: np.ndarray) -> dict[frozenset, np.ndarray]:
    """Cell vertex sets from the 4D hull, keyed set -> outward unit normal."""
    hull = ConvexHull(verts)
    if len(hull.vertices) != len(verts):
        raise RuntimeError("vertex set is not in convex position")
    cells: dict[frozenset, np.ndarray] = {}
    for eq in hull.equations:
        # qhull convention: n·x + off <= 0 inside, so n is the outward normal
        n, off = eq[:4], eq[4]
        members = frozenset(np.nonzero(np.abs(verts @ n + off) < INCIDENCE_TOL)[0].tolist())
        cells.setdefault(members, n / np.linalg.norm(n))
    return cells


def _cell_faces(verts: np.ndarray, members: frozenset, normal: np.ndarray) -> list[frozenset]:
    """2-faces of one cell, as vertex sets, via a 3D hull in the cell's hyperplane."""
    # orthonormal basis of the hyperplane: rows of vh orthogonal to the normal
    _, _, vh = np.linalg.svd(normal[None, :])
    basis = vh[1:]
    idx = sorted(members)
    pts3 = verts[idx] @ basis.T
    hull3 = ConvexHull(pts3)
    faces = set()
    for eq in hull3.equations:
        n3, off3 = eq[:3], eq[3]
        sel = np.nonzero(np.abs(pts3 @ n3 + off3) < INCIDENCE_TOL)[0]
        faces.add(frozenset(idx[k] for k in sel))
    return sorted(faces, key=sorted)


def _face_cycle(face: frozenset, neighbor: dict[int, set]) -> tuple[int, ...]:
    """Order a face's vertices into its polygon cycle along polytope edges.

    Canonical form: starts at the lowest vertex id, walks toward its lower
    neighbor first.
    """
    start = min(face)
    in_face = {v: (neighbor[v] & face) for v in face}
    for v, nb in in_face.items():
        if len(nb) != 2:
            raise RuntimeError(f"face vertex {v} has {len(nb)} in-face neighbors")
    cycle = [start, min(in_face[start])]
    while len(cycle) < len(face):
        nxt = in_face[cycle[-1]] - {cycle[-2]}
        cycle.append(nxt.pop())
    return tuple(cycle)


def from_vertex_array(name: str, raw_vertices: np.ndarray) -> Polychoron:
    """Run the generic combinatorics pipeline on a vertex array.

    Vertices are radially projected to S³ and sorted; edges/faces/cells are
    recovered by incidence. Exposed (rather than private) because the
    120-cell is built this way from the 600-cell's cell centers, and tests
    rebuild duals through it.
    """
    verts = _unit_rows(np.asarray(raw_vertices, dtype=float))
    verts = verts[np.lexsort(verts.T[::-1])]  # lexicographic by (w, x, y, z)

    edges = _min_chord_edges(verts)
    neighbor: dict[int, set] = {i: set() for i in range(len(verts))}
    for i, j in edges:
        neighbor[i].add(j)
        neighbor[j].add(i)

    cell_sets = _hull_cells(verts)
    ordered_cells = sorted(cell_sets, key=sorted)

    face_of: dict[frozenset, tuple[int, ...]] = {}
    cell_face_keys: list[list[frozenset]] = []
    for members in ordered_cells:
        keys = _cell_faces(verts, members, cell_sets[members])
        for key in keys:
            if key not in face_of:
                face_of[key] = _face_cycle(key, neighbor)
        cell_face_keys.append(keys)

    faces = tuple(sorted(face_of.values()))
    face_index = {frozenset(cycle): i for i, cycle in enumerate(faces)}
    cells = tuple(
        tuple(sorted(face_index[key] for key in keys)) for keys in cell_face_keys
    )

    centers = np.array([verts[sorted(members)].mean(axis=0) for members in ordered_cells])
    centers = _unit_rows(centers)

    verts.setflags(write=False)
    centers.setflags(write=False)
    return Polychoron(name=name, vertices=verts, edges=edges, faces=faces,
                      cells=cells, cell_centers=centers)


@lru_cache(maxsize=None)
def build(name: str) -> Polychoron:
    """Construct one of the six regular 4-polytopes by name."""
    if name == "5-cell":
        raw = _vertices_5cell()
    elif name == "8-cell":
        raw = _vertices_8cell()
    elif name == "16-cell":
        raw = _vertices_16cell()
    elif name == "24-cell":
        raw = _vertices_24cell()
    elif name == "600-cell":
        raw = _vertices_600cell()
    elif name == "120-cell":
        # dual construction: vertices are the 600-cell's cell centers
        raw = build("600-cell").cell_centers
    else:
        raise UnknownPolytopeError(
            f"unknown polytope {name!r}; expected one of {', '.join(NAMES)}"
        )
    return from_vertex_array(name, raw)


def cell_centers(p: Polychoron) -> list[UnitQuaternion]:
    """Normalized cell centroids as points of S³, in cell-id order."""
    return [UnitQuaternion(*row) for row in p.cell_centers]


def cell_vertex_ids(p: Polychoron, cell: int) -> tuple[int, ...]:
    """Sorted vertex ids of one cell (union of its face cycles)."""
    return tuple(sorted({v for f in p.cells[cell] for v in p.faces[f]}))


def dual_adjacency(p: Polychoron) -> DualGraph:
    """Cells sharing exactly one 2-face become dual-graph neighbors."""
    incident: dict[int, list[int]] = {f: [] for f in range(len(p.faces))}
    for ci, cell in enumerate(p.cells):
        for f in cell:
            incident[f].append(ci)
    shared: dict[tuple[int, int], int] = {}
    for cs in incident.values():
        if len(cs) == 2:
            a, b = sorted(cs)
            shared[(a, b)] = shared.get((a, b), 0) + 1
    edges = tuple(sorted(pair for pair, n in shared.items() if n == 1))
    return DualGraph(node_count=len(p.cells), edges=edges)


def _check_single_cycle(nodes: list, links: list[tuple]) -> bool:
    """True iff the links form one cycle covering all nodes."""
    deg: dict = {n: 0 for n in nodes}
    adj: dict = {n: [] for n in nodes}
    for a, b in links:
        deg[a] += 1
        deg[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    if any(d != 2 for d in deg.values()):
        return False
    seen = {nodes[0]}
    frontier = [nodes[0]]
    while frontier:
        cur = frontier.pop()
        for nxt in adj[cur]:
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return len(seen) == len(nodes)


def validate(p: Polychoron) -> ValidationReport:
    """Re-derive every structural invariant without the hull machinery.

    Collects human-readable failures (with offending indices) instead of
    raising, so broken inputs can be reported wholesale.
    """
    fails: list[str] = []
    verts = np.asarray(p.vertices, dtype=float)
    V, E, F, C = len(verts), len(p.edges), len(p.faces), len(p.cells)

    norms = np.linalg.norm(verts, axis=1)
    bad = np.nonzero(np.abs(norms - 1.0) > 1e-12)[0]
    if bad.size:
        fails.append(f"vertex {bad[0]} norm {norms[bad[0]]!r} not unit within 1e-12")

    if len(set(p.edges)) != E or any(i >= j for i, j in p.edges):
        fails.append("edge list contains duplicates or non-canonical pairs")
    chord = np.array([np.linalg.norm(verts[i] - verts[j]) for i, j in p.edges])
    if chord.size and chord.max() - chord.min() > 1e-9:
        k = int(np.argmax(np.abs(chord - np.median(chord))))
        fails.append(
            f"edge {p.edges[k]} chord length {chord[k]:.12f} deviates from "
            f"{np.median(chord):.12f}; equal edge lengths violated"
        )

    face_sizes = {len(f) for f in p.faces}
    if len(face_sizes) != 1:
        fails.append(f"faces have unequal vertex counts {sorted(face_sizes)}")
    edge_set = {tuple(sorted(e)) for e in p.edges}
    for fi, cycle in enumerate(p.faces):
        ring = [tuple(sorted((cycle[k], cycle[(k + 1) % len(cycle)]))) for k in range(len(cycle))]
        if any(r not in edge_set for r in ring):
            fails.append(f"face {fi} cycle uses a non-edge pair")
            break
        pts = verts[list(cycle)]
        centered = pts - pts.mean(axis=0)
        sv = np.linalg.svd(centered, compute_uv=False)
        if len(sv) > 2 and sv[2] > 1e-9:
            fails.append(f"face {fi} is not planar (third singular value {sv[2]:.2e})")
            break

    cell_sizes = {len(c) for c in p.cells}
    if len(cell_sizes) != 1:
        fails.append(f"cells have unequal face counts {sorted(cell_sizes)}")
    for ci in range(C):
        vids = list(cell_vertex_ids(p, ci))
        pts = verts[vids]
        centered = pts - pts.mean(axis=0)
        sv = np.linalg.svd(centered, compute_uv=False)
        if sv[3] > 1e-9:
            fails.append(f"cell {ci} vertices not in a common hyperplane (σ4 {sv[3]:.2e})")
            break
        # hyperplane must sit off the origin at one distance for all vertices
        u, _, vh = np.linalg.svd(centered)
        n = vh[3]
        offs = pts @ n
        if offs.max() - offs.min() > 1e-9 or abs(offs.mean()) < 1e-6:
            fails.append(f"cell {ci} hyperplane offsets inconsistent")
            break

    if V - E + F - C != 0:
        fails.append(f"Euler relation V-E+F-C = {V - E + F - C} != 0")

    incident: dict[int, list[int]] = {f: [] for f in range(F)}
    for ci, cell in enumerate(p.cells):
        for f in cell:
            incident[f].append(ci)
    bad_faces = [f for f, cs in incident.items() if len(cs) != 2]
    if bad_faces:
        fails.append(
            f"face {bad_faces[0]} shared by {len(incident[bad_faces[0]])} cells, "
            "not exactly 2"
        )

    # faces around an edge must close into a single cycle (walk face->cell->face)
    if not bad_faces:
        faces_at_edge: dict[tuple[int, int], list[int]] = {}
        for fi, cycle in enumerate(p.faces):
            for k in range(len(cycle)):
                e = tuple(sorted((cycle[k], cycle[(k + 1) % len(cycle)])))
                faces_at_edge.setdefault(e, []).append(fi)
        for e, fs in faces_at_edge.items():
            links = []
            ok = True
            for ci, cell in enumerate(p.cells):
                here = [f for f in cell if f in fs]
                if len(here) not in (0, 2):
                    ok = False
                    break
                if len(here) == 2:
                    links.append((here[0], here[1]))
            if not ok or not _check_single_cycle(fs, links):
                fails.append(f"faces around edge {e} do not form a single cycle")
                break

    centers = np.asarray(p.cell_centers, dtype=float)
    if len(centers) != C:
        fails.append(f"{len(centers)} cell centers for {C} cells")
    else:
        cn = np.linalg.norm(centers, axis=1)
        if np.any(np.abs(cn - 1.0) > 1e-12):
            fails.append("cell centers not unit within 1e-12")
        dots = np.clip(centers @ centers.T, -1.0, 1.0)
        np.fill_diagonal(dots, -1.0)
        if C > 1 and np.arccos(dots.max()) <= 1e-6:
            fails.append("two cell centers coincide")
        recomputed = np.array([
            verts[list(cell_vertex_ids(p, ci))].mean(axis=0) for ci in range(C)
        ])
        recomputed = _unit_rows(recomputed)
        if np.max(np.abs(recomputed - centers)) > 1e-12:
            fails.append("cell centers do not match normalized vertex centroids")

    return ValidationReport(ok=not fails, failures=tuple(fails))


def to_dict(p: Polychoron) -> dict:
    """JSON-ready combinatorics export (all arrays zero-indexed)."""
    return {
        "name": p.name,
        "vertices": [[float(c) for c in row] for row in p.vertices],
        "edges": [list(e) for e in p.edges],
        "faces": [list(f) for f in p.faces],
        "cells": [list(c) for c in p.cells],
        "cellCenters": [[float(c) for c in row] for row in p.cell_centers],
    }
