"""Quaternion stream generators: spins, center tours, dual-graph paths.

These impersonate the orientation sensor. Timestamps tick at 60 samples/s.
All generators emit raw (sign-explicit) quaternions; the game applies its own
sign continuity, which must reconstruct exactly the path generated here.
"""

from __future__ import annotations

import json
import math
import time

from dataclasses import dataclass

import numpy as np

from .errors import AntipodalPairError, BadStepError, TrajectoryFormatError
from .polytopes import DualGraph, Polychoron
from .quat import (UnitQuaternion, from_axis_angle, from_wire,
                   geodesic_distance, slerp, to_wire)

SAMPLE_DT = 1.0 / 60.0
MAX_SPIN_STEP = 0.1


@dataclass(frozen=True)
class TrajectorySample:
    t: float
    q: UnitQuaternion


def spin_trajectory(axis, total_angle: float, step_angle: float) -> list[TrajectorySample]:
    """Rotation about one fixed axis, sampled every step_angle radians.

    The final sample's angle is clamped to total_angle so the stream ends
    exactly on the requested total rotation.
    """
    if not 0.0 < step_angle <= MAX_SPIN_STEP:
        raise BadStepError(f"step angle {step_angle!r} outside (0, {MAX_SPIN_STEP}]")
    if total_angle < 0.0:
        raise BadStepError("total angle must be nonnegative")
    steps = math.ceil(total_angle / step_angle)
    return [
        TrajectorySample(t=k * SAMPLE_DT,
                         q=from_axis_angle(axis, min(k * step_angle, total_angle)))
        for k in range(steps + 1)
    ]


def nn_tour(p: Polychoron, start: UnitQuaternion) -> list[UnitQuaternion]:
    """Greedy nearest-neighbor order over all cell centers.

    Exact distance ties resolve to the lowest cell id (argmin keeps the first
    hit), which also settles the antipodal case deterministically.
    """
    centers = p.cell_centers
    remaining = list(range(len(centers)))
    cur = start.as_array()
    tour: list[UnitQuaternion] = []
    while remaining:
        d = np.arccos(np.clip(centers[remaining] @ cur, -1.0, 1.0))
        k = int(np.argmin(d))
        cell = remaining.pop(k)
        cur = centers[cell]
        tour.append(UnitQuaternion(*cur))
    return tour


def hamiltonian_path(g: DualGraph, time_limit_ms: int = 10000) -> list[int] | None:
    """Backtracking search for a path visiting every node exactly once.

    Candidates are expanded fewest-remaining-neighbors first. Returns None on
    timeout, which is a resource verdict, not a nonexistence proof.
    """
    n = g.node_count
    if n == 0:
        return []
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    deadline = time.monotonic() + time_limit_ms / 1000.0

    def candidates(v: int, used: set[int]) -> list[int]:
        # sorted descending so list.pop() yields the most constrained node
        return sorted(
            (u for u in adj[v] if u not in used),
            key=lambda u: (len(adj[u] - used), u),
            reverse=True,
        )

    for start in range(n):
        path = [start]
        used = {start}
        stack = [candidates(start, used)]
        while stack:
            if time.monotonic() > deadline:
                return None
            if len(path) == n:
                return path
            if stack[-1]:
                v = stack[-1].pop()
                path.append(v)
                used.add(v)
                stack.append(candidates(v, used))
            else:
                stack.pop()
                used.discard(path.pop())
    return None


def interpolate(waypoints, max_step: float) -> list[TrajectorySample]:
    """Slerp through waypoints with per-sample geodesic steps ≤ max_step.

    Every distinct waypoint appears exactly (object-identical) in the output;
    zero-length segments collapse. Antipodal consecutive waypoints propagate
    AntipodalPairError; insert a via-point (see tour_trajectory).
    """
    if max_step <= 0.0:
        raise BadStepError(f"max step {max_step!r} must be positive")
    waypoints = list(waypoints)
    if not waypoints:
        return []
    points: list[UnitQuaternion] = [waypoints[0]]
    for a, b in zip(waypoints, waypoints[1:]):
        d = geodesic_distance(a, b)
        if d < 1e-15:
            continue
        steps = math.ceil(d / max_step)
        for k in range(1, steps):
            points.append(slerp(a, b, k / steps))
        points.append(b)
    return [TrajectorySample(t=i * SAMPLE_DT, q=q) for i, q in enumerate(points)]


def _orthogonal_via(a: UnitQuaternion) -> UnitQuaternion:
    """A point at distance π/2 from both a and −a, chosen deterministically."""
    arr = a.as_array()
    axis = int(np.argmin(np.abs(arr)))
    e = np.zeros(4)
    e[axis] = 1.0
    v = e - float(e @ arr) * arr
    return UnitQuaternion(*v)


def tour_trajectory(waypoints, max_step: float) -> list[TrajectorySample]:
    """interpolate(), with via-points inserted for near-antipodal hops."""
    expanded: list[UnitQuaternion] = []
    for q in waypoints:
        if expanded and geodesic_distance(expanded[-1], q) >= math.pi - 1e-6:
            expanded.append(_orthogonal_via(expanded[-1]))
        expanded.append(q)
    return interpolate(expanded, max_step)


def write_trajectory(samples, path) -> None:
    """JSON Lines, {"t": seconds, "q": [w,x,y,z]} per line."""
    with open(path, "w") as fh:
        for s in samples:
            fh.write(json.dumps({"t": s.t, "q": to_wire(s.q)}, separators=(",", ":")))
            fh.write("\n")


def read_trajectory(path) -> list[TrajectorySample]:
    samples: list[TrajectorySample] = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise TrajectoryFormatError(f"invalid JSON: {e.msg}", line=lineno) from e
            if not isinstance(obj, dict) or "t" not in obj or "q" not in obj:
                raise TrajectoryFormatError('expected {"t": …, "q": […]}', line=lineno)
            t = obj["t"]
            if isinstance(t, bool) or not isinstance(t, (int, float)) or not math.isfinite(t):
                raise TrajectoryFormatError("t must be a finite number", line=lineno)
            try:
                q = from_wire(obj["q"])
            except ValueError as e:
                raise TrajectoryFormatError(str(e), line=lineno) from e
            samples.append(TrajectorySample(t=float(t), q=q))
    return samples
