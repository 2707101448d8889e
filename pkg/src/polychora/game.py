"""The game itself: a quaternion stream eats cells by geodesic proximity.

The player's position on S³ IS the (sign-resolved) orientation quaternion.
Each step resolves the raw sample's sign against the resolved history, then
marks every uneaten cell whose center lies within the eat radius. Distances
are measured on S³, before any projection, so the set of eaten cells cannot
depend on how the scene happens to be rendered.

Eat checks happen at step endpoints only; trajectory generators keep sample
spacing at or below half the eat radius so nothing can be jumped over.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConfigError, NonMonotonicTimeError
from .polytopes import build, cell_vertex_ids
from .quat import ONE, UnitQuaternion, resolve_sign, to_wire


@lru_cache(maxsize=None)
def default_eat_radius(name: str) -> float:
    """Geodesic distance from a cell center to its edge midpoints on S³.

    This spherical midradius shrinks strictly with cell count across the six
    polytopes (finer polytope, tighter aim required), stays below π/2, and is
    smaller than the adjacent-center separation, so a player parked on a
    center eats exactly that cell.
    """
    p = build(name)
    edge_set = {e for e in p.edges}
    vids = cell_vertex_ids(p, 0)
    center = p.cell_centers[0]
    arcs = []
    for i in vids:
        for j in vids:
            if i < j and (i, j) in edge_set:
                mid = p.vertices[i] + p.vertices[j]
                mid /= np.linalg.norm(mid)
                arcs.append(math.acos(max(-1.0, min(1.0, float(center @ mid)))))
    return float(np.mean(arcs))


@dataclass(frozen=True)
class GameConfig:
    polytope_name: str
    eat_radius: float | None = None   # None -> default_eat_radius(polytope_name)
    start_orientation: UnitQuaternion = ONE


@dataclass(frozen=True)
class EatEvent:
    t: float
    cell: int
    pos: UnitQuaternion


class Game:
    """One play-through. Single writer; steps strictly ordered by time."""

    def __init__(self, config: GameConfig):
        self.config = config
        self.polychoron = build(config.polytope_name)
        radius = config.eat_radius
        if radius is None:
            radius = default_eat_radius(config.polytope_name)
        if not 0.0 < radius < math.pi / 2.0:
            raise ConfigError(f"eat radius {radius!r} outside (0, pi/2)")
        self.eat_radius = float(radius)
        self._centers = self.polychoron.cell_centers
        self.eaten = np.zeros(len(self._centers), dtype=bool)
        self.current = config.start_orientation
        self.events: list[EatEvent] = []
        self._last_t = 0.0
        # the cell under the player's nose is edible immediately
        self._eat_check(0.0)

    @property
    def cell_count(self) -> int:
        return len(self._centers)

    @property
    def won(self) -> bool:
        return bool(self.eaten.all())

    def coverage(self) -> float:
        return float(self.eaten.sum()) / self.cell_count

    def eaten_cells(self) -> list[int]:
        return [int(i) for i in np.nonzero(self.eaten)[0]]

    def _eat_check(self, t: float) -> list[EatEvent]:
        pos = self.current.as_array()
        d = np.arccos(np.clip(self._centers @ pos, -1.0, 1.0))
        hits = np.nonzero(~self.eaten & (d <= self.eat_radius))[0]
        new = [EatEvent(t=float(t), cell=int(c), pos=self.current) for c in hits]
        self.eaten[hits] = True
        self.events.extend(new)
        return new

    def step(self, raw_q: UnitQuaternion, t: float) -> list[EatEvent]:
        """Ingest one orientation sample; returns the cells eaten by it.

        Raw samples may arrive with arbitrary sign per sample (sensors do
        that); continuity is restored here, not trusted from callers.
        """
        if t < self._last_t:
            raise NonMonotonicTimeError(f"t went backwards: {t} < {self._last_t}")
        self._last_t = float(t)
        self.current = resolve_sign(self.current, raw_q)
        return self._eat_check(t)


def event_log_lines(events) -> list[str]:
    """One compact JSON object per event: {"t":…,"cell":…,"pos":[w,x,y,z]}."""
    return [
        json.dumps({"t": e.t, "cell": e.cell, "pos": to_wire(e.pos)},
                   separators=(",", ":"))
        for e in events
    ]


def write_event_log(events, path) -> None:
    with open(path, "w") as fh:
        for line in event_log_lines(events):
            fh.write(line + "\n")
