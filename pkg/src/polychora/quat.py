"""Unit quaternion algebra and the S³ metric.

Conventions
-----------
- Component order is (w, x, y, z), scalar first, everywhere including wire
  formats. q = w + xi + yj + zk with i² = j² = k² = ijk = −1.
- Unit quaternions are the points of S³. Distance is the geodesic arc length,
  arccos of the 4D dot product; antipodes are at distance π (this is S³, not
  the rotation group: q and −q are distinct points even though they rotate
  3-space identically).
- Constructors reject norm < 1e-12 and renormalize whenever |norm − 1|
  exceeds 1e-9, so drift stays bounded under long multiply chains while
  already-unit values pass through bit-identical (negation, conjugation and
  multiplication by 1 are then exact, which the double-cover identities
  depend on).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AntipodalPairError, ZeroVectorError

IDENTITY_TOL = 1e-12
RENORM_TOL = 1e-9
ANTIPODE_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class UnitQuaternion:
    w: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        n = math.sqrt(self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z)
        if n < IDENTITY_TOL:
            raise ValueError("cannot normalize a zero quaternion")
        if abs(n - 1.0) > RENORM_TOL:
            object.__setattr__(self, "w", self.w / n)
            object.__setattr__(self, "x", self.x / n)
            object.__setattr__(self, "y", self.y / n)
            object.__setattr__(self, "z", self.z / n)

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def __neg__(self) -> "UnitQuaternion":
        return UnitQuaternion(-self.w, -self.x, -self.y, -self.z)


ONE = UnitQuaternion(1.0, 0.0, 0.0, 0.0)
I = UnitQuaternion(0.0, 1.0, 0.0, 0.0)
J = UnitQuaternion(0.0, 0.0, 1.0, 0.0)
K = UnitQuaternion(0.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True, slots=True)
class AxisAngle:
    """Rotation axis (unit 3-vector) and angle in radians (any real)."""

    axis: tuple[float, float, float]
    angle: float

    def __post_init__(self):
        ax, ay, az = self.axis
        n = math.sqrt(ax * ax + ay * ay + az * az)
        if n < IDENTITY_TOL:
            raise ZeroVectorError("axis must be nonzero")
        object.__setattr__(self, "axis", (ax / n, ay / n, az / n))


def multiply(a: UnitQuaternion, b: UnitQuaternion) -> UnitQuaternion:
    """Hamilton product a·b. Noncommutative."""
    return UnitQuaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def conjugate(q: UnitQuaternion) -> UnitQuaternion:
    """Group inverse for unit quaternions: (w, −x, −y, −z)."""
    return UnitQuaternion(q.w, -q.x, -q.y, -q.z)


def geodesic_distance(p: UnitQuaternion, q: UnitQuaternion) -> float:
    """Arc length on S³, in [0, π]. The dot product is clamped before arccos."""
    d = p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z
    return math.acos(max(-1.0, min(1.0, d)))


def from_axis_angle(axis, angle: float | None = None) -> UnitQuaternion:
    """cos(angle/2) + sin(angle/2)·(axis·(i,j,k)).

    axis is any nonzero 3-vector (normalized here); angle in radians, any
    real value. An AxisAngle instance is accepted in place of (axis, angle).
    """
    if isinstance(axis, AxisAngle):
        angle = axis.angle
        axis = axis.axis
    if angle is None:
        raise TypeError("angle is required unless an AxisAngle is given")
    ax, ay, az = (float(c) for c in axis)
    n = math.sqrt(ax * ax + ay * ay + az * az)
    if n < IDENTITY_TOL:
        raise ZeroVectorError("axis must be nonzero")
    h = 0.5 * angle
    s = math.sin(h) / n
    return UnitQuaternion(math.cos(h), s * ax, s * ay, s * az)


def to_rotation_matrix(q: UnitQuaternion) -> np.ndarray:
    """The 3×3 rotation of v ↦ q v q̄ restricted to pure quaternions.

    Identifies q and −q (the two preimages of one rotation).
    """
    w, x, y, z = q.w, q.x, q.y, q.z
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)],
        [2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)],
        [2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)],
    ])


def slerp(p: UnitQuaternion, q: UnitQuaternion, t: float) -> UnitQuaternion:
    """Point at parameter t on the minor arc from p to q.

    No sign shortcut is taken: the arc interpolated is the one between p and
    q exactly as given, which is why antipodal inputs must be rejected rather
    than silently flipped.
    """
    dot = p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z
    dot = max(-1.0, min(1.0, dot))
    omega = math.acos(dot)
    if omega >= math.pi - ANTIPODE_TOL:
        raise AntipodalPairError("slerp between antipodal points is undefined")
    if omega < 1e-9:
        # nearly coincident: linear blend, renormalized by the constructor
        a, b = 1.0 - t, t
    else:
        s = math.sin(omega)
        a = math.sin((1.0 - t) * omega) / s
        b = math.sin(t * omega) / s
    return UnitQuaternion(
        a * p.w + b * q.w, a * p.x + b * q.x, a * p.y + b * q.y, a * p.z + b * q.z
    )


def resolve_sign(prev: UnitQuaternion, cur: UnitQuaternion) -> UnitQuaternion:
    """Pick the sign of cur that stays on prev's side of S³.

    Orientation sensors report q or −q arbitrarily; continuity through time
    means the sample closer to the previous one is the real motion. An exact
    tie (dot = 0) keeps cur unchanged.
    """
    d = prev.w * cur.w + prev.x * cur.x + prev.y * cur.y + prev.z * cur.z
    return cur if d >= 0.0 else -cur


def left_matrix(a: UnitQuaternion) -> np.ndarray:
    """4×4 matrix of p ↦ a·p acting on (w,x,y,z) column vectors.

    Left multiplication by a unit quaternion is an element of SO(4); this is
    the workhorse for transforming whole vertex arrays at once.
    """
    w, x, y, z = a.w, a.x, a.y, a.z
    return np.array([
        [w, -x, -y, -z],
        [x, w, -z, y],
        [y, z, w, -x],
        [z, -y, x, w],
    ])


def from_wire(values) -> UnitQuaternion:
    """Parse the wire form [w, x, y, z].

    Accepts finite numbers with norm in [0.5, 2] and renormalizes; anything
    else raises ValueError. This is the single trust boundary for quaternions
    arriving from files or HTTP.
    """
    if not isinstance(values, (list, tuple)) or len(values) != 4:
        raise ValueError("quaternion wire form must be a 4-element array [w,x,y,z]")
    comps = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ValueError("quaternion components must be numbers")
        f = float(v)
        if not math.isfinite(f):
            raise ValueError("quaternion components must be finite")
        comps.append(f)
    n = math.sqrt(sum(c * c for c in comps))
    if not 0.5 <= n <= 2.0:
        raise ValueError(f"quaternion norm {n:.6g} outside [0.5, 2]")
    return UnitQuaternion(*comps)


def to_wire(q: UnitQuaternion) -> list[float]:
    return [q.w, q.x, q.y, q.z]
