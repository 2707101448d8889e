"""Cell coloring from the Hopf map S³ → S², inscribed in the RGB cube.

A scene point's position on S³ determines its base color (the image 2-sphere
sits inside the color cube, so every component lands in [0,1]); the surface
normal contributes a zero-centered shading term on top. Both inputs are taken
AFTER the scene transform, so colors slide over the cells as the player
moves.

Convention: hopf(q) = Im(q·i·q̄) = (w²+x²−y²−z², 2(xy+wz), 2(xz−wy)). Right
multiplication by cos α + sin α·i commutes through the conjugation, which
makes fiber invariance a one-line identity (and a one-line test).
"""

from __future__ import annotations

import numpy as np

from .quat import UnitQuaternion

DEFAULT_SHADING_STRENGTH = 0.5


def _rows4(v) -> np.ndarray:
    if isinstance(v, UnitQuaternion):
        return v.as_array()
    return np.asarray(v, dtype=float)


def hopf_map(q) -> np.ndarray:
    """Unit 3-vector Im(q·i·q̄). Accepts a UnitQuaternion or an (..., 4) array."""
    a = _rows4(q)
    w, x, y, z = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    return np.stack([
        w * w + x * x - y * y - z * z,
        2.0 * (x * y + w * z),
        2.0 * (x * z - w * y),
    ], axis=-1)


def base_color(p) -> np.ndarray:
    """Map the Hopf image sphere affinely into the color cube [0,1]³."""
    return (hopf_map(p) + 1.0) / 2.0


def shaded_color(position, normal4, strength: float = DEFAULT_SHADING_STRENGTH) -> np.ndarray:
    """Base color plus a zero-centered normal term, clamped to the cube.

    Raw addition of two cube colors drifts toward white; hopf(normal)/2 lies
    in [−½, ½] per component, so mid-range base colors stay distinguishable.
    """
    shade = hopf_map(normal4) / 2.0
    return np.clip(base_color(position) + strength * shade, 0.0, 1.0)


def mesh_colors(centroids4: np.ndarray, normals4: np.ndarray,
                strength: float = DEFAULT_SHADING_STRENGTH) -> np.ndarray:
    """Per-triangle colors for a projected mesh, rows parallel to triangles."""
    return shaded_color(centroids4, normals4, strength)
