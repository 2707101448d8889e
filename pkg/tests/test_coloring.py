import math

import numpy as np

from conftest import rand_quat
from polychora.coloring import base_color, hopf_map, mesh_colors, shaded_color
from polychora.polytopes import build
from polychora.projection import project_mesh, tessellate
from polychora.quat import (I, J, K, ONE, UnitQuaternion, multiply,
                            to_rotation_matrix)


def test_hopf_known_values():
    assert np.max(np.abs(hopf_map(ONE) - [1.0, 0.0, 0.0])) <= 1e-15
    # i is on the fiber through 1 (right multiplication by i fixes the image)
    assert np.max(np.abs(hopf_map(I) - [1.0, 0.0, 0.0])) <= 1e-15
    assert np.max(np.abs(hopf_map(J) - [-1.0, 0.0, 0.0])) <= 1e-15
    assert np.max(np.abs(hopf_map(K) - [-1.0, 0.0, 0.0])) <= 1e-15


def test_hopf_unit(rng):
    for _ in range(1000):
        h = hopf_map(rand_quat(rng))
        assert abs(np.linalg.norm(h) - 1.0) <= 1e-12


def test_hopf_matches_conjugation_oracle(rng):
    # the image is q·i·q̄ restricted to imaginaries, i.e. the rotation of e_x
    for _ in range(200):
        q = rand_quat(rng)
        want = to_rotation_matrix(q) @ [1.0, 0.0, 0.0]
        assert np.max(np.abs(hopf_map(q) - want)) <= 1e-12


def test_hopf_fiber_invariance(rng):
    for _ in range(1000):
        q = rand_quat(rng)
        alpha = rng.uniform(-math.pi, math.pi)
        fiber = UnitQuaternion(math.cos(alpha), math.sin(alpha), 0.0, 0.0)
        assert np.max(np.abs(hopf_map(multiply(q, fiber)) - hopf_map(q))) <= 1e-12


def test_hopf_vectorized_matches_scalar(rng):
    qs = np.array([rand_quat(rng).as_array() for _ in range(64)])
    batch = hopf_map(qs)
    assert batch.shape == (64, 3)
    for k in range(64):
        assert np.max(np.abs(batch[k] - hopf_map(UnitQuaternion(*qs[k])))) == 0.0


def test_hopf_surjective_on_grid(rng):
    # 1e5 samples land in every cell of a 12x12 polar-azimuthal grid
    vs = rng.normal(size=(100000, 4))
    vs /= np.linalg.norm(vs, axis=1, keepdims=True)
    h = hopf_map(vs)
    tb = np.minimum((np.arccos(np.clip(h[:, 2], -1, 1)) / math.pi * 12).astype(int), 11)
    pb = np.minimum(((np.arctan2(h[:, 1], h[:, 0]) + math.pi)
                     / (2 * math.pi) * 12).astype(int), 11)
    assert len(set(zip(tb.tolist(), pb.tolist()))) == 144


def test_base_color_values(rng):
    assert np.max(np.abs(base_color(ONE) - [1.0, 0.5, 0.5])) <= 1e-15
    for _ in range(200):
        c = base_color(rand_quat(rng))
        assert np.all(c >= 0.0) and np.all(c <= 1.0)


def test_base_color_fiber_constant(rng):
    for _ in range(100):
        q = rand_quat(rng)
        alpha = rng.uniform(-math.pi, math.pi)
        fiber = UnitQuaternion(math.cos(alpha), math.sin(alpha), 0.0, 0.0)
        assert np.max(np.abs(base_color(multiply(q, fiber)) - base_color(q))) <= 1e-12


def test_shaded_color_strength_zero_is_base(rng):
    for _ in range(50):
        pos, nrm = rand_quat(rng), rand_quat(rng)
        got = shaded_color(pos, nrm.as_array(), strength=0.0)
        assert np.max(np.abs(got - base_color(pos))) == 0.0


def test_shaded_color_range_and_formula(rng):
    for _ in range(200):
        pos, nrm = rand_quat(rng), rand_quat(rng)
        s = rng.uniform(0.0, 1.0)
        got = shaded_color(pos, nrm.as_array(), strength=s)
        want = np.clip(base_color(pos) + s * hopf_map(nrm) / 2.0, 0.0, 1.0)
        assert np.max(np.abs(got - want)) <= 1e-15
        assert np.all(got >= 0.0) and np.all(got <= 1.0)


def test_shading_separates_walls_of_one_cell():
    # two triangles of the same cell with different wall orientations must
    # shade differently even though base position is similar
    pm = project_mesh(tessellate(build("8-cell"), 0), ONE)
    colors = mesh_colors(pm.centroids4, pm.normals4, strength=0.5)
    assert colors.shape == (len(pm.triangles), 3)
    assert np.all(colors >= 0.0) and np.all(colors <= 1.0)
    cell = int(pm.cell_ids[0])
    picks = [k for k in range(len(pm.triangles)) if pm.cell_ids[k] == cell]
    distinct = {tuple(np.round(colors[k], 9)) for k in picks}
    assert len(distinct) > 1
