import json

import numpy as np
import pytest

from polychora.coloring import mesh_colors
from polychora.export import (dump_mesh_json, mesh_json_dict, write_mesh_json,
                              write_obj)
from polychora.polytopes import build
from polychora.projection import project_mesh, tessellate
from polychora.quat import ONE


@pytest.fixture(scope="module")
def mesh():
    pm = project_mesh(tessellate(build("8-cell"), 1), ONE, frozenset())
    return pm, mesh_colors(pm.centroids4, pm.normals4)


def test_json_dict_shape(mesh):
    pm, colors = mesh
    d = mesh_json_dict(pm, colors)
    assert set(d) == {"vertices3", "triangles", "cellIds", "colors"}
    assert len(d["triangles"]) == len(d["cellIds"]) == len(d["colors"])
    assert all(len(v) == 3 for v in d["vertices3"])
    assert all(len(t) == 3 for t in d["triangles"])
    assert all(isinstance(c, int) for c in d["cellIds"])
    # plain python scalars only, so json handles it without converters
    json.dumps(d)


def test_json_dump_is_compact_and_round_trips(mesh):
    pm, colors = mesh
    text = dump_mesh_json(pm, colors)
    assert " " not in text
    back = json.loads(text)
    assert back == mesh_json_dict(pm, colors)
    # repr round-trip keeps doubles exact
    assert back["vertices3"][0][0] == float(pm.vertices3[0][0])


def test_json_file_has_trailing_newline(tmp_path, mesh):
    pm, colors = mesh
    path = tmp_path / "mesh.json"
    write_mesh_json(path, pm, colors)
    raw = path.read_text()
    assert raw.endswith("\n")
    assert raw[:-1] == dump_mesh_json(pm, colors)


def test_json_writes_are_byte_identical(tmp_path, mesh):
    pm, colors = mesh
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    write_mesh_json(a, pm, colors)
    write_mesh_json(b, pm, colors)
    assert a.read_bytes() == b.read_bytes()


def test_obj_structure(tmp_path, mesh):
    pm, colors = mesh
    write_obj(tmp_path / "scene.obj", pm, colors)
    lines = (tmp_path / "scene.obj").read_text().splitlines()
    assert lines[0] == "mtllib scene.mtl"
    v_lines = [l for l in lines if l.startswith("v ")]
    f_lines = [l for l in lines if l.startswith("f ")]
    assert len(v_lines) == len(pm.vertices3)
    assert len(f_lines) == len(pm.triangles)
    # 9-decimal fixed point
    assert all(len(part.rsplit(".", 1)[1]) == 9
               for l in v_lines for part in l.split()[1:])
    # faces are 1-indexed into the vertex list
    idx = [int(p) for l in f_lines for p in l.split()[1:]]
    assert min(idx) >= 1 and max(idx) <= len(v_lines)


def test_obj_groups_cover_every_cell(tmp_path, mesh):
    pm, colors = mesh
    write_obj(tmp_path / "scene.obj", pm, colors)
    lines = (tmp_path / "scene.obj").read_text().splitlines()
    groups = [l.split()[1] for l in lines if l.startswith("g ")]
    assert groups == [f"cell{c}" for c in sorted(set(int(c) for c in pm.cell_ids))]
    # triangles land in their own cell's group
    cell = None
    seen = []
    for l in lines:
        if l.startswith("g "):
            cell = int(l.split()[1][4:])
        elif l.startswith("f "):
            seen.append(cell)
    order = sorted(range(len(pm.triangles)), key=lambda k: (int(pm.cell_ids[k]), k))
    assert seen == [int(pm.cell_ids[k]) for k in order]


def test_obj_materials_match_palette(tmp_path, mesh):
    pm, colors = mesh
    write_obj(tmp_path / "scene.obj", pm, colors)
    mtl = (tmp_path / "scene.mtl").read_text().splitlines()
    declared = [l.split()[1] for l in mtl if l.startswith("newmtl ")]
    assert declared == sorted(declared)
    assert len(declared) == len(set(declared))
    used = {l.split()[1] for l in (tmp_path / "scene.obj").read_text().splitlines()
            if l.startswith("usemtl ")}
    assert used == set(declared)
    # Kd lines reproduce the 8-bit quantization of the name
    for name_line, kd_line in zip(mtl[::2], mtl[1::2]):
        name = name_line.split()[1]
        r, g, b = (int(name[i:i + 2], 16) for i in (1, 3, 5))
        kd = [float(x) for x in kd_line.split()[1:]]
        assert kd == pytest.approx([r / 255.0, g / 255.0, b / 255.0], abs=1e-6)


def test_obj_quantization_boundaries(tmp_path, mesh):
    pm, _ = mesh
    n = len(pm.triangles)
    colors = np.tile([0.0, 1.0, 0.5], (n, 1))
    write_obj(tmp_path / "flat.obj", pm, colors)
    mtl = (tmp_path / "flat.mtl").read_text()
    assert "newmtl c00ff80\n" in mtl  # round(0.5*255) = 128 = 0x80
    assert mtl.count("newmtl") == 1


def test_obj_writes_are_byte_identical(tmp_path, mesh):
    pm, colors = mesh
    a, b = tmp_path / "a", tmp_path / "b"
    a.mkdir()
    b.mkdir()
    write_obj(a / "scene.obj", pm, colors)
    write_obj(b / "scene.obj", pm, colors)
    assert (a / "scene.obj").read_bytes() == (b / "scene.obj").read_bytes()
    assert (a / "scene.mtl").read_bytes() == (b / "scene.mtl").read_bytes()


def test_obj_extension_handling(tmp_path, mesh):
    pm, colors = mesh
    write_obj(tmp_path / "bare", pm, colors)
    assert (tmp_path / "bare.obj").exists()
    assert (tmp_path / "bare.mtl").exists()
