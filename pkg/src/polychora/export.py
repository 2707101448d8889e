"""Deterministic mesh serialization: JSON for the UI, OBJ/MTL for tools.

Identical inputs must produce byte-identical files. JSON floats use Python's
shortest round-trip repr; OBJ coordinates are fixed at 9 decimals; colors are
quantized to 8 bits only at the OBJ boundary.
"""

from __future__ import annotations

import json

import numpy as np

from .projection import ProjectedMesh


def mesh_json_dict(pm: ProjectedMesh, colors: np.ndarray) -> dict:
    return {
        "vertices3": [[float(c) for c in row] for row in pm.vertices3],
        "triangles": [[int(i) for i in tri] for tri in pm.triangles],
        "cellIds": [int(c) for c in pm.cell_ids],
        "colors": [[float(c) for c in row] for row in colors],
    }


def dump_mesh_json(pm: ProjectedMesh, colors: np.ndarray) -> str:
    return json.dumps(mesh_json_dict(pm, colors), separators=(",", ":"))


def write_mesh_json(path, pm: ProjectedMesh, colors: np.ndarray) -> None:
    with open(path, "w") as fh:
        fh.write(dump_mesh_json(pm, colors))
        fh.write("\n")


def _quantize(color) -> tuple[int, int, int]:
    return tuple(int(round(255.0 * float(c))) for c in color)


def write_obj(path, pm: ProjectedMesh, colors: np.ndarray) -> None:
    """OBJ with a sibling .mtl; one group per cell, one material per color.

    Triangles are regrouped by cell id; materials are named after their 8-bit
    color so identical colors share one entry.
    """
    path = str(path)
    stem = path[:-4] if path.endswith(".obj") else path
    obj_path, mtl_path = stem + ".obj", stem + ".mtl"
    mtl_name = mtl_path.rsplit("/", 1)[-1]

    quant = [_quantize(c) for c in colors]
    palette = sorted(set(quant))
    with open(mtl_path, "w") as fh:
        for r, g, b in palette:
            fh.write(f"newmtl c{r:02x}{g:02x}{b:02x}\n")
            fh.write(f"Kd {r / 255.0:.6f} {g / 255.0:.6f} {b / 255.0:.6f}\n")

    order = sorted(range(len(pm.triangles)), key=lambda k: (int(pm.cell_ids[k]), k))
    with open(obj_path, "w") as fh:
        fh.write(f"mtllib {mtl_name}\n")
        for v in pm.vertices3:
            fh.write(f"v {v[0]:.9f} {v[1]:.9f} {v[2]:.9f}\n")
        current_cell = None
        current_mtl = None
        for k in order:
            cell = int(pm.cell_ids[k])
            if cell != current_cell:
                fh.write(f"g cell{cell}\n")
                current_cell = cell
            r, g, b = quant[k]
            mtl = f"c{r:02x}{g:02x}{b:02x}"
            if mtl != current_mtl:
                fh.write(f"usemtl {mtl}\n")
                current_mtl = mtl
            a, b_, c = (int(i) + 1 for i in pm.triangles[k])
            fh.write(f"f {a} {b_} {c}\n")
