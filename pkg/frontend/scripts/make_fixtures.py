"""Regenerates the fixtures that pin the web client to the engine.

- transform_vectors.json: (orientation, point) pairs with the engine's
  scene-transform and projection results; the TypeScript kernel must agree
  within 1e-6.
- mesh_5cell_1.json, mesh_8cell_1.json: exact /polytope/{name}?subdiv=1
  response bodies the renderer tests draw.
- expected_eats.json: the event-log cell sequence the committed script
  trajectory produces, computed through the HTTP service route. The test
  suite replays the same file through the live service and the command-line
  simulator and checks all three agree.

Run from the repository root after `npm run build && node
frontend/scripts/export_trajectory.mjs`:

    python3 frontend/scripts/make_fixtures.py
"""

import json
from pathlib import Path

import numpy as np
from fastapi.testclient import TestClient

from polychora.projection import scene_transform, stereographic
from polychora.quat import UnitQuaternion
from polychora.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def rand_quat(rng) -> UnitQuaternion:
    v = rng.normal(size=4)
    return UnitQuaternion(*(v / np.linalg.norm(v)))


def write_transform_vectors() -> None:
    rng = np.random.default_rng(402)
    rows = []
    for _ in range(64):
        q, p = rand_quat(rng), rand_quat(rng)
        tp = scene_transform(q, p)
        row = {
            "q": [q.w, q.x, q.y, q.z],
            "p": [p.w, p.x, p.y, p.z],
            "transformed": [tp.w, tp.x, tp.y, tp.z],
        }
        # skip the projection where the transformed point nears the pole
        if tp.w > -1.0 + 1e-3:
            row["projected"] = [float(c) for c in stereographic(tp)]
        rows.append(row)
    out = "[\n" + ",\n".join(" " + json.dumps(r) for r in rows) + "\n]\n"
    (FIXTURES / "transform_vectors.json").write_text(out)
    print(f"wrote transform_vectors.json: {len(rows)} rows")


def write_mesh_fixtures() -> None:
    with TestClient(create_app()) as client:
        for name in ("5-cell", "8-cell"):
            body = client.get(f"/polytope/{name}", params={"subdiv": 1}).content
            out = FIXTURES / f"mesh_{name.replace('-', '')}_1.json"
            out.write_bytes(body)
            print(f"wrote {out.name}: {len(body)} bytes")


def write_expected_eats() -> None:
    lines = (FIXTURES / "script_trajectory.jsonl").read_text().splitlines()
    with TestClient(create_app()) as client:
        game = client.post("/games", json={"polytope": "8-cell"}).json()
        for line in lines:
            sample = json.loads(line)
            r = client.post(f"/games/{game['id']}/step",
                            json={"t": sample["t"], "q": sample["q"]})
            r.raise_for_status()
        log = client.get(f"/games/{game['id']}/log").text
    cells = [json.loads(line)["cell"] for line in log.splitlines()]
    (FIXTURES / "expected_eats.json").write_text(
        json.dumps({"polytope": "8-cell", "cells": cells}) + "\n")
    print(f"wrote expected_eats.json: {cells}")


if __name__ == "__main__":
    write_transform_vectors()
    write_mesh_fixtures()
    write_expected_eats()
