"""Local HTTP/JSON service: geometry for the UI, game sessions for anyone.

Single-process, in-memory sessions. Geometry responses are rendered once and
served as cached bytes, so identical requests are byte-identical for the life
of the process. Step requests to one game are serialized by a per-session
lock; distinct games run concurrently.

The HTTP boundary is where trust is established: quaternions are accepted
only as finite 4-arrays with norm in [0.5, 2], timestamps must not go
backwards (409), and everything else is a plain 400/404.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import Body, FastAPI, HTTPException, Response

from . import polytopes
from .coloring import base_color
from .errors import ConfigError, NonMonotonicTimeError, UnknownPolytopeError
from .game import Game, GameConfig, default_eat_radius, event_log_lines
from .projection import default_subdivision, tessellate
from .quat import ONE, from_wire, to_wire


@dataclass
class GameSession:
    id: str
    game: Game
    lock: threading.Lock = field(default_factory=threading.Lock)


def _game_summary(session: GameSession) -> dict:
    g = session.game
    return {
        "id": session.id,
        "polytope": g.config.polytope_name,
        "cellCount": g.cell_count,
        "eatRadius": g.eat_radius,
        "eaten": g.eaten_cells(),
        "coverage": g.coverage(),
        "won": g.won,
        "player": to_wire(g.current),
    }


def _mesh_payload(name: str, subdiv: int) -> dict:
    p = polytopes.build(name)
    mesh = tessellate(p, subdiv)
    corners = mesh.vertices4[mesh.triangles]
    centroids = corners.mean(axis=1)
    centroids /= ((centroids ** 2).sum(axis=1, keepdims=True)) ** 0.5
    colors = base_color(centroids)
    return {
        "name": name,
        "subdivisionLevel": subdiv,
        "vertices4": [[float(c) for c in row] for row in mesh.vertices4],
        "triangles": [[int(i) for i in t] for t in mesh.triangles],
        "cellIds": [int(c) for c in mesh.cell_ids],
        "normals4": [[float(c) for c in row] for row in mesh.face_normals4],
        "colors": [[float(c) for c in row] for row in colors],
        "cellCount": len(p.cells),
        "eatRadius": default_eat_radius(name),
    }


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="polychora", docs_url=None, redoc_url=None)
    sessions: dict[str, GameSession] = {}
    mesh_cache: dict[tuple[str, int], bytes] = {}
    structure_cache: dict[str, bytes] = {}
    cache_lock = threading.Lock()

    def get_session(game_id: str) -> GameSession:
        session = sessions.get(game_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"no game {game_id}")
        return session

    @app.get("/polytopes")
    def list_polytopes():
        out = []
        for name in polytopes.NAMES:
            v, e, f, c = polytopes.build(name).counts
            out.append({"name": name, "vertices": v, "edges": e, "faces": f, "cells": c})
        return {"polytopes": out}

    @app.get("/polytope/{name}")
    def polytope_mesh(name: str, subdiv: int | None = None):
        if name not in polytopes.NAMES:
            raise HTTPException(status_code=404, detail=f"unknown polytope {name!r}")
        level = default_subdivision(name) if subdiv is None else subdiv
        if not 0 <= level <= 6:
            raise HTTPException(status_code=400, detail="subdiv must be in 0..6")
        key = (name, level)
        with cache_lock:
            body = mesh_cache.get(key)
        if body is None:
            import json

            body = json.dumps(_mesh_payload(name, level), separators=(",", ":")).encode()
            with cache_lock:
                body = mesh_cache.setdefault(key, body)
        return Response(content=body, media_type="application/json")

    @app.get("/polytope/{name}/structure")
    def polytope_structure(name: str):
        if name not in polytopes.NAMES:
            raise HTTPException(status_code=404, detail=f"unknown polytope {name!r}")
        with cache_lock:
            body = structure_cache.get(name)
        if body is None:
            import json

            body = json.dumps(polytopes.to_dict(polytopes.build(name)),
                              separators=(",", ":")).encode()
            with cache_lock:
                body = structure_cache.setdefault(name, body)
        return Response(content=body, media_type="application/json")

    @app.post("/games", status_code=201)
    def create_game(body: dict = Body(...)):
        name = body.get("polytope")
        if name not in polytopes.NAMES:
            raise HTTPException(status_code=404, detail=f"unknown polytope {name!r}")
        radius = body.get("eatRadius")
        if radius is not None and (isinstance(radius, bool) or not isinstance(radius, (int, float))):
            raise HTTPException(status_code=400, detail="eatRadius must be a number")
        start = ONE
        if "start" in body:
            try:
                start = from_wire(body["start"])
            except ValueError as e:
                raise HTTPException(status_code=400, detail=str(e))
        try:
            game = Game(GameConfig(polytope_name=name, eat_radius=radius,
                                   start_orientation=start))
        except (ConfigError, UnknownPolytopeError) as e:
            raise HTTPException(status_code=400, detail=str(e))
        session = GameSession(id=uuid.uuid4().hex, game=game)
        sessions[session.id] = session
        return _game_summary(session)

    @app.get("/games/{game_id}")
    def game_state(game_id: str):
        return _game_summary(get_session(game_id))

    @app.post("/games/{game_id}/step")
    def step_game(game_id: str, body: dict = Body(...)):
        session = get_session(game_id)
        t = body.get("t")
        if isinstance(t, bool) or not isinstance(t, (int, float)):
            raise HTTPException(status_code=400, detail="t must be a number")
        try:
            q = from_wire(body.get("q"))
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e))
        with session.lock:
            try:
                events = session.game.step(q, float(t))
            except NonMonotonicTimeError as e:
                raise HTTPException(status_code=409, detail=str(e))
            return {
                "eaten": [e.cell for e in events],
                "coverage": session.game.coverage(),
                "won": session.game.won,
                "player": to_wire(session.game.current),
            }

    @app.get("/games/{game_id}/log")
    def game_log(game_id: str):
        session = get_session(game_id)
        with session.lock:
            lines = event_log_lines(session.game.events)
        body = "".join(line + "\n" for line in lines)
        return Response(content=body, media_type="application/x-ndjson")

    @app.delete("/games/{game_id}")
    def end_game(game_id: str):
        get_session(game_id)
        del sessions[game_id]
        return {"id": game_id, "deleted": True}

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/app", StaticFiles(directory=static_dir, html=True), name="app")

    return app
