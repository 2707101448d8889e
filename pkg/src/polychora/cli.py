"""Command line front end.

Subcommands: info, export, simulate, plan, serve. Exit codes: 0 success,
2 usage errors (unknown polytope, bad flags), 3 I/O failures, 4 malformed
trajectory files (message carries the line number).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time

from .coloring import mesh_colors
from .errors import (ConfigError, PolychoraError, TrajectoryFormatError,
                     UnknownPolytopeError)
from .export import write_mesh_json, write_obj
from .game import Game, GameConfig, default_eat_radius, write_event_log
from .polytopes import NAMES, build, cell_centers, dual_adjacency
from .projection import default_subdivision, project_mesh, tessellate
from .quat import ONE, from_wire
from .trajectory import (hamiltonian_path, nn_tour, read_trajectory,
                         spin_trajectory, tour_trajectory, write_trajectory)

DEFAULT_PORT_ENV = "POLYCHORA_PORT"


def _parse_transform(text: str):
    parts = text.split(",")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected w,x,y,z floats, got {text!r}")
    try:
        return from_wire(values)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polychora",
        description="Regular 4-polytope engine: geometry export, game simulation, local service.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="element counts, dual degree, eat radius")
    p_info.add_argument("polytope")

    p_export = sub.add_parser("export", help="write a projected, colored mesh")
    p_export.add_argument("--polytope", required=True)
    p_export.add_argument("--format", choices=("json", "obj"), default="json")
    p_export.add_argument("--subdiv", type=int, default=None,
                          help="subdivision level (default depends on the polytope)")
    p_export.add_argument("--transform", type=_parse_transform, default="1,0,0,0",
                          help="player orientation w,x,y,z (default identity)")
    p_export.add_argument("--out", required=True)

    p_sim = sub.add_parser("simulate", help="run a quaternion stream through the game")
    p_sim.add_argument("--polytope", required=True)
    p_sim.add_argument("--source", choices=("nn-tour", "spin360", "spin720"),
                       default="nn-tour")
    p_sim.add_argument("--trajectory", default=None,
                       help="trajectory JSONL file (overrides --source)")
    p_sim.add_argument("--eat-radius", type=float, default=None)
    p_sim.add_argument("--out", default=None, help="event log JSONL path")

    p_plan = sub.add_parser("plan", help="emit a trajectory visiting every cell")
    p_plan.add_argument("--polytope", required=True)
    p_plan.add_argument("--time-limit-ms", type=int, default=10000,
                        help="budget for the dual-graph path search")
    p_plan.add_argument("--eat-radius", type=float, default=None,
                        help="radius used to bound sample spacing")
    p_plan.add_argument("--out", required=True)

    p_serve = sub.add_parser("serve", help="run the local HTTP service")
    p_serve.add_argument("--port", type=int,
                         default=int(os.environ.get(DEFAULT_PORT_ENV, "8000")))
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--static", default=None,
                         help="directory of UI assets to mount at /app")

    return parser


def _cmd_info(args) -> int:
    p = build(args.polytope)
    v, e, f, c = p.counts
    degrees = {len([1 for a, b in dual_adjacency(p).edges if ci in (a, b)])
               for ci in range(c)}
    print(p.name)
    print(f"vertices {v}  edges {e}  faces {f}  cells {c}")
    print(f"dual degree {degrees.pop() if len(degrees) == 1 else sorted(degrees)}")
    print(f"default eat radius {default_eat_radius(p.name):.6f} rad")
    return 0


def _cmd_export(args) -> int:
    p = build(args.polytope)
    level = args.subdiv if args.subdiv is not None else default_subdivision(p.name)
    transform = args.transform if not isinstance(args.transform, str) \
        else _parse_transform(args.transform)
    mesh = tessellate(p, level)
    pm = project_mesh(mesh, transform)
    colors = mesh_colors(pm.centroids4, pm.normals4)
    if args.format == "json":
        write_mesh_json(args.out, pm, colors)
    else:
        write_obj(args.out, pm, colors)
    print(f"wrote {args.out}: {len(pm.triangles)} triangles, "
          f"{len(pm.vertices3)} vertices, level {level}")
    return 0


def _make_stream(args, game: Game):
    if args.trajectory is not None:
        return read_trajectory(args.trajectory)
    if args.source == "spin360":
        return spin_trajectory((0.0, 0.0, 1.0), 2.0 * math.pi, 0.01)
    if args.source == "spin720":
        return spin_trajectory((0.0, 0.0, 1.0), 4.0 * math.pi, 0.01)
    waypoints = nn_tour(game.polychoron, game.config.start_orientation)
    return tour_trajectory(waypoints, game.eat_radius / 2.0)


def _cmd_simulate(args) -> int:
    started = time.perf_counter()
    game = Game(GameConfig(polytope_name=args.polytope, eat_radius=args.eat_radius))
    for sample in _make_stream(args, game):
        game.step(sample.q, sample.t)
    wall = time.perf_counter() - started
    if args.out is not None:
        write_event_log(game.events, args.out)
    print(f"polytope {args.polytope}  cells {game.cell_count}  "
          f"eaten {len(game.events)}  coverage {game.coverage():.6f}  "
          f"won {game.won}  wall {wall:.3f}s")
    return 0


def _cmd_plan(args) -> int:
    p = build(args.polytope)
    radius = args.eat_radius if args.eat_radius is not None else default_eat_radius(p.name)
    path = hamiltonian_path(dual_adjacency(p), args.time_limit_ms)
    if path is not None:
        centers = cell_centers(p)
        waypoints = [centers[i] for i in path]
        method = "hamiltonian"
    else:
        waypoints = nn_tour(p, ONE)
        method = "nn-tour (path search timed out)"
    samples = tour_trajectory(waypoints, radius / 2.0)
    write_trajectory(samples, args.out)
    print(f"wrote {args.out}: {len(samples)} samples via {method}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(static_dir=args.static), host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "info": _cmd_info,
    "export": _cmd_export,
    "simulate": _cmd_simulate,
    "plan": _cmd_plan,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (UnknownPolytopeError, ConfigError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except TrajectoryFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except PolychoraError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
