"""Navigation game engine on the 3-sphere.

The cells of a regular 4-polytope live on S³; a stream of unit quaternions
moves the player, who eats cells by geodesic proximity until none are left.
"""

from .coloring import base_color, hopf_map, mesh_colors, shaded_color
from .errors import (AntipodalPairError, BadStepError, ConfigError,
                     NearPoleError, NonMonotonicTimeError, PolychoraError,
                     SubdivisionTooDeepError, TrajectoryFormatError,
                     UnknownPolytopeError, ZeroVectorError)
from .game import (EatEvent, Game, GameConfig, default_eat_radius,
                   event_log_lines, write_event_log)
from .polytopes import (NAMES, DualGraph, Polychoron, ValidationReport, build,
                        cell_centers, dual_adjacency, from_vertex_array,
                        to_dict, validate)
from .projection import (ProjectedMesh, TessellatedMesh, default_subdivision,
                         inverse_stereographic, project_mesh, radial_project,
                         scene_transform, stereographic, tessellate)
from .quat import (AxisAngle, UnitQuaternion, conjugate, from_axis_angle,
                   from_wire, geodesic_distance, multiply, resolve_sign,
                   slerp, to_rotation_matrix, to_wire)
from .trajectory import (TrajectorySample, hamiltonian_path, interpolate,
                         nn_tour, read_trajectory, spin_trajectory,
                         tour_trajectory, write_trajectory)

__version__ = "0.1.0"

__all__ = [
    "AntipodalPairError", "AxisAngle", "BadStepError", "ConfigError",
    "DualGraph", "EatEvent", "Game", "GameConfig", "NAMES", "NearPoleError",
    "NonMonotonicTimeError", "Polychoron", "PolychoraError", "ProjectedMesh",
    "SubdivisionTooDeepError", "TessellatedMesh", "TrajectoryFormatError",
    "TrajectorySample", "UnitQuaternion", "UnknownPolytopeError",
    "ValidationReport", "ZeroVectorError", "base_color", "build",
    "cell_centers", "conjugate", "default_eat_radius", "default_subdivision",
    "dual_adjacency", "event_log_lines", "from_axis_angle",
    "from_vertex_array", "from_wire", "geodesic_distance", "hamiltonian_path",
    "hopf_map", "interpolate", "inverse_stereographic", "mesh_colors",
    "multiply", "nn_tour", "project_mesh", "radial_project", "read_trajectory",
    "resolve_sign", "scene_transform", "shaded_color", "slerp",
    "spin_trajectory", "stereographic", "tessellate", "to_dict",
    "to_rotation_matrix", "to_wire", "tour_trajectory", "validate",
    "write_event_log", "write_trajectory",
]
