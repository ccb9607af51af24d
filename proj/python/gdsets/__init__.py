"""Greedy defining sets of ordered graphs and Latin squares."""

from ._gds import *  # noqa: F401,F403
from ._gds import (
    CapabilityError,
    GdsError,
    InputError,
    InternalError,
    LatinSquare,
    OrderedGraph,
)

__all__ = [
    "CapabilityError",
    "GdsError",
    "InputError",
    "InternalError",
    "LatinSquare",
    "OrderedGraph",
    "audit",
    "bipartite_vc_instance",
    "bound_report",
    "brute_force_gdn_oracle",
    "chromatic_number",
    "colored_vc_instance",
    "cover_gds",
    "deal",
    "find_descents",
    "forest_gdn",
    "g_number",
    "gdn",
    "gdn_fixed",
    "gds_size_bound",
    "greedy_color",
    "greedy_complete",
    "greedy_square",
    "is_gds",
    "latin_descents",
    "min_hitting_set",
    "min_latin_gds",
    "min_vertex_cover",
    "random_latin",
    "reconstruct",
    "verify_latin_gds",
]
