"""Exact computation of the cone of diagonal derivations of a nice nilpotent
Lie algebra, with the supporting rational polyhedra and moment-map tools."""

from .catalog import get as get_algebra
from .cone import ConeSpec, build_cone, build_cone_relaxed, cone_membership, product_cone
from .lie import LieBracket, TorusParam, validate
from .moment import SymMatrix, moment_map, moment_map_nice
from .polyhedra import MixedSystem, SlicePolytope, StrictSystem, minimize, slice_vertices, systems_equal

__all__ = [
    "ConeSpec", "LieBracket", "MixedSystem", "SlicePolytope", "StrictSystem", "SymMatrix",
    "TorusParam", "build_cone", "build_cone_relaxed", "cone_membership", "get_algebra",
    "minimize", "moment_map", "moment_map_nice", "product_cone", "slice_vertices",
    "systems_equal", "validate",
]
__version__ = "0.1.0"
