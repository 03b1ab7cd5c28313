"""Permutahedra and Coxeter generalized associahedra of finite reflection groups, in exact arithmetic."""

from __future__ import annotations

from .cambrian import (Associahedron, CoxeterElement, build_associahedron, c_singletons, c_sortables,
                       c_sorting_word, cambrian_lattice, cluster_map, coxeter_elements, parse_coxeter)
from .coxeter import CoxeterSystem, GroupElement, WeakOrderLattice, build_system
from .permutahedron import Permutahedron, build_permutahedron
from .roots import (GroupSpecError, InvariantViolation, PreconditionError, UnsupportedExactField,
                    build_root_system, parse_group)
from .scalar import ExactField, FloatField, Scalar

__version__ = "0.1.0"

__all__ = [
    "Associahedron", "CoxeterElement", "CoxeterSystem", "ExactField", "FloatField", "GroupElement",
    "GroupSpecError", "InvariantViolation", "Permutahedron", "PreconditionError", "Scalar",
    "UnsupportedExactField", "WeakOrderLattice", "build_associahedron", "build_permutahedron",
    "build_root_system", "build_system", "c_singletons", "c_sortables", "c_sorting_word",
    "cambrian_lattice", "cluster_map", "coxeter_elements", "parse_coxeter", "parse_group",
]
