"""Operads on labeled rooted trees: pre-Lie, NAP, brace, B0 and their weighted
deformations, with exact exhaustive verification of the operad axioms."""

from __future__ import annotations

from .algebra import LambdaPoly, LinComb, lc_add, lc_equal, lc_scale, monomial, poly_eval
from .enumeration import (
    enumerate_nonplanar,
    enumerate_planar,
    enumerate_planar_shapes,
    enumerate_weighted_shapes,
    enumerate_weightings,
)
from .graded import GradedElement, Semigroup, og_compose, phi_g
from .operads import (
    OPERADS,
    Operad,
    b0_compose,
    blambda_compose,
    brace_compose,
    get_operad,
    nap_compose,
    olambda_compose,
    phi,
    prelie_compose,
    star,
    unit_tree,
)
from .syntax import format_tree, parse_tree, tree_from_json, tree_to_dot, tree_to_json
from .trees import NonPlanarTree, PlanarTree, Tree, TreeError, canonicalize, energy, relabel
from .verify import CHECKS, CheckConfig, CheckReport, run_check

__version__ = "0.1.0"

__all__ = [
    "LambdaPoly",
    "LinComb",
    "lc_add",
    "lc_equal",
    "lc_scale",
    "monomial",
    "poly_eval",
    "enumerate_nonplanar",
    "enumerate_planar",
    "enumerate_planar_shapes",
    "enumerate_weighted_shapes",
    "enumerate_weightings",
    "GradedElement",
    "Semigroup",
    "og_compose",
    "phi_g",
    "OPERADS",
    "Operad",
    "get_operad",
    "prelie_compose",
    "nap_compose",
    "brace_compose",
    "b0_compose",
    "olambda_compose",
    "blambda_compose",
    "phi",
    "star",
    "unit_tree",
    "format_tree",
    "parse_tree",
    "tree_from_json",
    "tree_to_dot",
    "tree_to_json",
    "Tree",
    "PlanarTree",
    "NonPlanarTree",
    "TreeError",
    "canonicalize",
    "energy",
    "relabel",
    "CHECKS",
    "CheckConfig",
    "CheckReport",
    "run_check",
]
