"""Tautological projections of product loci and Torelli pullbacks"""

from .version import __version__
from .config import ComputeConfig, TorelliError, TorelliConfigError
from .trees import Partition, ColoredTree, enumerate_trees
from .excess import ContPoly, cont_recursive, contribution_table, torelli_pullback
from .invariants import InvClass, integrate, pr_projection
from .lambda_ring import LambdaPoly, build_ring
from .stars import StarGraph, enumerate_stars, i_function, wallcross_assemble
from .emit import TautExpr, emit_script, delta_emit

__all__ = [
    "__version__",
    "ComputeConfig",
    "TorelliError",
    "TorelliConfigError",
    "Partition",
    "ColoredTree",
    "enumerate_trees",
    "ContPoly",
    "cont_recursive",
    "contribution_table",
    "torelli_pullback",
    "InvClass",
    "integrate",
    "pr_projection",
    "LambdaPoly",
    "build_ring",
    "StarGraph",
    "enumerate_stars",
    "i_function",
    "wallcross_assemble",
    "TautExpr",
    "emit_script",
    "delta_emit",
]
