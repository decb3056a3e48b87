"""
Colored extremal trees.

This subpackage enumerates the mu-colored extremal trees indexing the strata of the Torelli
pullback of a product locus, and provides their structure theory: canonical encodings,
automorphisms, critical paths, local equations and smoothing structures.

Classes:
    - Partition: Ordered partition of the genus.
    - ColoredTree: Genus- and color-labeled tree.
    - CriticalPath: Path between positive vertices of different colors.
    - SmoothingStructure: Contraction of a tree onto a smoothing target.
"""

from .exceptions import InvalidPartition, InvalidTree
from .colored_tree import (
    Partition,
    ColoredTree,
    CriticalPath,
    critical_paths,
    covers_all_edges,
    is_stable,
    is_irreducible,
    dimension,
    validate_tree,
    is_extremal,
    tree_to_dict,
    tree_from_dict,
    tree_to_json,
    tree_from_json,
    make_tree,
)
from .encoding import (
    centroids,
    canonical_encode,
    encoding_text,
    canonical_form,
    edge_order_key,
    edge_labels,
)
from .enumeration import vertex_count_bound, trees_of_order, enumerate_trees
from .catalog import catalog_path, load_catalog, save_catalog, cached_trees
from .structure import (
    SmoothingStructure,
    automorphism_order,
    isomorphism,
    contract,
    smoothings,
    minimal_smoothings,
    compose,
    is_composite_of_minimal,
    local_equations,
)

__all__ = [
    "InvalidPartition",
    "InvalidTree",
    "Partition",
    "ColoredTree",
    "CriticalPath",
    "critical_paths",
    "covers_all_edges",
    "is_stable",
    "is_irreducible",
    "dimension",
    "validate_tree",
    "is_extremal",
    "tree_to_dict",
    "tree_from_dict",
    "tree_to_json",
    "tree_from_json",
    "make_tree",
    "centroids",
    "canonical_encode",
    "encoding_text",
    "canonical_form",
    "edge_order_key",
    "edge_labels",
    "vertex_count_bound",
    "trees_of_order",
    "enumerate_trees",
    "catalog_path",
    "load_catalog",
    "save_catalog",
    "cached_trees",
    "SmoothingStructure",
    "automorphism_order",
    "isomorphism",
    "contract",
    "smoothings",
    "minimal_smoothings",
    "compose",
    "is_composite_of_minimal",
    "local_equations",
]
