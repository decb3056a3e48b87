"""
Recursive excess intersection contributions.

For an irreducible tree the contribution is the degree d - c part of c(N) / prod_e (1 + z_e).
For a general tree T it is the quotient of

    c_d(N) - sum_{T'} (prod_{e' in E(T')} z_{eps(e')}) * Cont_{T'}[z_{e'} -> z_{eps(e')}]

by prod_{e in E(T)} z_e, the sum running over all smoothing structures T -> T'. The Chern
symbols of Cont_{T'} are read as the Chern classes of T's normal bundle.

Contributions are kept in the elementary representation of the local model, where
divisibility by the edge monomial is checked term by term; the Chern form is produced for
presentation and substitution.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from logging import Logger, getLogger
from typing import Any, Sequence

from sympy.polys.rings import PolyElement, PolyRing

from ..algebra import (
    gen,
    graded_piece,
    is_homogeneous,
    is_symmetric,
    poly_ring,
    render,
    series_inverse,
    substitute,
    to_fraction,
    to_qq,
    weighted_degree,
)
from ..config import ComputeConfigModel, resolve_config
from ..trees import (
    ColoredTree,
    Partition,
    SmoothingStructure,
    canonical_form,
    encoding_text,
    enumerate_trees,
    is_irreducible,
    isomorphism,
    smoothings,
    tree_from_dict,
    tree_to_dict,
)
from .exceptions import NotDivisible, NotIrreducible
from .local_model import LocalModel, local_model

Memo = dict[str, "ContPoly"]


@dataclass(frozen=True)
class ContPoly:
    """
    Contribution Cont_T of a tree.

    Attributes:
        tree (ColoredTree): The tree; its stored edge order names the edge variables.
        elementary (PolyElement): Cont_T in the elementary ring (z_e, e_j) of the local model.
    """

    tree: ColoredTree
    elementary: PolyElement

    @cached_property
    def model(self) -> LocalModel:
        """Local model of the tree."""
        return local_model(self.tree)

    @cached_property
    def expression(self) -> PolyElement:
        """Cont_T in the Chern ring (z_e, c_i(N))."""
        return to_chern_form(self)

    @property
    def degree(self) -> int:
        """Expected degree d - |E(T)|."""
        return self.model.d - self.tree.n_edges

    def __str__(self) -> str:
        return render_contribution(self)


def _chern_images(model: LocalModel) -> dict[str, PolyElement]:
    """e_j -> sum_{i=0..j} c_i [Q^-1]_{j-i} in the Chern ring."""
    r = model.chern_ring
    inverse = series_inverse(model.path_factor(r), model.rank, model.weights)
    pieces = [graded_piece(inverse, k, model.weights) for k in range(model.rank + 1)]
    chern = [r.one] + [gen(r, name) for name in model.chern_vars]
    return {
        name: sum((chern[i] * pieces[j + 1 - i] for i in range(j + 2)), r.zero)
        for j, name in enumerate(model.elementary_vars)
    }


def to_chern_form(cont: ContPoly) -> PolyElement:
    """Rewrite the elementary representation in the Chern symbols c_i(N)."""
    model = cont.model
    return substitute(cont.elementary, _chern_images(model), model.chern_ring)


def to_root_form(cont: ContPoly) -> PolyElement:
    """
    Root representation: c_i(N) -> [prod (1 + l) * Q]_i applied to the Chern form.
    """
    model = cont.model
    classes = model.root_chern_classes()
    images = {name: classes[i + 1] for i, name in enumerate(model.chern_vars)}
    return substitute(cont.expression, images, model.root_ring)


def cont_irreducible(t: ColoredTree, model: LocalModel | None = None) -> ContPoly:
    """
    Closed form [c(N) / prod_e (1 + z_e)]_{d-c} for an irreducible tree.

    Every edge of an irreducible tree is a critical path, so the quotient is the product of
    the line bundle factors and the contribution is e_{d-c}.

    Raises:
        NotIrreducible: If the tree has a genus-0 vertex.
    """
    if not is_irreducible(t):
        raise NotIrreducible(f"Tree with genera {t.genera} has a genus-0 vertex")
    model = model if model is not None else local_model(t)
    if model.c != t.n_edges:
        raise NotIrreducible(f"Tree has {model.c} critical paths but {t.n_edges} edges")
    r = model.elementary_ring
    expression = gen(r, model.elementary_vars[-1]) if model.rank else r.one
    return ContPoly(t, expression)


def _edge_monomial(r: Any, edges: list[int]) -> PolyElement:
    result = r.one
    for e in edges:
        result *= gen(r, f"z{e + 1}")
    return result


def _pushforward(
    structure: SmoothingStructure,
    target_cont: ContPoly,
    classes: Sequence[PolyElement],
    r: PolyRing,
) -> PolyElement:
    phi = isomorphism(target_cont.tree, structure.target)
    if phi is None:
        raise ValueError("Contribution does not belong to the smoothing target")
    images: dict[str, PolyElement] = {}
    for k, (a, b) in enumerate(target_cont.tree.edges):
        j = structure.target.edge_index[frozenset((phi[a], phi[b]))]
        images[f"z{k + 1}"] = gen(r, f"z{structure.edge_map[j] + 1}")
    for i, name in enumerate(target_cont.model.chern_vars):
        images[name] = classes[i + 1] if i + 1 < len(classes) else r.zero
    pushed = substitute(target_cont.expression, images, r)
    return _edge_monomial(r, list(structure.edge_map)) * pushed


def pushforward(
    structure: SmoothingStructure, target_cont: ContPoly, model: LocalModel
) -> PolyElement:
    """
    iota_{T'*} Cont_{T'} in the elementary ring of T.

    `target_cont` may belong to any tree isomorphic to the structure's target.
    """
    return _pushforward(structure, target_cont, model.chern_classes, model.elementary_ring)


def _divide_by_edges(p: PolyElement, model: LocalModel) -> PolyElement:
    count = model.tree.n_edges
    quotient = {}
    for monom, coeff in p.items():
        if any(e < 1 for e in monom[:count]):
            raise NotDivisible(
                f"Term with exponents {monom} is not divisible by the edge monomial"
            )
        quotient[tuple(e - 1 for e in monom[:count]) + tuple(monom[count:])] = coeff
    return p.ring.from_dict(quotient)


def _lookup(target: ColoredTree, memo: Memo, logger: Logger) -> ContPoly:
    rep = canonical_form(target)
    key = encoding_text(rep)
    if key not in memo:
        memo[key] = cont_recursive(rep, memo, logger)
    return memo[key]


def cont_recursive(
    t: ColoredTree, memo: Memo | None = None, logger: Logger | None = None
) -> ContPoly:
    """
    Contribution of a colored extremal tree by the smoothing recursion.

    Args:
        t (ColoredTree): Colored extremal tree.
        memo (Memo | None): Contributions of canonical forms by encoding; missing targets
            are computed and stored.
        logger (Logger | None): Debug logger.

    Raises:
        NotDivisible: If the right-hand side is not divisible by the edge monomial.

    Returns:
        ContPoly: Cont_T, homogeneous of degree d - |E(T)|.
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    memo = memo if memo is not None else {}
    model = local_model(t)
    if is_irreducible(t):
        return cont_irreducible(t, model)
    rhs = model.top_class()
    structures = smoothings(t, logger)
    for structure in structures:
        rhs -= pushforward(structure, _lookup(structure.target, memo, logger), model)
    cont = ContPoly(t, _divide_by_edges(rhs, model))
    logger.debug(
        "Contribution of %s: %d smoothings, %d terms",
        encoding_text(t),
        len(structures),
        len(cont.elementary),
    )
    return cont


def cont_to_dict(cont: ContPoly) -> dict[str, Any]:
    """JSON-ready dictionary of the elementary representation."""
    return {
        "tree": tree_to_dict(cont.tree),
        "terms": [[list(m), str(to_fraction(c))] for m, c in cont.elementary.terms()],
    }


def cont_from_dict(data: dict[str, Any]) -> ContPoly:
    """Inverse of `cont_to_dict`."""
    t = tree_from_dict(data["tree"])
    r = local_model(t).elementary_ring
    expression = r.from_dict(
        {tuple(int(e) for e in m): to_qq(Fraction(c)) for m, c in data["terms"]}
    )
    return ContPoly(t, expression)


def _layer_job(args: tuple[list[ColoredTree], dict[str, dict[str, Any]]]) -> list[dict]:
    trees, serialized = args
    memo = {key: cont_from_dict(value) for key, value in serialized.items()}
    return [cont_to_dict(cont_recursive(t, memo)) for t in trees]


def contribution_table(
    mu: Partition,
    config: ComputeConfigModel | None = None,
    logger: Logger | None = None,
) -> Memo:
    """
    Contributions of all mu-colored extremal trees.

    Trees are processed in layers of equal edge count, fewest edges first, so every
    smoothing target is in the table before its sources. A layer fans out over a process
    pool when more than one worker is configured.

    Args:
        mu (Partition): The partition.
        config (ComputeConfigModel | None): Supplies the worker count.
        logger (Logger | None): Progress logger.

    Returns:
        Memo: Contributions keyed by canonical encoding, ordered by (edge count, encoding).
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    cfg = resolve_config(config)
    trees = enumerate_trees(mu, config=cfg, logger=logger)
    layers: dict[int, list[ColoredTree]] = {}
    for t in trees:
        layers.setdefault(t.n_edges, []).append(t)
    memo: Memo = {}
    for count in sorted(layers):
        layer = sorted(layers[count], key=encoding_text)
        if cfg.threads > 1 and len(layer) > 1:
            workers = min(cfg.threads, len(layer))
            serialized = {key: cont_to_dict(value) for key, value in memo.items()}
            chunks = [layer[i::workers] for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_layer_job, [(chunk, serialized) for chunk in chunks]))
            computed = [cont_from_dict(item) for chunk in results for item in chunk]
        else:
            computed = [cont_recursive(t, memo, logger) for t in layer]
        for cont in computed:
            memo[encoding_text(cont.tree)] = cont
        logger.debug("Partition %s: %d contributions with %d edges", mu, len(layer), count)
    return {
        key: memo[key]
        for key in sorted(memo, key=lambda k: (memo[k].tree.n_edges, k))
    }


def recursion_residual(cont: ContPoly, memo: Memo | None = None) -> PolyElement:
    """
    Root-level residual of the defining recursion; zero when Cont_T is consistent.

    The Chern form of every contribution is pushed back to the roots of T's model:
    c_d(N) - sum_{T'} iota_{T'*} Cont_{T'} - Cont_T * prod_e z_e.
    """
    memo = memo if memo is not None else {}
    logger = getLogger(__name__)
    model = cont.model
    r = model.root_ring
    classes = model.root_chern_classes()
    residual = classes[model.d] - to_root_form(cont) * _edge_monomial(
        r, list(range(cont.tree.n_edges))
    )
    for structure in smoothings(cont.tree):
        residual -= _pushforward(structure, _lookup(structure.target, memo, logger), classes, r)
    return residual


def is_root_symmetric(cont: ContPoly) -> bool:
    """True if the root form is invariant under permutations of the roots."""
    return is_symmetric(to_root_form(cont), cont.model.root_vars)


def degree_check(
    mu: Partition,
    table: Memo | None = None,
    config: ComputeConfigModel | None = None,
    logger: Logger | None = None,
) -> bool:
    """
    Check that every contribution is homogeneous of degree d - |E(T)|.

    Failures are logged as warnings.
    """
    logger = logger if isinstance(logger, Logger) else getLogger(__name__)
    table = table if table is not None else contribution_table(mu, config, logger)
    ok = True
    for key, cont in table.items():
        weights = cont.model.weights
        found = {weighted_degree(m, weights) for m in cont.elementary.keys()}
        if not is_homogeneous(cont.elementary, weights) or found - {cont.degree}:
            logger.warning(
                "Contribution of %s has degrees %s, expected %d", key, found, cont.degree
            )
            ok = False
    return ok


def render_contribution(cont: ContPoly) -> str:
    """
    Contribution grouped by Chern monomials, highest first, each with its z-polynomial:
    "-3*c5 + (4*z1 + 4*z2 + 6*z3)*c4 - ...".
    """
    model = cont.model
    count = cont.tree.n_edges
    z_ring = poly_ring(model.edge_vars)
    groups: dict[tuple[int, ...], dict[tuple[int, ...], Any]] = {}
    for monom, coeff in cont.expression.items():
        groups.setdefault(tuple(monom[count:]), {})[tuple(monom[:count])] = coeff
    if not groups:
        return "0"
    order = sorted(
        groups,
        key=lambda c: (weighted_degree(c, range(1, len(c) + 1)), c),
        reverse=True,
    )
    text = ""
    for index, c_monom in enumerate(order):
        factors = [
            f"c{i + 1}" if e == 1 else f"c{i + 1}^{e}"
            for i, e in enumerate(c_monom[: model.rank])
            if e
        ]
        q = z_ring.from_dict(groups[c_monom]) if count else z_ring.ground_new(groups[c_monom][()])
        negative = all(to_fraction(v) < 0 for v in q.values())
        if negative:
            q = -q
        body = render(q)
        if len(q) > 1 and (factors or negative or body.startswith("-")):
            body = f"({body})"
        if factors:
            symbols = "*".join(factors)
            body = symbols if q == z_ring.one else f"{body}*{symbols}"
        if index == 0:
            text = f"-{body}" if negative else body
        else:
            text += f" - {body}" if negative else f" + {body}"
    return text
