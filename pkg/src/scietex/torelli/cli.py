"""
Command line front end.

Usage examples::

    scietex-torelli trees count --partition 2,2
    scietex-torelli excess cont --partition 2,4 --tree 3 --chern-form
    scietex-torelli inv capelli --g 2 --s 2
    scietex-torelli check vanishing --partition 3,4
    scietex-torelli emit delta --g 5 --out delta5.sage

Every command prints either text or, with ``--format json``, a JSON document. Domain errors
are printed verbatim to stderr with exit code 1; usage errors exit with code 2.
"""

# pylint: disable=unused-argument

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from logging import Logger, getLogger
from pathlib import Path
from typing import Any, Callable, Sequence

from .algebra import format_rational, render, to_rows
from .config import ComputeConfig, ComputeConfigModel, TorelliError
from .config.defaults import DEFAULT_LOG_LEVEL
from .config.validation import validate_log_level
from .emit import (
    bernoulli,
    delta_emit,
    eisenstein_identity_check,
    emit_script,
    gamma,
    jg_table,
    nl_projection_coeff,
    taut_product,
)
from .excess import (
    contribution_table,
    cont_recursive,
    codimension,
    degree_check,
    is_root_symmetric,
    recursion_residual,
    render_contribution,
    tautological_dimension_bound,
    torelli_pullback,
    vanishing_predicate,
)
from .invariants import (
    capelli_check,
    gram_rows,
    integrate,
    kappa,
    parse_monomial,
    project_pr_formula,
    project_pr_solve,
)
from .lambda_ring import ab_evaluate, build_ring, pairing_matrix, parse_lambda
from .stars import (
    blowup_component_count,
    blowup_components,
    enumerate_stars,
    exceptional_pushforward,
    i_function,
    star_to_dict,
    wallcross_assemble,
)
from .trees import ColoredTree, Partition, cached_trees, encoding_text, tree_to_dict
from .version import __version__


@dataclass(frozen=True)
class Output:
    """Command result: text for humans, data for ``--format json``."""

    text: str
    data: Any = None


Handler = Callable[[argparse.Namespace, ComputeConfigModel, Logger], Output]


def _fraction(value: Fraction) -> str:
    return format_rational(value)


def _rows(rows: Sequence[Sequence[Fraction]]) -> list[list[str]]:
    return [[_fraction(x) for x in row] for row in rows]


def _rows_text(rows: Sequence[Sequence[Fraction]]) -> str:
    return "\n".join(" ".join(row) for row in _rows(rows))


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        message = f"expected a comma list of integers, got {text!r}"
        raise argparse.ArgumentTypeError(message) from exc


def _write(path: str | None, text: str, logger: Logger) -> None:
    if path is None:
        return
    Path(path).write_text(text, encoding="utf-8", newline="\n")
    logger.info("Wrote %s", path)


def _select_tree(trees: list[ColoredTree], key: str) -> ColoredTree:
    if key.isdigit():
        index = int(key)
        if index >= len(trees):
            raise TorelliError(f"Tree index {index} outside 0..{len(trees) - 1}")
        return trees[index]
    for t in trees:
        if encoding_text(t) == key:
            return t
    raise TorelliError(f"No tree with encoding {key!r}")


# trees


def _trees_enumerate(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    mu = Partition.parse(args.partition)
    trees = cached_trees(mu, cfg, logger)
    if args.max_edges is not None:
        trees = [t for t in trees if t.n_edges <= args.max_edges]
    lines = [f"{i}\t{encoding_text(t)}" for i, t in enumerate(trees)]
    data = [tree_to_dict(t, encoding_text(t)) for t in trees]
    return Output("\n".join(lines), data)


def _trees_count(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    count = len(cached_trees(Partition.parse(args.partition), cfg, logger))
    return Output(str(count), count)


def _trees_show(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    t = _select_tree(cached_trees(Partition.parse(args.partition), cfg, logger), args.tree)
    data = tree_to_dict(t, encoding_text(t))
    lines = [f"encoding: {encoding_text(t)}", f"genera: {list(t.genera)}"]
    lines.append(f"colors: {list(t.colors)}")
    lines.append(f"edges: {[list(e) for e in t.edges]}")
    return Output("\n".join(lines), data)


# excess


def _excess_cont(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    t = _select_tree(cached_trees(Partition.parse(args.partition), cfg, logger), args.tree)
    cont = cont_recursive(t, logger=logger)
    text = render_contribution(cont) if args.chern_form else render(cont.elementary)
    return Output(text, {"tree": tree_to_dict(t, encoding_text(t)), "contribution": text})


def _pullback_script(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> str:
    mu = Partition.parse(args.partition)
    return emit_script(torelli_pullback(mu, cfg, logger), args.dialect or cfg.dialect)


def _excess_pullback(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    script = _pullback_script(args, cfg, logger)
    if args.emit is None:
        return Output(script.rstrip("\n"), {"script": script})
    _write(args.emit, script, logger)
    return Output(f"wrote {args.emit}", {"path": args.emit})


def _excess_check(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    mu = Partition.parse(args.partition)
    table = contribution_table(mu, cfg, logger)
    degrees = degree_check(mu, table, cfg, logger)
    residuals = [key for key, cont in table.items() if recursion_residual(cont, table)]
    asymmetric = [key for key, cont in table.items() if not is_root_symmetric(cont)]
    if not degrees or residuals or asymmetric:
        raise TorelliError(
            f"Contribution check failed for {mu}: degrees {'ok' if degrees else 'wrong'},"
            f" residuals at {residuals}, not root-symmetric at {asymmetric}"
        )
    return Output(f"ok ({len(table)} trees)", {"trees": len(table), "ok": True})


# lambda ring


def _lambda_dims(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    dims = build_ring(args.g, cfg, logger).dims()
    return Output(" ".join(str(x) for x in dims), dims)


def _lambda_pairing(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    rows = to_rows(pairing_matrix(build_ring(args.g, cfg, logger), args.k))
    return Output(_rows_text(rows), _rows(rows))


def _lambda_eval(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    value = ab_evaluate(parse_lambda(args.expr, args.g), build_ring(args.g, cfg, logger))
    return Output(_fraction(value), _fraction(value))


# invariant ring


def _inv_integrate(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    value = integrate(parse_monomial(args.monomial, args.s, args.g))
    return Output(_fraction(value), _fraction(value))


def _inv_project_pr(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    if args.solve:
        x = project_pr_solve(args.g, args.s, cfg, logger)
    else:
        x = project_pr_formula(args.g, args.s)
    return Output(str(x), str(x))


def _inv_capelli(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    value = _fraction(kappa(args.g, args.s))
    if not capelli_check(args.g, args.s):
        raise TorelliError(f"Capelli identity fails for g={args.g}, s={args.s}")
    return Output(f"ok κ={value}", {"ok": True, "kappa": value})


def _inv_pairing(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    rows = gram_rows(args.g, args.s, args.k)
    return Output(_rows_text(rows), _rows(rows))


# stars


def _stars_enumerate(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    stars = enumerate_stars(args.g, args.r, logger)
    return Output("\n".join(str(s) for s in stars), [star_to_dict(s) for s in stars])


def _stars_ifun(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    series = i_function(args.h, args.mu, args.r)
    return Output(str(series), {"z_degree": series.z_degree, "series": str(series)})


def _stars_assemble(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    lines, data = [], []
    for term in wallcross_assemble(args.g, args.r, logger):
        case = term.exceptional_case or "-"
        lines.append(f"{_fraction(term.coefficient)}\t{term.space}\t{term.star}\t{case}")
        data.append(
            {
                "star": star_to_dict(term.star),
                "coefficient": _fraction(term.coefficient),
                "space": term.space,
                "legs": [str(leg) for leg in term.legs],
                "substitutions": dict(sorted(term.substitutions.items())),
                "exceptional_case": term.exceptional_case,
            }
        )
    return Output("\n".join(lines), data)


def _stars_components(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    components = blowup_components(args.k)
    count = blowup_component_count(args.k)
    if count != len(components):
        raise TorelliError(f"Component count {count} disagrees with {len(components)} found")
    lines = [str(count)]
    lines.extend(f"bridge {list(c.bridge)} sides {[list(s) for s in c.sides]}" for c in components)
    data = {
        "count": count,
        "components": [
            {"bridge": list(c.bridge), "sides": [list(s) for s in c.sides]} for c in components
        ],
    }
    return Output("\n".join(lines), data)


def _stars_exceptional(
    args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger
) -> Output:
    value = str(exceptional_pushforward(args.case, args.monomial))
    return Output(value, value)


# checks


def _check_eisenstein(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    if not eisenstein_identity_check(args.g, args.dmax, logger):
        raise TorelliError(f"Divisor-sum identity fails for g={args.g} below d={args.dmax}")
    return Output(f"ok (g={args.g}, d<={args.dmax})", {"ok": True})


def _check_vanishing(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    mu = Partition.parse(args.partition)
    cod, bound = codimension(mu), tautological_dimension_bound(mu.total)
    vanishes = vanishing_predicate(mu)
    if vanishes:
        text = f"vanishes (cod {cod} > 2g−3 = {bound})"
    else:
        text = f"does not vanish (cod {cod} ≤ 2g−3 = {bound})"
    return Output(text, {"vanishes": vanishes, "codimension": cod, "bound": bound})


def _check_capelli(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    cases = [(g, s) for g in range(1, args.g + 1) for s in range(1, args.s + 1)]
    failed = [case for case in cases if not capelli_check(*case)]
    if failed:
        raise TorelliError(f"Capelli identity fails for (g, s) in {failed}")
    return Output(f"ok ({len(cases)} cases)", {"ok": True, "cases": len(cases)})


# constants


def _const_bernoulli(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    value = _fraction(bernoulli(args.n))
    return Output(value, value)


def _const_gamma(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    value = _fraction(gamma(args.g))
    return Output(value, value)


def _const_jg(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    value = str(jg_table(args.g))
    return Output(value, value)


def _const_taut_product(
    args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger
) -> Output:
    value = str(taut_product(args.parts))
    return Output(value, value)


def _const_nl(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    value = _fraction(nl_projection_coeff(args.g, args.d))
    return Output(value, value)


# emit


def _emit_delta(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    script = delta_emit(args.g, args.s, args.dialect or cfg.dialect, cfg, logger)
    if args.out is None:
        return Output(script.rstrip("\n"), {"script": script})
    _write(args.out, script, logger)
    return Output(f"wrote {args.out}", {"path": args.out})


def _emit_taut(args: argparse.Namespace, cfg: ComputeConfigModel, logger: Logger) -> Output:
    script = _pullback_script(args, cfg, logger)
    if args.out is None:
        return Output(script.rstrip("\n"), {"script": script})
    _write(args.out, script, logger)
    return Output(f"wrote {args.out}", {"path": args.out})


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    """Global flags; on subcommands they default to SUPPRESS so they never mask the top level."""

    def default(value: Any) -> Any:
        return argparse.SUPPRESS if suppress else value

    parser.add_argument(
        "--log-level", type=validate_log_level, default=default(DEFAULT_LOG_LEVEL)
    )
    parser.add_argument("--threads", type=int, default=default(None))
    parser.add_argument(
        "--format", choices=("text", "json", "script"), default=default("text")
    )


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per verb path."""
    parser = argparse.ArgumentParser(
        prog="scietex-torelli",
        description="Tautological projections, excess contributions and wall-crossing data.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    groups = parser.add_subparsers(dest="group", required=True)

    def command(group: Any, name: str, handler: Handler, help_text: str) -> Any:
        sub = group.add_parser(name, help=help_text)
        _global_flags(sub, suppress=True)
        sub.set_defaults(handler=handler)
        return sub

    def verbs(name: str, help_text: str) -> Any:
        return groups.add_parser(name, help=help_text).add_subparsers(dest="verb", required=True)

    trees = verbs("trees", "colored extremal trees")
    sub = command(trees, "enumerate", _trees_enumerate, "list trees of a partition")
    sub.add_argument("--partition", required=True)
    sub.add_argument("--max-edges", type=int)
    sub = command(trees, "count", _trees_count, "count trees of a partition")
    sub.add_argument("--partition", required=True)
    sub = command(trees, "show", _trees_show, "show one tree")
    sub.add_argument("--partition", required=True)
    sub.add_argument("--tree", required=True, help="index or canonical encoding")

    excess = verbs("excess", "excess intersection contributions")
    sub = command(excess, "cont", _excess_cont, "contribution of one tree")
    sub.add_argument("--partition", required=True)
    sub.add_argument("--tree", required=True, help="index or canonical encoding")
    sub.add_argument("--chern-form", action="store_true")
    sub = command(excess, "pullback", _excess_pullback, "script of the Torelli pullback")
    sub.add_argument("--partition", required=True)
    sub.add_argument("--emit", help="output script file")
    sub.add_argument("--dialect", default=None)
    sub = command(excess, "check", _excess_check, "self-consistency of the contributions")
    sub.add_argument("--partition", required=True)

    lam = verbs("lambda", "tautological ring of A_g")
    sub = command(lam, "dims", _lambda_dims, "graded dimensions")
    sub.add_argument("--g", type=int, required=True)
    sub = command(lam, "pairing", _lambda_pairing, "pairing matrix in degree k")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub = command(lam, "eval", _lambda_eval, "integral over A_g")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--expr", required=True)

    inv = verbs("inv", "invariant ring I_{g,s}")
    sub = command(inv, "integrate", _inv_integrate, "integral of a top-degree monomial")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--s", type=int, required=True)
    sub.add_argument("--monomial", required=True)
    sub = command(inv, "project-pr", _inv_project_pr, "projection of the product locus")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--s", type=int, required=True)
    sub.add_argument("--solve", action="store_true", help="solve the pairing system")
    sub = command(inv, "capelli", _inv_capelli, "Capelli identity")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--s", type=int, required=True)
    sub = command(inv, "pairing", _inv_pairing, "Gorenstein pairing in degree k")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--s", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)

    stars = verbs("stars", "wall-crossing star graphs")
    sub = command(stars, "enumerate", _stars_enumerate, "star graphs")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub = command(stars, "ifun", _stars_ifun, "retained I-function")
    sub.add_argument("--h", type=int, required=True)
    sub.add_argument("--mu", type=_parse_ints, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub = command(stars, "assemble", _stars_assemble, "wall-crossing term bundles")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub = command(stars, "components", _stars_components, "blowup center components")
    sub.add_argument("--k", type=int, required=True)
    sub = command(stars, "exceptional", _stars_exceptional, "exceptional pushforward")
    sub.add_argument("--case", required=True)
    sub.add_argument("--monomial", required=True)

    check = verbs("check", "identity checks")
    sub = command(check, "eisenstein", _check_eisenstein, "divisor-sum identity")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--dmax", type=int, required=True)
    sub = command(check, "vanishing", _check_vanishing, "codimension vanishing criterion")
    sub.add_argument("--partition", required=True)
    sub = command(check, "capelli", _check_capelli, "Capelli identity up to (g, s)")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--s", type=int, required=True)

    const = verbs("const", "closed-form constants")
    sub = command(const, "bernoulli", _const_bernoulli, "Bernoulli number B_n")
    sub.add_argument("--n", type=int, required=True)
    sub = command(const, "gamma", _const_gamma, "socle constant")
    sub.add_argument("--g", type=int, required=True)
    sub = command(const, "jg", _const_jg, "projection of the Jacobian locus")
    sub.add_argument("--g", type=int, required=True)
    sub = command(const, "taut-product", _const_taut_product, "projection of a product locus")
    sub.add_argument("--parts", type=_parse_ints, required=True)
    sub = command(const, "nl", _const_nl, "Noether-Lefschetz projection coefficient")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--d", type=int, required=True)

    emit = verbs("emit", "calculator scripts")
    sub = command(emit, "delta", _emit_delta, "Delta_{g,1} kernel script")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--s", type=int, default=1)
    sub.add_argument("--out")
    sub.add_argument("--dialect", default=None)
    sub = command(emit, "taut", _emit_taut, "Torelli pullback script")
    sub.add_argument("--partition", required=True)
    sub.add_argument("--out")
    sub.add_argument("--dialect", default=None)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """
    Run one command.

    Args:
        argv (Sequence[str] | None): Arguments without the program name.

    Returns:
        int: 0 on success, 1 on a domain error, 2 on a usage error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else 2
    logging.basicConfig(
        level=args.log_level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )
    logger = getLogger("scietex.torelli.cli")
    handler: Handler = args.handler
    try:
        cfg = ComputeConfig.from_env(threads=args.threads)
        result = handler(args, cfg, logger)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(result.data, sort_keys=True, ensure_ascii=False))
    else:
        print(result.text)
    return 0


def main() -> None:
    """Console entry point."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
