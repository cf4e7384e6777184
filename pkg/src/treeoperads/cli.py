"""Command line front end.

    treeoperads eval --kind prelie "compose(a[b], a, c[d])"
    treeoperads axioms all --kind blambda --max-vertices 5 --max-weight 4
    treeoperads enumerate --mode weighted-shapes --max-weight 3
    treeoperads export --format dot "a[b,c]"

Exit status: 0 success / checks passed, 1 check failures, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .algebra import LambdaPoly, LinComb, parse_poly, parse_rational
from .enumeration import enumerate_nonplanar, enumerate_planar, enumerate_weighted_shapes, enumerate_weightings
from .graded import POSITIVE_INTEGERS, cyclic_group, max_semilattice
from .operads import OPERADS, get_operad, phi, star
from .syntax import (
    TreeScanner,
    format_tree,
    parse_tree,
    tree_from_json,
    tree_to_dot,
    tree_to_json,
)
from .trees import Tree, TreeError
from .verify import CHECKS, CheckConfig, check_graded, run_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- expressions ----------------------------------------------------------------


def parse_expression(text: str, kind: str, default_weight: int = 1) -> LinComb:
    """Evaluate ``compose(T, v, T)``, ``star(T, T)`` or ``phi(T)``."""
    op = get_operad(kind)
    sc = TreeScanner(text)
    name = sc.label()
    sc.expect("(")
    if name == "compose":
        S = sc.tree(op.tree_class, default_weight)
        sc.expect(",")
        v = sc.label()
        sc.expect(",")
        T = sc.tree(op.tree_class, default_weight)
        sc.expect(")")
        result = lambda: op.compose(S, v, T)  # noqa: E731
    elif name == "star":
        from .trees import PlanarTree

        T = sc.tree(PlanarTree, default_weight)
        sc.expect(",")
        S = sc.tree(PlanarTree, default_weight)
        sc.expect(")")
        result = lambda: star(T, S)  # noqa: E731
    elif name == "phi":
        from .trees import NonPlanarTree

        T = sc.tree(NonPlanarTree, default_weight)
        sc.expect(")")
        result = lambda: phi(T)  # noqa: E731
    else:
        raise UsageError(f"unknown function {name!r}; expected compose, star or phi")
    if not sc.at_end():
        raise sc.error("unexpected trailing input")
    return result()


# -- linear combinations as text / json / dot -------------------------------------


def render_lincomb(x: LinComb, weights: bool = True) -> str:
    return x.render(lambda t: format_tree(t, weights))


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def parse_lincomb(text: str, mode: str = "nonplanar", default_weight: int = 1) -> LinComb:
    """Inverse of :func:`render_lincomb` (``0`` is the empty sum)."""
    if text.strip() == "0":
        return LinComb()
    terms = []
    for part in _split_top(text, "+"):
        pieces = _split_top(part, "*")
        if len(pieces) < 2:
            raise TreeError(f"expected 'coefficient * tree' in {part.strip()!r}")
        coeff = parse_poly("*".join(pieces[:-1]))
        terms.append((parse_tree(pieces[-1], mode, default_weight), coeff))
    return LinComb(terms)


def lincomb_to_json(x: LinComb) -> dict[str, Any]:
    mode = "planar" if any(t.planar for t in x.basis_elements()) else "nonplanar"
    return {"mode": mode, "terms": [{"coeff": c.to_json(), "tree": tree_to_json(t)} for t, c in x.items()]}


def lincomb_from_json(data: dict[str, Any] | str, mode: str | None = None) -> LinComb:
    if isinstance(data, str):
        data = json.loads(data)
    mode = mode or data.get("mode", "nonplanar")
    return LinComb((tree_from_json(term["tree"], mode), LambdaPoly.from_json(term["coeff"])) for term in data["terms"])


def lincomb_to_dot(x: LinComb) -> str:
    if x.is_zero():
        return 'digraph zero {\n  label="0";\n}'
    return "\n".join(tree_to_dot(t, f"term{i}", str(c)) for i, (t, c) in enumerate(x.items()))


def _emit(x: LinComb | Tree, fmt: str, weights: bool) -> str:
    if isinstance(x, Tree):
        if fmt == "json":
            return json.dumps(tree_to_json(x), indent=2)
        if fmt == "dot":
            return tree_to_dot(x)
        return format_tree(x, weights)
    if fmt == "json":
        return json.dumps(lincomb_to_json(x), indent=2)
    if fmt == "dot":
        return lincomb_to_dot(x)
    return render_lincomb(x, weights)


# -- commands -------------------------------------------------------------------


def _read_arg(value: str) -> str:
    return sys.stdin.read() if value == "-" else value


def _lambda_mode(value: str):
    if value == "symbolic":
        return "symbolic"
    try:
        return parse_rational(value)
    except ValueError:
        raise UsageError(f"--lambda must be 'symbolic' or a rational number, not {value!r}") from None


def cmd_eval(args) -> int:
    result = parse_expression(_read_arg(args.expr).strip(), args.kind, args.default_weight)
    mode = _lambda_mode(args.lambda_)
    if mode != "symbolic":
        result = result.evaluate(mode)
    weights = OPERADS[args.kind].weighted or args.weights
    print(_emit(result, args.output, weights))
    return EXIT_OK


SEMIGROUPS = {
    "N": (POSITIVE_INTEGERS, (1, 2, 3)),
    "Z3": (cyclic_group(3), None),
    "max3": (max_semilattice(3), None),
}


def cmd_axioms(args) -> int:
    names = list(CHECKS) if args.check == "all" else [args.check]
    if args.check != "all" and args.check not in CHECKS and args.check != "graded":
        raise UsageError(f"unknown check {args.check!r}; choose from {', '.join(CHECKS)}, graded, all")
    try:
        cfg = CheckConfig(
            operad_kind=args.kind,
            max_vertices=args.max_vertices,
            max_total_weight=args.max_weight,
            lambda_mode=_lambda_mode(args.lambda_),
            max_tree_vertices=args.max_tree_vertices,
            permutation_limit=args.permutation_limit,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = []
    for name in names:
        if name == "graded":
            G, colors = SEMIGROUPS[args.semigroup]
            base = cfg.operad_kind if not OPERADS[cfg.operad_kind].weighted else "nap"
            reports.append(check_graded(CheckConfig(base, cfg.max_vertices, cfg.max_total_weight), G, colors))
        else:
            reports.append(run_check(name, cfg))
    payload = [r.to_json(timing=not args.no_timing) for r in reports]
    print(json.dumps(payload if args.check == "all" else payload[0], indent=2))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_enumerate(args) -> int:
    if args.mode == "weighted-shapes":
        if args.max_weight is None or args.max_weight < 1:
            raise UsageError("--max-weight must be at least 1 for weighted shapes")
        trees = enumerate_weighted_shapes(args.max_weight)
        weights = True
    else:
        if args.labels:
            labels = [x.strip() for x in args.labels.split(",") if x.strip()]
        elif args.n is not None:
            if args.n < 1:
                raise UsageError("-n must be at least 1")
            labels = [f"v{i}" for i in range(1, args.n + 1)]
        else:
            raise UsageError("give --labels or -n")
        trees = enumerate_planar(labels) if args.mode == "planar" else enumerate_nonplanar(labels)
        weights = False
        if args.max_weight is not None:
            if args.max_weight < len(labels):
                raise UsageError("--max-weight is smaller than the number of vertices")
            trees = [w for t in trees for w in enumerate_weightings(t, args.max_weight)]
            weights = True
    for t in trees:
        print(format_tree(t, weights))
    print(f"count: {len(trees)}")
    return EXIT_OK


def cmd_export(args) -> int:
    text = _read_arg(args.input).strip()
    obj: LinComb | Tree
    if text.startswith("{"):
        data = json.loads(text)
        obj = lincomb_from_json(data, args.mode) if "terms" in data else tree_from_json(data, args.mode or "nonplanar")
    else:
        mode = args.mode or "nonplanar"
        try:
            obj = parse_tree(text, mode, args.default_weight)
        except TreeError:
            obj = parse_lincomb(text, mode, args.default_weight)
    print(_emit(obj, args.format, True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treeoperads", description="Operads on labeled rooted trees.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate compose(...), star(...) or phi(...)")
    e.add_argument("expr", help="expression, or - to read stdin")
    e.add_argument("--kind", choices=sorted(OPERADS), default="prelie")
    e.add_argument("--lambda", dest="lambda_", default="symbolic", help="'symbolic' or a rational value")
    e.add_argument("--output", choices=["text", "json", "dot"], default="text")
    e.add_argument("--default-weight", type=int, default=1)
    e.add_argument("--weights", action="store_true", help="print weights even for unweighted operads")
    e.set_defaults(func=cmd_eval)

    a = sub.add_parser("axioms", help="run verification checks and print JSON reports")
    a.add_argument("check", help=f"one of {', '.join(CHECKS)}, graded, all")
    a.add_argument("--kind", choices=sorted(OPERADS), default="prelie")
    a.add_argument("--max-vertices", type=int, default=5)
    a.add_argument("--max-weight", type=int, default=4)
    a.add_argument("--max-tree-vertices", type=int, default=None)
    a.add_argument("--lambda", dest="lambda_", default="symbolic")
    a.add_argument("--permutation-limit", type=int, default=4)
    a.add_argument("--semigroup", choices=sorted(SEMIGROUPS), default="N")
    a.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for byte-stable output")
    a.set_defaults(func=cmd_axioms)

    n = sub.add_parser("enumerate", help="list trees, one per line, then a count")
    n.add_argument("--mode", choices=["nonplanar", "planar", "weighted-shapes"], required=True)
    n.add_argument("--labels", help="comma separated labels")
    n.add_argument("-n", type=int, help="use labels v1..vn")
    n.add_argument("--max-weight", type=int)
    n.set_defaults(func=cmd_enumerate)

    x = sub.add_parser("export", help="convert a tree or linear combination to DOT or JSON")
    x.add_argument("input", help="tree text, linear combination text, JSON, or - for stdin")
    x.add_argument("--format", choices=["dot", "json"], default="dot")
    x.add_argument("--mode", choices=["planar", "nonplanar"], default=None)
    x.add_argument("--default-weight", type=int, default=1)
    x.set_defaults(func=cmd_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, TreeError, ValueError, TypeError, json.JSONDecodeError) as exc:
        print(f"treeoperads: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
