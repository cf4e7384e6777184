"""Bounded exhaustive verification of the operad axioms and related identities.

Every check enumerates all labeled trees within its bounds, evaluates both
sides of an identity exactly and records the cases where they differ.  Labels
are drawn from fixed per-role alphabets (``s1, s2, ...`` for the outer tree,
``t1, ...`` and ``u1, ...`` for the inserted ones), which suffices because the
checks also verify naturality under relabeling.

Vertex budgets count all vertices of the trees involved in one case together;
the weight bound applies to each tree separately.  For the weighted operads
only weightings that satisfy the current constraints are enumerated (the
others compose to zero on both sides).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterator, Sequence

from .algebra import ONE, LinComb
from .enumeration import enumerate_planar_shapes, enumerate_trees, enumerate_weightings, label_set
from .graded import (
    POSITIVE_INTEGERS,
    GradedElement,
    Semigroup,
    all_colorings,
    og_compose,
    og_compose_lc,
    phi_g,
)
from .operads import (
    OPERADS,
    Operad,
    compose_lc,
    get_operad,
    phi,
    phi_lc,
    star,
    star_lc,
    star_via_ladder,
)
from .syntax import format_tree
from .trees import Angle, PlanarTree, Tree, energy, relabel

__all__ = [
    "CheckConfig",
    "CheckReport",
    "Failure",
    "CHECKS",
    "run_check",
    "check_nested_associativity",
    "check_disjoint_associativity",
    "check_unit",
    "check_equivariance",
    "check_phi_morphism",
    "check_star_right_nap",
    "check_exponent_formula",
    "check_specializations",
    "check_bijections",
    "check_graded",
    "nested_bijection",
    "disjoint_bijection",
    "star_dropping_last_slot",
]

KINDS = tuple(OPERADS)
PHI_PAIRS = {
    "prelie": ("prelie", "brace"),
    "brace": ("prelie", "brace"),
    "nap": ("nap", "b0"),
    "b0": ("nap", "b0"),
    "olambda": ("olambda", "blambda"),
    "blambda": ("olambda", "blambda"),
}
WEIGHTED_OF = {
    "prelie": "olambda",
    "nap": "olambda",
    "olambda": "olambda",
    "brace": "blambda",
    "b0": "blambda",
    "blambda": "blambda",
}
# weighted operad -> {lambda value: unweighted operad it specializes to}
SPECIALIZATIONS = {"olambda": {0: "nap", 1: "prelie"}, "blambda": {0: "b0", 1: "brace"}}
MAX_RECORDED_FAILURES = 25


@dataclass(frozen=True)
class CheckConfig:
    operad_kind: str = "prelie"
    max_vertices: int = 6
    max_total_weight: int = 5
    lambda_mode: str | Fraction = "symbolic"
    max_tree_vertices: int | None = None
    permutation_limit: int = 4

    def __post_init__(self):
        if self.operad_kind not in OPERADS:
            raise ValueError(f"unknown operad kind {self.operad_kind!r}")
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be at least 1")
        if self.max_total_weight < 1:
            raise ValueError("max_total_weight must be at least 1")
        if self.max_tree_vertices is not None and self.max_tree_vertices < 1:
            raise ValueError("max_tree_vertices must be at least 1")
        if self.lambda_mode != "symbolic" and not isinstance(self.lambda_mode, (int, Fraction)):
            raise ValueError("lambda_mode is 'symbolic' or a rational value")

    def tree_cap(self, n: int) -> int:
        return n if self.max_tree_vertices is None else min(n, self.max_tree_vertices)

    def to_json(self) -> dict[str, Any]:
        d = asdict(self)
        d["lambda_mode"] = self.lambda_mode if self.lambda_mode == "symbolic" else str(self.lambda_mode)
        return d


@dataclass
class Failure:
    case: dict[str, str]
    lhs: str
    rhs: str

    def to_json(self) -> dict[str, Any]:
        return {"inputs": self.case, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class CheckReport:
    check: str
    config: dict[str, Any]
    cases_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    failure_count: int = 0
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self, case: dict[str, Any], lhs: Any, rhs: Any) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append(Failure({k: _show(v) for k, v in case.items()}, _show(lhs), _show(rhs)))

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        return {
            "check": self.check,
            "config": self.config,
            "cases_run": self.cases_run,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": [f.to_json() for f in self.failures],
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0,
        }


def _show(x: Any) -> str:
    if isinstance(x, Tree):
        return format_tree(x)
    if isinstance(x, BaseException):
        return f"error: {type(x).__name__}: {x}"
    return str(x)


class _Run:
    """Times a check and turns exceptions inside a case into failures."""

    def __init__(self, name: str, config: dict[str, Any]):
        self.report = CheckReport(name, config)
        self._t0 = time.perf_counter()

    def compare(self, case: dict[str, Any], lhs_fn: Callable[[], Any], rhs_fn: Callable[[], Any], mode="symbolic"):
        self.report.cases_run += 1
        try:
            lhs, rhs = lhs_fn(), rhs_fn()
            if mode != "symbolic":
                lhs, rhs = lhs.evaluate(mode), rhs.evaluate(mode)
        except Exception as exc:  # noqa: BLE001 - a crashing case is a failing case
            self.report.record(case, exc, "")
            return
        if lhs != rhs:
            self.report.record(case, lhs, rhs)

    def assert_true(self, case: dict[str, Any], ok_fn: Callable[[], Any], detail: str = ""):
        self.report.cases_run += 1
        try:
            ok = ok_fn()
        except Exception as exc:  # noqa: BLE001
            self.report.record(case, exc, detail)
            return
        if ok is not True:
            self.report.record(case, ok if ok is not False else "false", detail)

    def done(self) -> CheckReport:
        self.report.elapsed_ms = (time.perf_counter() - self._t0) * 1000.0
        return self.report


# -- families -----------------------------------------------------------------


def _trees(op: Operad, n: int, prefix: str) -> list[Tree]:
    return enumerate_trees(label_set(prefix, n), op.mode)


def _weightings(op: Operad, t: Tree, cfg: CheckConfig, total: int | None = None) -> list[Tree]:
    if not op.weighted:
        return [t] if total is None or t.total_weight == total else []
    bound = cfg.max_total_weight if total is None else total
    if bound < t.size:
        return []
    ws = enumerate_weightings(t, bound)
    return ws if total is None else [x for x in ws if x.total_weight == total]


def _sizes(budget: int, parts: int, cfg: CheckConfig, first_min: int = 1) -> Iterator[tuple[int, ...]]:
    cap = cfg.tree_cap(budget)
    for ns in itertools.product(range(1, cap + 1), repeat=parts):
        if sum(ns) <= budget and ns[0] >= first_min:
            yield ns


def pairs(op: Operad, cfg: CheckConfig) -> Iterator[tuple[Tree, str, Tree]]:
    """All ``(S, v, T)`` within bounds (current-matching for weighted operads)."""
    for n1, n2 in _sizes(cfg.max_vertices, 2, cfg):
        for S0 in _trees(op, n1, "s"):
            for S in _weightings(op, S0, cfg):
                for v in S.vertices():
                    need = S.find(v).weight if op.weighted else None
                    for T0 in _trees(op, n2, "t"):
                        for T in _weightings(op, T0, cfg, need):
                            yield S, v, T


def nested_triples(op: Operad, cfg: CheckConfig) -> Iterator[tuple]:
    """``(S, v, T, w, U)`` with ``v`` in ``S`` and ``w`` in ``T``."""
    for n1, n2, n3 in _sizes(cfg.max_vertices, 3, cfg):
        Us = _trees(op, n3, "u")
        for S0 in _trees(op, n1, "s"):
            for S in _weightings(op, S0, cfg):
                for v in S.vertices():
                    need_t = S.find(v).weight if op.weighted else None
                    for T0 in _trees(op, n2, "t"):
                        for T in _weightings(op, T0, cfg, need_t):
                            for w in T.vertices():
                                need_u = T.find(w).weight if op.weighted else None
                                for U0 in Us:
                                    for U in _weightings(op, U0, cfg, need_u):
                                        yield S, v, T, w, U


def disjoint_triples(op: Operad, cfg: CheckConfig) -> Iterator[tuple]:
    """``(S, v, w, T, U)`` with ``v != w`` both in ``S``."""
    for n1, n2, n3 in _sizes(cfg.max_vertices, 3, cfg, first_min=2):
        Ts, Us = _trees(op, n2, "t"), _trees(op, n3, "u")
        for S0 in _trees(op, n1, "s"):
            for S in _weightings(op, S0, cfg):
                for v, w in itertools.permutations(S.vertices(), 2):
                    need_t = S.find(v).weight if op.weighted else None
                    need_u = S.find(w).weight if op.weighted else None
                    for T0 in Ts:
                        for T in _weightings(op, T0, cfg, need_t):
                            for U0 in Us:
                                for U in _weightings(op, U0, cfg, need_u):
                                    yield S, v, w, T, U


def _relabel_lc(X: LinComb, sigma) -> LinComb:
    return LinComb._raw({relabel(t, sigma): c for t, c in X._terms.items()})


def _bijections(labels: Sequence[str], limit: int) -> Iterator[dict[str, str]]:
    """All permutations of ``labels`` up to ``limit`` labels; otherwise a generating set."""
    labels = list(labels)
    if len(labels) <= limit:
        for perm in itertools.permutations(labels):
            yield dict(zip(labels, perm))
        return
    yield {x: x for x in labels}
    for i, j in itertools.combinations(range(len(labels)), 2):
        sigma = {x: x for x in labels}
        sigma[labels[i]], sigma[labels[j]] = labels[j], labels[i]
        yield sigma
    yield dict(zip(labels, labels[1:] + labels[:1]))


# -- checks -------------------------------------------------------------------


def _resolve(cfg: CheckConfig, operad: Operad | None) -> Operad:
    return operad if operad is not None else get_operad(cfg.operad_kind)


def check_nested_associativity(cfg: CheckConfig, operad: Operad | None = None) -> CheckReport:
    """``(S ∘_v T) ∘_w U == S ∘_v (T ∘_w U)`` for ``w`` a vertex of ``T``."""
    op = _resolve(cfg, operad)
    run = _Run("nested", {**cfg.to_json(), "operad": op.name})
    for S, v, T, w, U in nested_triples(op, cfg):
        run.compare(
            {"S": S, "v": v, "T": T, "w": w, "U": U},
            lambda: op.compose_lc(op.compose(S, v, T), w, LinComb.basis(U)),
            lambda: op.compose_lc(LinComb.basis(S), v, op.compose(T, w, U)),
            cfg.lambda_mode,
        )
    return run.done()


def check_disjoint_associativity(cfg: CheckConfig, operad: Operad | None = None) -> CheckReport:
    """``(S ∘_v T) ∘_w U == (S ∘_w U) ∘_v T`` for distinct vertices ``v, w`` of ``S``."""
    op = _resolve(cfg, operad)
    run = _Run("disjoint", {**cfg.to_json(), "operad": op.name})
    for S, v, w, T, U in disjoint_triples(op, cfg):
        run.compare(
            {"S": S, "v": v, "w": w, "T": T, "U": U},
            lambda: op.compose_lc(op.compose(S, v, T), w, LinComb.basis(U)),
            lambda: op.compose_lc(op.compose(S, w, U), v, LinComb.basis(T)),
            cfg.lambda_mode,
        )
    return run.done()


def _unit_sum(op: Operad, label: str, cfg: CheckConfig) -> LinComb:
    # truncation of the unit: one single vertex per admissible weight.  It
    # spans several weight components, hence the unchecked constructor.
    weights = range(1, cfg.max_total_weight + 1) if op.weighted else (1,)
    return LinComb._raw({op.unit(label, n): ONE for n in weights})


def check_unit(cfg: CheckConfig, operad: Operad | None = None) -> CheckReport:
    """``S ∘_v e == S`` with ``v`` renamed, and ``e ∘_x S == S``.

    For weighted operads ``e`` is the sum of single vertices of every weight
    up to the bound; only the component matching the current survives.
    """
    op = _resolve(cfg, operad)
    run = _Run("unit", {**cfg.to_json(), "operad": op.name})
    x = "e"
    unit = _unit_sum(op, x, cfg)
    # the unit vertex counts towards the vertex budget, as in ``pairs``
    for n in range(1, cfg.tree_cap(max(1, cfg.max_vertices - 1)) + 1):
        for S0 in _trees(op, n, "s"):
            for S in _weightings(op, S0, cfg):
                for v in S.vertices():
                    run.compare(
                        {"S": S, "v": v, "unit": x, "side": "right"},
                        lambda: op.compose_lc(LinComb.basis(S), v, unit),
                        lambda: LinComb.basis(relabel(S, lambda a: x if a == v else a)),
                        cfg.lambda_mode,
                    )
                run.compare(
                    {"S": S, "unit": x, "side": "left"},
                    lambda: op.compose_lc(unit, x, LinComb.basis(S)),
                    lambda: LinComb.basis(S),
                    cfg.lambda_mode,
                )
    return run.done()


def check_equivariance(cfg: CheckConfig, operad: Operad | None = None) -> CheckReport:
    """``sigma(S ∘_v T) == sigma(S) ∘_{sigma(v)} sigma(T)`` for label bijections ``sigma``.

    ``sigma`` permutes the combined label set of ``S`` and ``T``: every
    permutation when there are at most ``cfg.permutation_limit`` labels,
    otherwise the identity, all transpositions and a full cycle (a
    generating set of the symmetric group).
    """
    op = _resolve(cfg, operad)
    run = _Run("equivariance", {**cfg.to_json(), "operad": op.name})
    for S, v, T in pairs(op, cfg):
        labels = sorted(S.labels | T.labels)
        product_ = op.compose(S, v, T)
        for sigma in _bijections(labels, cfg.permutation_limit):
            run.compare(
                {"S": S, "v": v, "T": T, "sigma": ",".join(f"{a}->{b}" for a, b in sigma.items() if a != b) or "id"},
                lambda: _relabel_lc(product_, sigma),
                lambda: op.compose(relabel(S, sigma), sigma[v], relabel(T, sigma)),
                cfg.lambda_mode,
            )
    return run.done()


def check_phi_morphism(
    cfg: CheckConfig, source: Operad | None = None, target: Operad | None = None
) -> CheckReport:
    """``phi(S ∘_v T) == phi(S) ⋄_v phi(T)``.

    The pair is pre-Lie -> brace, NAP -> B0 or O^lambda -> B^lambda according
    to ``cfg.operad_kind``.
    """
    src_name, tgt_name = PHI_PAIRS[cfg.operad_kind]
    src = source or get_operad(src_name)
    tgt = target or get_operad(tgt_name)
    run = _Run("phi", {**cfg.to_json(), "source": src.name, "target": tgt.name})
    for S, v, T in pairs(src, cfg):
        run.compare(
            {"S": S, "v": v, "T": T},
            lambda: phi_lc(src.compose(S, v, T)),
            lambda: tgt.compose_lc(phi(S), v, phi(T)),
            cfg.lambda_mode,
        )
    return run.done()


def star_dropping_last_slot(T: PlanarTree, S: PlanarTree) -> LinComb:
    """Faulty star product that never appends ``S`` after the last root child."""
    full = star(T, S)
    kids = T.children
    last = PlanarTree._make(T.label, T.weight, kids + (S,))
    return LinComb._raw({t: c for t, c in full._terms.items() if t != last})


def _planar_family(max_vertices: int, prefix: str, labeled: bool) -> list[PlanarTree]:
    if not labeled:
        return enumerate_planar_shapes(max_vertices, prefix)
    return [t for n in range(1, max_vertices + 1) for t in enumerate_trees(label_set(prefix, n), "planar")]


def check_star_right_nap(max_vertices: int = 4, product=star, labeled: bool = False) -> CheckReport:
    """``(T⋆S)⋆U == (T⋆U)⋆S`` and ``T⋆S == (ladder ⋄ T) ⋄ S`` on all planar triples.

    The product never looks at labels, so by default each role ranges over
    the planar shapes with at most ``max_vertices`` vertices.  ``labeled=True``
    uses every labeled planar tree instead (much slower, same verdict).
    """
    if max_vertices < 1:
        raise ValueError("max_vertices must be at least 1")
    run = _Run("star", {"max_vertices": max_vertices, "labeled": labeled})
    Ts, Ss, Us = (_planar_family(max_vertices, p, labeled) for p in "tsu")
    for T in Ts:
        for S in Ss:
            TS = product(T, S)
            run.compare({"T": T, "S": S, "identity": "ladder"}, lambda: TS, lambda: star_via_ladder(T, S))
            for U in Us:
                run.compare(
                    {"T": T, "S": S, "U": U},
                    lambda: star_lc(TS, U, product),
                    lambda: star_lc(product(T, U), S, product),
                )
    return run.done()


def _root_targets(op: Operad, T: Tree) -> list:
    return [Angle(T.label, i) for i in range(T.arity + 1)] if op.planar else [T.label]


def check_exponent_formula(cfg: CheckConfig, operad: Operad | None = None) -> CheckReport:
    """Closed-form exponent vs. energy difference, positivity, and f0-independence.

    For every ``(S, v, T)`` and every admissible grafting map ``f``: the
    closed form equals ``energy(graft f) - energy(graft f0)``; it is zero
    exactly when ``f`` only targets the root (root angles); and the energy
    of ``graft f0`` is the same for every monotone ``f0`` into root angles.
    """
    op = operad or get_operad(WEIGHTED_OF[cfg.operad_kind])
    run = _Run("exponent", {**cfg.to_json(), "operad": op.name})
    for S, v, T in pairs(op, cfg):
        m = S.find(v).arity
        roots = _root_targets(op, T)
        f0 = (roots[0],) * m
        base = energy(_graft_targets(S, v, T, f0))
        root_energies = {energy(_graft_targets(S, v, T, g)) for g in op.maps(m, roots)}
        run.assert_true({"S": S, "v": v, "T": T, "property": "f0-independence"}, lambda: len(root_energies) == 1, str(sorted(root_energies)))
        for f in op.maps(m, op.targets(T)):
            def ok(f=f):
                eps = op.exponent_of(S, v, T, f)
                diff = energy(_graft_targets(S, v, T, f)) - base
                at_root = all(t in roots for t in f)
                if eps != diff:
                    return f"closed form {eps} != energy difference {diff}"
                if eps < 0 or (eps == 0) != at_root:
                    return f"exponent {eps} with root-only map = {at_root}"
                return True

            run.assert_true({"S": S, "v": v, "T": T, "f": _fmt_map(S, v, f)}, ok)
    return run.done()


def _graft_targets(S: Tree, v: str, T: Tree, targets: Sequence) -> Tree:
    from .operads import _graft

    return _graft(S, v, T, S.find(v).children, targets)


def _fmt_map(S: Tree, v: str, targets: Sequence) -> str:
    return ", ".join(f"{c.label}->{t if isinstance(t, str) else f'{t[0]}#{t[1]}'}" for c, t in zip(S.find(v).children, targets))


def check_specializations(cfg: CheckConfig, operad: Operad | None = None) -> CheckReport:
    """lambda = 0 and lambda = 1 of the weighted operad vs. the unweighted ones."""
    op = operad or get_operad(WEIGHTED_OF[cfg.operad_kind])
    base_name = op.name.split("[")[0]
    run = _Run("specialization", {**cfg.to_json(), "operad": op.name})
    for S, v, T in pairs(op, cfg):
        for value, name in SPECIALIZATIONS[base_name].items():
            plain = get_operad(name)
            run.compare(
                {"S": S, "v": v, "T": T, "lambda": value, "versus": name},
                lambda: op.compose(S, v, T).evaluate(value),
                lambda: plain.compose(S, v, T),
            )
    return run.done()


# -- bijections behind the associativity proofs ---------------------------------


def nested_bijection(S: Tree, v: str, T: Tree, w: str, U: Tree, f: dict, g: dict) -> tuple[dict, dict]:
    """Map a term ``(f, g)`` of ``(S ∘_v T) ∘_w U`` to the term of ``S ∘_v (T ∘_w U)``.

    ``f`` sends edges into ``v`` (keyed by child label) to targets of ``T``;
    ``g`` sends edges into ``w`` of ``S ∘_v^f T`` to targets of ``U``.  The
    result ``(f~, g~)``: ``g~`` is ``g`` on the edges coming from ``T``;
    ``f~(e)`` is ``f(e)`` unless that target was ``w`` (or an angle at ``w``),
    in which case it is where ``g`` sent ``e``.  For planar trees an angle of
    ``U`` is renumbered to account for the branches of ``T`` inserted there.
    """
    t_edges = [c.label for c in T.find(w).children]
    g_t = {e: g[e] for e in t_edges}
    if not S.planar:
        return {e: (g[e] if f[e] == w else f[e]) for e in f}, g_t
    f_t = {}
    for e, a in f.items():
        if a[0] != w:
            f_t[e] = Angle(*a)
            continue
        x, j = g[e]
        i = a[1]
        shift = sum(
            1
            for k, e2 in enumerate(t_edges)
            if g_t[e2][0] == x and (g_t[e2][1] < j or (g_t[e2][1] == j and k < i))
        )
        f_t[e] = Angle(x, j + shift)
    return f_t, g_t


def disjoint_bijection(S: Tree, v: str, w: str, T: Tree, U: Tree, f: dict, g: dict) -> tuple[dict, dict]:
    """Map a term ``(f, g)`` of ``(S ∘_v T) ∘_w U`` to the term ``(f~, g~)`` of ``(S ∘_w U) ∘_v T``.

    ``g~`` is ``g`` seen as a map on the edges of ``S`` and ``f~ = f``; only
    the name of an edge changes when one of ``v, w`` is a child of the other.
    """
    g_t = {(v if e == T.label else e): t for e, t in g.items()}
    f_t = {(U.label if e == w else e): t for e, t in f.items()}
    return f_t, g_t


def _term_index(op: Operad, X: Tree, v: str, Y: Tree):
    """``(map dict, grafted tree, exponent)`` for every admissible map of ``X ∘_v Y``."""
    edges = [c.label for c in X.find(v).children]
    for targets, tree, e in op.terms(X, v, Y):
        yield dict(zip(edges, targets)), tree, e


def _frozen(d: dict) -> tuple:
    return tuple(sorted(d.items()))


def check_bijections(cfg: CheckConfig, operad: Operad | None = None) -> CheckReport:
    """Term-level bijections behind nested and disjoint associativity.

    Each term of the left side is sent by :func:`nested_bijection` /
    :func:`disjoint_bijection` to a term of the right side; the check
    requires the same tree and exponent on both ends, injectivity, and equal
    term counts on both sides (so the map is a bijection).
    """
    op = _resolve(cfg, operad)
    run = _Run("bijection", {**cfg.to_json(), "operad": op.name})

    def verify(case, left, right, forward):
        right_index = {(_frozen(a), _frozen(b)): (tree, e) for a, b, tree, e in right}
        seen = set()
        for f, g, tree, e in left:
            ft, gt = forward(f, g)
            k = (_frozen(ft), _frozen(gt))
            if k not in right_index:
                return f"image of {f}, {g} is not an admissible pair: {ft}, {gt}"
            if k in seen:
                return f"not injective at {ft}, {gt}"
            seen.add(k)
            tree2, e2 = right_index[k]
            if tree2 != tree or (op.weighted and e2 != e):
                return f"{f}, {g} gives {format_tree(tree)} L^{e}; image gives {format_tree(tree2)} L^{e2}"
        if len(seen) != len(right_index):
            return f"{len(seen)} left terms vs {len(right_index)} right terms"
        return True

    for S, v, T, w, U in nested_triples(op, cfg):
        left = [
            (f, g, tree, e1 + e2)
            for f, X, e1 in _term_index(op, S, v, T)
            for g, tree, e2 in _term_index(op, X, w, U)
        ]
        right = [
            (ft, gt, tree, e1 + e2)
            for gt, Y, e1 in _term_index(op, T, w, U)
            for ft, tree, e2 in _term_index(op, S, v, Y)
        ]
        run.assert_true(
            {"S": S, "v": v, "T": T, "w": w, "U": U, "lemma": "nested"},
            lambda: verify(None, left, right, lambda f, g: nested_bijection(S, v, T, w, U, f, g)),
        )
    for S, v, w, T, U in disjoint_triples(op, cfg):
        left = [
            (f, g, tree, e1 + e2)
            for f, X, e1 in _term_index(op, S, v, T)
            for g, tree, e2 in _term_index(op, X, w, U)
        ]
        right = [
            (ft, gt, tree, e1 + e2)
            for gt, Y, e1 in _term_index(op, S, w, U)
            for ft, tree, e2 in _term_index(op, Y, v, T)
        ]
        run.assert_true(
            {"S": S, "v": v, "w": w, "T": T, "U": U, "lemma": "disjoint"},
            lambda: verify(None, left, right, lambda f, g: disjoint_bijection(S, v, w, T, U, f, g)),
        )
    return run.done()


# -- current-preserving wrapper -----------------------------------------------


def _restrict(Y: dict, labels) -> list:
    return [Y[b] for b in sorted(labels)]


def check_graded(
    cfg: CheckConfig,
    G: Semigroup = POSITIVE_INTEGERS,
    colors: Sequence | None = None,
    operad: Operad | None = None,
) -> CheckReport:
    """``O^G`` over the base operad: associativity, zero on mismatch, and ``phi^G``.

    ``colors`` is the finite set of colors enumerated (the whole carrier for
    a finite ``G``; a truncation such as ``1..3`` for the positive
    integers).  The ``phi^G`` comparison keeps exactly the graded components
    visible inside the truncation on both sides.
    """
    base = _resolve(cfg, operad)
    if base.weighted:
        raise ValueError("the O^G wrapper takes an ordinary (unweighted) base operad")
    colors = tuple(G.carrier if colors is None else colors)
    colorset = set(colors)
    run = _Run("graded", {**cfg.to_json(), "semigroup": G.name, "colors": [str(c) for c in colors], "operad": base.name})
    bc = base.compose

    run.assert_true({"semigroup": G.name, "property": "laws"}, lambda: not G.law_violations(colors) or str(G.law_violations(colors)[:3]))

    def graded(t):
        return [GradedElement(t, W) for W in all_colorings(t.labels, colors)]

    for S, v, T in pairs(base, cfg):
        for x in graded(S):
            for y in graded(T):
                matches = G.sum(y.colors.values()) == x.colors[v]

                def zero_rule(x=x, y=y, matches=matches):
                    got = og_compose(x, v, y, bc, G)
                    if not matches:
                        return got.is_zero() or f"nonzero on mismatch: {got}"
                    merged = {**{a: c for a, c in x.colors.items() if a != v}, **y.colors}
                    want = LinComb._raw({GradedElement(t, merged): c for t, c in bc(S, v, T)._terms.items()})
                    return got == want or f"{got} != {want}"

                run.assert_true({"x": x, "v": v, "y": y, "property": "zero-on-mismatch"}, zero_rule)

        def truncated_rhs(S=S, v=v, T=T):
            out = phi_g(bc(S, v, T), all_colorings((S.labels - {v}) | T.labels, colors))
            keep = {
                b: c for b, c in out._terms.items() if G.sum(_restrict(b.colors, T.labels)) in colorset
            }
            return LinComb._raw(keep)

        run.compare(
            {"S": S, "v": v, "T": T, "property": "phi_G morphism"},
            lambda: og_compose_lc(phi_g(S, all_colorings(S.labels, colors)), v, phi_g(T, all_colorings(T.labels, colors)), bc, G),
            truncated_rhs,
        )

    def comp(X, a, Y):
        return og_compose_lc(X, a, Y, bc, G)

    for S, v, T, w, U in nested_triples(base, cfg):
        for x in graded(S):
            for y in graded(T):
                for z in graded(U):
                    run.compare(
                        {"x": x, "v": v, "y": y, "w": w, "z": z, "property": "nested"},
                        lambda: comp(og_compose(x, v, y, bc, G), w, LinComb.basis(z)),
                        lambda: comp(LinComb.basis(x), v, og_compose(y, w, z, bc, G)),
                    )
    for S, v, w, T, U in disjoint_triples(base, cfg):
        for x in graded(S):
            for y in graded(T):
                for z in graded(U):
                    run.compare(
                        {"x": x, "v": v, "w": w, "y": y, "z": z, "property": "disjoint"},
                        lambda: comp(og_compose(x, v, y, bc, G), w, LinComb.basis(z)),
                        lambda: comp(og_compose(x, w, z, bc, G), v, LinComb.basis(y)),
                    )
    return run.done()


CHECKS: dict[str, Callable[..., CheckReport]] = {
    "nested": check_nested_associativity,
    "disjoint": check_disjoint_associativity,
    "unit": check_unit,
    "equivariance": check_equivariance,
    "phi": check_phi_morphism,
    # star bounds each tree separately: max_tree_vertices if given, else at most 4
    "star": lambda cfg: check_star_right_nap(cfg.max_tree_vertices or min(cfg.max_vertices, 4)),
    "exponent": check_exponent_formula,
    "specialization": check_specializations,
    "bijection": check_bijections,
}


def run_check(name: str, cfg: CheckConfig) -> CheckReport:
    try:
        fn = CHECKS[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}") from None
    return fn(cfg)
