"""Partial compositions of tree operads.

Six operads share one grafting engine:

========  ==========  ========================  ========
name      trees       grafting targets          weights
========  ==========  ========================  ========
prelie    non-planar  every vertex              ignored
nap       non-planar  the root                  ignored
brace     planar      every angle (monotone)    ignored
b0        planar      root angles (monotone)    ignored
olambda   non-planar  every vertex              current-preserving, lambda^energy
blambda   planar      every angle (monotone)    current-preserving, lambda^energy
========  ==========  ========================  ========

``S ∘_v T`` removes vertex ``v`` of ``S``, puts ``T`` in its place and
re-attaches every branch that stood on ``v`` to a target of ``T`` chosen by a
grafting map ``f``; the composition is the sum over admissible ``f``.  For the
weighted operads the composition vanishes unless the total weight of ``T``
equals the weight of ``v``, and the term of ``f`` carries
``lambda ** exponent(f)``, its energy excess over the all-to-root grafting.

Monotone maps are weakly increasing; branches sent to the same angle keep their
left-to-right order.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator, Mapping, Sequence

from .algebra import ONE, LinComb, monomial
from .trees import (
    Angle,
    EdgeRef,
    NonPlanarTree,
    PlanarTree,
    Tree,
    TreeError,
    UnknownVertexError,
    angles,
    heights,
    root_angles,
)

__all__ = [
    "Operad",
    "OPERADS",
    "get_operad",
    "graft_nonplanar",
    "graft_planar",
    "grafting_maps",
    "prelie_compose",
    "nap_compose",
    "brace_compose",
    "b0_compose",
    "olambda_compose",
    "blambda_compose",
    "exponent",
    "unit_tree",
    "star",
    "star_lc",
    "star_via_ladder",
    "phi",
    "phi_lc",
    "shuffle",
    "compose_lc",
]


def _check_inputs(S: Tree, v: str, T: Tree) -> Tree:
    if type(S) is not type(T):
        raise TypeError("cannot compose a planar tree with a non-planar one")
    if v not in S.labels:
        raise UnknownVertexError(f"no vertex {v!r} in {S}")
    clash = (S.labels - {v}) & T.labels
    if clash:
        raise TreeError(f"label clash: {sorted(clash)} occur in both trees")
    return S.find(v)


def _attach_nonplanar(node: Tree, attach: Mapping[str, list], touched: frozenset) -> Tree:
    children = tuple(
        _attach_nonplanar(c, attach, touched) if not touched.isdisjoint(c.labels) else c for c in node.children
    )
    extra = attach.get(node.label)
    if extra:
        children += tuple(extra)
    return NonPlanarTree._make(node.label, node.weight, children)


def _attach_planar(node: Tree, attach: Mapping[tuple, list], touched: frozenset) -> Tree:
    kids: list = []
    label = node.label
    for i, c in enumerate(node.children):
        extra = attach.get((label, i))
        if extra:
            kids.extend(extra)
        kids.append(_attach_planar(c, attach, touched) if not touched.isdisjoint(c.labels) else c)
    extra = attach.get((label, len(node.children)))
    if extra:
        kids.extend(extra)
    return PlanarTree._make(label, node.weight, tuple(kids))


def _graft(S: Tree, v: str, T: Tree, branches: Sequence[Tree], targets: Sequence) -> Tree:
    # targets[i] is a vertex label (non-planar) or an Angle (planar) for branches[i]
    if branches:
        attach: dict = {}
        for b, t in zip(branches, targets):
            attach.setdefault(t, []).append(b)
        if T.planar:
            touched = frozenset(a[0] for a in attach)
            new = _attach_planar(T, attach, touched)
        else:
            new = _attach_nonplanar(T, attach, frozenset(attach))
    else:
        new = T
    return S.replace(v, new)


def _edge_child(e) -> str:
    return e.child if isinstance(e, EdgeRef) else e


def _normalize_map(S: Tree, v: str, f: Mapping) -> tuple[tuple[Tree, ...], list]:
    node = S.find(v)
    fm = {_edge_child(e): t for e, t in f.items()}
    kids = node.children
    missing = [c.label for c in kids if c.label not in fm]
    extra = set(fm) - {c.label for c in kids}
    if missing or extra:
        raise TreeError(f"grafting map must be defined exactly on the edges into {v!r} (missing {missing}, extra {sorted(extra)})")
    return kids, [fm[c.label] for c in kids]


def graft_nonplanar(S: NonPlanarTree, v: str, T: NonPlanarTree, f: Mapping) -> NonPlanarTree:
    """The single tree ``S ∘_v^f T``; ``f`` maps edges into ``v`` (or child labels) to vertices of ``T``."""
    _check_inputs(S, v, T)
    kids, targets = _normalize_map(S, v, f)
    for t in targets:
        if t not in T.labels:
            raise TreeError(f"grafting target {t!r} is not a vertex of {T}")
    return _graft(S, v, T, kids, targets)


def graft_planar(S: PlanarTree, v: str, T: PlanarTree, f: Mapping) -> PlanarTree:
    """The single planar tree ``S ⋄_v^f T``; ``f`` maps edges into ``v`` to angles of ``T``.

    ``f`` must be weakly increasing for the left-to-right orders.
    """
    _check_inputs(S, v, T)
    kids, targets = _normalize_map(S, v, f)
    order = {a: i for i, a in enumerate(angles(T))}
    try:
        idx = [order[Angle(*a)] for a in targets]
    except (KeyError, TypeError):
        raise TreeError(f"grafting targets {targets} are not all angles of {T}") from None
    if any(i > j for i, j in zip(idx, idx[1:])):
        raise TreeError("grafting map is not weakly increasing")
    return _graft(S, v, T, kids, [Angle(*a) for a in targets])


@dataclass(frozen=True)
class Operad:
    """One of the tree operads, possibly with a deliberately broken rule.

    The ``strict``, ``exponent_sign``, ``absolute_heights`` and
    ``min_label_target`` fields exist only to seed faults for harness
    self-tests; the registered operads leave them at their defaults.
    """

    name: str
    planar: bool
    weighted: bool
    all_targets: bool
    strict: bool = False
    exponent_sign: int = 1
    absolute_heights: bool = False
    min_label_target: bool = False

    @property
    def tree_class(self) -> type[Tree]:
        return PlanarTree if self.planar else NonPlanarTree

    @property
    def mode(self) -> str:
        return "planar" if self.planar else "nonplanar"

    def mutate(self, **changes) -> Operad:
        tag = ",".join(f"{k}={v}" for k, v in sorted(changes.items()))
        return dataclasses.replace(self, name=f"{self.name}[{tag}]", **changes)

    def targets(self, T: Tree) -> list:
        """Possible images of a single edge: vertices or angles of ``T``."""
        if self.planar:
            return angles(T) if self.all_targets else root_angles(T)
        if self.all_targets:
            return T.vertices()
        return [min(T.labels)] if self.min_label_target else [T.label]

    def maps(self, m: int, targets: Sequence) -> Iterator[tuple]:
        """Admissible grafting maps of ``m`` ordered edges as target tuples."""
        if not self.planar:
            return product(targets, repeat=m)
        choose = combinations if self.strict else combinations_with_replacement
        return (tuple(targets[i] for i in c) for c in choose(range(len(targets)), m))

    def exponent_of(self, S: Tree, v: str, T: Tree, targets: Sequence, *, _h=None) -> int:
        """Energy excess of the grafting, from the closed form sum of h(f(e)) |B_e|."""
        h = heights(T) if _h is None else _h
        branches = S.find(v).children
        if self.planar:
            eps = sum(h[a[0]] * b.total_weight for a, b in zip(targets, branches))
        else:
            eps = sum(h[t] * b.total_weight for t, b in zip(targets, branches))
        if self.absolute_heights:
            eps += heights(S)[v] * sum(b.total_weight for b in branches)
        return self.exponent_sign * eps

    def terms(self, S: Tree, v: str, T: Tree) -> Iterator[tuple[tuple, Tree, int]]:
        """``(targets, grafted tree, exponent)`` for every admissible map."""
        node = _check_inputs(S, v, T)
        branches = node.children
        h = heights(T)
        for targets in self.maps(len(branches), self.targets(T)):
            tree = _graft(S, v, T, branches, targets)
            e = self.exponent_of(S, v, T, targets, _h=h) if self.weighted else 0
            yield targets, tree, e

    def compose(self, S: Tree, v: str, T: Tree) -> LinComb:
        """``S ∘_v T`` as a linear combination of trees."""
        if not isinstance(S, self.tree_class) or not isinstance(T, self.tree_class):
            raise TypeError(f"{self.name} composes {self.tree_class.__name__} values")
        node = _check_inputs(S, v, T)
        if self.weighted and T.total_weight != node.weight:
            return LinComb()
        out: dict = {}
        for _, tree, e in self.terms(S, v, T):
            c = monomial(e) if e else ONE
            prev = out.get(tree)
            out[tree] = c if prev is None else prev + c
        return LinComb._raw({t: c for t, c in out.items() if c})

    def compose_lc(self, X: LinComb, v: str, Y: LinComb) -> LinComb:
        return compose_lc(self.compose, X, v, Y)

    def unit(self, label: str, weight: int = 1) -> Tree:
        return unit_tree(label, weight, self.mode)


def compose_lc(compose, X: LinComb | Tree, v: str, Y: LinComb | Tree) -> LinComb:
    """Bilinear extension of a partial composition to linear combinations."""
    if isinstance(X, Tree):
        X = LinComb._raw({X: ONE})
    if isinstance(Y, Tree):
        Y = LinComb._raw({Y: ONE})
    acc: dict = {}
    for s, p in X._terms.items():
        for t, q in Y._terms.items():
            pq = p * q
            for b, c in compose(s, v, t)._terms.items():
                r = c * pq
                prev = acc.get(b)
                acc[b] = r if prev is None else prev + r
    return LinComb._raw({b: c for b, c in acc.items() if c})


OPERADS: dict[str, Operad] = {
    "prelie": Operad("prelie", planar=False, weighted=False, all_targets=True),
    "nap": Operad("nap", planar=False, weighted=False, all_targets=False),
    "brace": Operad("brace", planar=True, weighted=False, all_targets=True),
    "b0": Operad("b0", planar=True, weighted=False, all_targets=False),
    "olambda": Operad("olambda", planar=False, weighted=True, all_targets=True),
    "blambda": Operad("blambda", planar=True, weighted=True, all_targets=True),
}


def get_operad(name: str) -> Operad:
    try:
        return OPERADS[name]
    except KeyError:
        raise ValueError(f"unknown operad {name!r}; choose from {', '.join(OPERADS)}") from None


def prelie_compose(S: NonPlanarTree, v: str, T: NonPlanarTree) -> LinComb:
    return OPERADS["prelie"].compose(S, v, T)


def nap_compose(S: NonPlanarTree, v: str, T: NonPlanarTree) -> LinComb:
    return OPERADS["nap"].compose(S, v, T)


def brace_compose(S: PlanarTree, v: str, T: PlanarTree) -> LinComb:
    return OPERADS["brace"].compose(S, v, T)


def b0_compose(S: PlanarTree, v: str, T: PlanarTree) -> LinComb:
    return OPERADS["b0"].compose(S, v, T)


def olambda_compose(S: NonPlanarTree, v: str, T: NonPlanarTree) -> LinComb:
    return OPERADS["olambda"].compose(S, v, T)


def blambda_compose(S: PlanarTree, v: str, T: PlanarTree) -> LinComb:
    return OPERADS["blambda"].compose(S, v, T)


def grafting_maps(S: Tree, v: str, T: Tree, kind: str = "all") -> list[dict[EdgeRef, object]]:
    """Every admissible grafting map as an ``EdgeRef -> target`` dict.

    ``kind="all"`` gives all vertex maps (non-planar) or all monotone angle maps
    (planar); ``kind="root"`` restricts targets to the root or root angles.
    """
    op = Operad("maps", planar=S.planar, weighted=False, all_targets=(kind == "all"))
    edges = [EdgeRef(v, c.label) for c in S.find(v).children]
    return [dict(zip(edges, ts)) for ts in op.maps(len(edges), op.targets(T))]


def exponent(S: Tree, v: str, T: Tree, f: Mapping) -> int:
    """``sum over e in E(S,v) of h(f(e)) * |B_e|``, with h the height in ``T``.

    Equals ``energy(graft f) - energy(graft f0)`` for any all-to-root ``f0``.
    """
    _check_inputs(S, v, T)
    kids, targets = _normalize_map(S, v, f)
    h = heights(T)
    try:
        return sum(h[t[0] if S.planar else t] * b.total_weight for t, b in zip(targets, kids))
    except KeyError as exc:
        raise TreeError(f"grafting target {exc.args[0]!r} not in {T}") from None


def unit_tree(label: str, n: int = 1, mode: str = "nonplanar") -> Tree:
    """Single vertex of weight ``n``: the weight-``n`` component of the unit."""
    cls = PlanarTree if mode == "planar" else NonPlanarTree
    if mode not in ("planar", "nonplanar"):
        raise ValueError(f"bad mode {mode!r}")
    return cls(label, (), n)


def star(T: PlanarTree, S: PlanarTree) -> LinComb:
    """``T ⋆ S``: ``S`` inserted in each root slot of ``T``."""
    if T.labels & S.labels:
        raise TreeError(f"label clash: {sorted(T.labels & S.labels)}")
    kids = T.children
    return LinComb._raw(
        {PlanarTree._make(T.label, T.weight, kids[:i] + (S,) + kids[i:]): ONE for i in range(len(kids) + 1)}
    )


def star_lc(X: LinComb | PlanarTree, Y: LinComb | PlanarTree, product=star) -> LinComb:
    return compose_lc(lambda t, _, s: product(t, s), X, "", Y)


def _fresh(taken: frozenset, stem: str) -> str:
    label, i = stem, 0
    while label in taken:
        i += 1
        label = f"{stem}{i}"
    return label


def star_via_ladder(T: PlanarTree, S: PlanarTree) -> LinComb:
    """``(ladder(p, q) ⋄_p T) ⋄_q S`` in the operad b0, with ``q`` stacked on ``p``."""
    taken = T.labels | S.labels
    p = _fresh(taken, "ladderroot")
    q = _fresh(taken | {p}, "laddertop")
    ladder = PlanarTree(p, [PlanarTree(q)])
    b0 = OPERADS["b0"]
    return b0.compose_lc(b0.compose(ladder, p, T), q, LinComb._raw({S: ONE}))


def shuffle(u: Sequence, w: Sequence) -> list[tuple]:
    """All interleavings of ``u`` and ``w`` (with multiplicity)."""
    if not u:
        return [tuple(w)]
    if not w:
        return [tuple(u)]
    return [(u[0],) + r for r in shuffle(u[1:], w)] + [(w[0],) + r for r in shuffle(u, w[1:])]


@lru_cache(maxsize=200_000)
def _phi_terms(t: NonPlanarTree) -> tuple[PlanarTree, ...]:
    words: list[tuple] = [()]
    for c in t.children:
        words = [s for word in words for p in _phi_terms(c) for s in shuffle(word, (p,))]
    return tuple(PlanarTree._make(t.label, t.weight, w) for w in words)


def phi(T: NonPlanarTree) -> LinComb:
    """Sum of all planar representatives of ``T``."""
    if not isinstance(T, NonPlanarTree):
        raise TypeError("phi takes a non-planar tree")
    out: dict = {}
    for p in _phi_terms(T):
        out[p] = out.get(p, 0) + 1
    return LinComb._raw({p: ONE * c for p, c in out.items()})


def phi_lc(X: LinComb) -> LinComb:
    return X.map_linear(phi)
