"""Current-preserving (colored) version ``O^G`` of an arbitrary operad.

An element of ``O^G`` is a base element together with a coloring of its labels
by a commutative semigroup ``G``.  Composing at ``a`` is the base composition
with merged colorings, and is zero unless the colors of the inserted element
add up to the color of ``a``.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from functools import reduce
from itertools import product
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from .algebra import ONE, LinComb
from .trees import TreeError

__all__ = [
    "Semigroup",
    "POSITIVE_INTEGERS",
    "cyclic_group",
    "max_semilattice",
    "GradedElement",
    "og_compose",
    "phi_g",
    "all_colorings",
]


@dataclass(frozen=True)
class Semigroup:
    """Commutative semigroup written additively.

    ``carrier`` is ``None`` for infinite semigroups; colorings are then
    enumerated from an explicit finite sample.
    """

    name: str
    op: Callable[[Any, Any], Any] = field(compare=False)
    carrier: tuple | None = None

    def sum(self, colors: Iterable) -> Any:
        colors = list(colors)
        if not colors:
            raise ValueError("a semigroup has no empty sum")
        return reduce(self.op, colors)

    def law_violations(self, sample: Sequence | None = None) -> list[tuple]:
        """Triples (or pairs) from ``sample`` breaking commutativity or associativity."""
        xs = list(self.carrier if sample is None else sample)
        bad: list[tuple] = []
        for x, y in product(xs, repeat=2):
            if self.op(x, y) != self.op(y, x):
                bad.append(("commutativity", x, y))
        for x, y, z in product(xs, repeat=3):
            if self.op(self.op(x, y), z) != self.op(x, self.op(y, z)):
                bad.append(("associativity", x, y, z))
        return bad


POSITIVE_INTEGERS = Semigroup("N*", operator.add)


def cyclic_group(n: int) -> Semigroup:
    return Semigroup(f"Z/{n}", lambda x, y: (x + y) % n, tuple(range(n)))


def max_semilattice(n: int) -> Semigroup:
    """``{0..n-1}`` under ``max``; idempotent, so unlike any group."""
    return Semigroup(f"max{n}", max, tuple(range(n)))


@dataclass(frozen=True)
class GradedElement:
    """``(base, W)``: a base element in the component of coloring ``W``."""

    base: Hashable
    coloring: tuple  # sorted (label, color) pairs

    def __init__(self, base: Hashable, coloring: Mapping[str, Any] | Iterable[tuple[str, Any]]):
        items = coloring.items() if isinstance(coloring, Mapping) else coloring
        col = tuple(sorted(items))
        labels = getattr(base, "labels", None)
        if labels is not None and set(labels) != {lab for lab, _ in col}:
            raise TreeError(f"coloring must be defined exactly on the labels {sorted(labels)}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "coloring", col)

    @property
    def colors(self) -> dict[str, Any]:
        return dict(self.coloring)

    @property
    def labels(self) -> frozenset:
        return frozenset(lab for lab, _ in self.coloring)

    @property
    def key(self) -> tuple:
        base_key = getattr(self.base, "key", repr(self.base))
        return (base_key, tuple((lab, repr(c)) for lab, c in self.coloring))

    def signature(self) -> Hashable:
        return (type(self.base), self.labels)

    def __str__(self) -> str:
        col = ", ".join(f"{lab}={c}" for lab, c in self.coloring)
        return f"({self.base}; {col})"


def og_compose(
    x: GradedElement,
    a: str,
    y: GradedElement,
    base_compose: Callable[[Any, str, Any], Any],
    G: Semigroup = POSITIVE_INTEGERS,
) -> LinComb:
    """``(alpha, W) ∘_a (beta, X)`` in ``O^G``: zero unless ``sum X == W(a)``."""
    W, X = x.colors, y.colors
    if a not in W:
        raise TreeError(f"no label {a!r} in {x}")
    if (set(W) - {a}) & set(X):
        raise TreeError(f"label clash: {sorted((set(W) - {a}) & set(X))}")
    if G.sum(X.values()) != W[a]:
        return LinComb()
    merged = {lab: c for lab, c in W.items() if lab != a}
    merged.update(X)
    result = base_compose(x.base, a, y.base)
    if not isinstance(result, LinComb):
        result = LinComb._raw({result: ONE})
    return LinComb._raw({GradedElement(b, merged): c for b, c in result._terms.items()})


def og_compose_lc(x: LinComb, a: str, y: LinComb, base_compose, G: Semigroup = POSITIVE_INTEGERS) -> LinComb:
    from .operads import compose_lc

    return compose_lc(lambda s, v, t: og_compose(s, v, t, base_compose, G), x, a, y)


def all_colorings(labels: Iterable[str], colors: Sequence) -> list[dict[str, Any]]:
    labels = sorted(labels)
    return [dict(zip(labels, cs)) for cs in product(colors, repeat=len(labels))]


def phi_g(alpha: Any, colorings: Iterable[Mapping[str, Any]]) -> LinComb:
    """Truncation of ``sum over W of (alpha, W)`` to the given colorings."""
    if isinstance(alpha, LinComb):
        acc = LinComb()
        colorings = list(colorings)
        for b, c in alpha._terms.items():
            acc = acc + phi_g(b, colorings).scale(c)
        return acc
    terms = {}
    for W in colorings:
        terms[GradedElement(alpha, W)] = ONE
    return LinComb._raw(terms)
