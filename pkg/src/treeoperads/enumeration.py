"""Exhaustive generation of small trees, weightings and weighted shapes."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from more_itertools import set_partitions

from .trees import NonPlanarTree, PlanarTree, Tree, TreeError, with_weights

__all__ = [
    "enumerate_nonplanar",
    "enumerate_planar",
    "enumerate_trees",
    "enumerate_weightings",
    "enumerate_weighted_shapes",
    "enumerate_planar_shapes",
    "label_set",
]


def label_set(prefix: str, n: int) -> tuple[str, ...]:
    """``(prefix1, ..., prefixn)``."""
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def _blocks(rest: Sequence[str]) -> Iterator[list[list[str]]]:
    if not rest:
        yield []
        return
    yield from set_partitions(rest)


@lru_cache(maxsize=None)
def _nonplanar(labels: frozenset) -> tuple[NonPlanarTree, ...]:
    out = []
    for r in sorted(labels):
        for blocks in _blocks(sorted(labels - {r})):
            for kids in product(*(_nonplanar(frozenset(b)) for b in blocks)):
                out.append(NonPlanarTree._make(r, 1, kids))
    return tuple(sorted(out, key=lambda t: t.key))


@lru_cache(maxsize=None)
def _planar(labels: frozenset) -> tuple[PlanarTree, ...]:
    out = []
    for r in sorted(labels):
        for blocks in _blocks(sorted(labels - {r})):
            for seq in permutations(blocks):
                for kids in product(*(_planar(frozenset(b)) for b in seq)):
                    out.append(PlanarTree._make(r, 1, kids))
    return tuple(sorted(out, key=lambda t: t.key))


def _check_labels(labels: Iterable[str]) -> frozenset:
    labels = list(labels)
    if not labels:
        raise TreeError("label set must be nonempty")
    if len(set(labels)) != len(labels):
        raise TreeError("labels must be distinct")
    NonPlanarTree(labels[0])  # validates the token
    for lab in labels[1:]:
        NonPlanarTree(lab)
    return frozenset(labels)


def enumerate_nonplanar(labels: Iterable[str]) -> list[NonPlanarTree]:
    """All non-planar trees on exactly these labels, weights 1 (n**(n-1) of them)."""
    return list(_nonplanar(_check_labels(labels)))


def enumerate_planar(labels: Iterable[str]) -> list[PlanarTree]:
    """All planar trees on exactly these labels, weights 1 (n! * Catalan(n-1))."""
    return list(_planar(_check_labels(labels)))


def enumerate_trees(labels: Iterable[str], mode: str) -> list[Tree]:
    return enumerate_planar(labels) if mode == "planar" else enumerate_nonplanar(labels)


@lru_cache(maxsize=None)
def _weight_vectors(n: int, max_total: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for w in range(1, max_total - (n - 1) + 1):
        out.extend((w,) + rest for rest in _weight_vectors(n - 1, max_total - w))
    return tuple(out)


def enumerate_weightings(t: Tree, max_total: int) -> list[Tree]:
    """Copies of ``t`` under every weight function with total weight <= ``max_total``."""
    if max_total < 1:
        raise TreeError("max_total must be at least 1")
    labels = t.vertices()
    return [with_weights(t, dict(zip(labels, ws))) for ws in _weight_vectors(len(labels), max_total)]


@lru_cache(maxsize=None)
def _shapes(w: int) -> tuple[tuple, ...]:
    # a shape is (root weight, sorted tuple of child shapes)
    out = set()
    for r in range(1, w + 1):
        for forest in _forests(w - r):
            out.add((r, forest))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _forests(w: int) -> tuple[tuple, ...]:
    if w == 0:
        return ((),)
    out = set()
    for k in range(1, w + 1):
        for s in _shapes(k):
            for rest in _forests(w - k):
                out.add(tuple(sorted(rest + (s,))))
    return tuple(sorted(out))


def _shape_tree(shape: tuple) -> NonPlanarTree:
    counter = iter(range(1, 10**6))

    def go(s):
        label = f"v{next(counter)}"
        return NonPlanarTree._make(label, s[0], tuple(go(c) for c in s[1]))

    return go(shape)


def enumerate_weighted_shapes(max_total: int) -> list[NonPlanarTree]:
    """Unlabeled weighted non-planar shapes with total weight <= ``max_total``.

    Each shape is returned once, labeled ``v1, v2, ...`` in preorder.  Ordered
    by total weight, then by shape.
    """
    if max_total < 1:
        raise TreeError("max_total must be at least 1")
    return [_shape_tree(s) for w in range(1, max_total + 1) for s in _shapes(w)]


@lru_cache(maxsize=None)
def _planar_forests(n: int) -> tuple[tuple, ...]:
    # ordered forests with n vertices; a planar shape is its tuple of child shapes
    if n == 0:
        return ((),)
    return tuple(
        (first,) + rest
        for k in range(1, n + 1)
        for first in _planar_forests(k - 1)
        for rest in _planar_forests(n - k)
    )


def _planar_shape_tree(kids: tuple, prefix: str) -> PlanarTree:
    counter = iter(range(1, 10**6))

    def go(ks):
        label = f"{prefix}{next(counter)}"
        return PlanarTree._make(label, 1, tuple(go(c) for c in ks))

    return go(kids)


def enumerate_planar_shapes(max_vertices: int, prefix: str = "v") -> list[PlanarTree]:
    """Unlabeled planar trees with at most ``max_vertices`` vertices.

    Each shape appears once, labeled ``prefix1, prefix2, ...`` in preorder;
    there are Catalan(n-1) shapes with n vertices.
    """
    if max_vertices < 1:
        raise TreeError("max_vertices must be at least 1")
    return [_planar_shape_tree(f, prefix) for n in range(1, max_vertices + 1) for f in _planar_forests(n - 1)]
