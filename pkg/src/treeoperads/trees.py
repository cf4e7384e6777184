"""Labeled, weighted rooted trees (planar and non-planar).

Trees are immutable.  A :class:`NonPlanarTree` is always stored in canonical
form, so ``==`` is isomorphism respecting labels and weights.  A
:class:`PlanarTree` keeps its children in the order given.

Every vertex carries a label (an identifier token, distinct within a tree) and
a positive integer weight.  Unweighted operads simply use weight 1 everywhere.
"""

from __future__ import annotations

import re
from typing import Callable, ClassVar, Iterable, Iterator, Mapping, NamedTuple, Union

__all__ = [
    "LABEL_RE",
    "Angle",
    "EdgeRef",
    "Tree",
    "PlanarTree",
    "NonPlanarTree",
    "TreeError",
    "DuplicateLabelError",
    "UnknownVertexError",
    "canonicalize",
    "forget_planarity",
    "total_weight",
    "energy",
    "height",
    "heights",
    "branch_weight",
    "angles",
    "root_angles",
    "incoming_edges",
    "relabel",
    "with_weights",
]

LABEL_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class TreeError(ValueError):
    """Malformed tree or invalid tree operation."""


class DuplicateLabelError(TreeError):
    pass


class UnknownVertexError(TreeError, LookupError):
    pass


class Angle(NamedTuple):
    """Corner ``slot`` of ``vertex``: slot i sits between child i-1 and child i."""

    vertex: str
    slot: int


class EdgeRef(NamedTuple):
    """The edge arriving at ``parent`` from the subtree rooted at ``child``."""

    parent: str
    child: str


class Tree:
    """Common machinery of planar and non-planar trees.

    Use the concrete subclasses.  Structural data is cached on construction:
    ``key`` (the recursive comparison key), ``labels``, ``size`` and
    ``total_weight``.
    """

    __slots__ = ("label", "weight", "children", "key", "labels", "size", "total_weight", "_hash")

    planar: ClassVar[bool]

    label: str
    weight: int
    children: tuple
    key: tuple
    labels: frozenset
    size: int
    total_weight: int

    def __init__(self, label: str, children: Iterable[Tree] = (), weight: int = 1):
        if not isinstance(label, str) or not LABEL_RE.match(label):
            raise TreeError(f"invalid label {label!r}")
        if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
            raise TreeError(f"weight of {label!r} must be a positive integer, got {weight!r}")
        children = tuple(children)
        seen = {label}
        for c in children:
            if type(c) is not type(self):
                raise TypeError(f"child {c!r} is not a {type(self).__name__}")
            clash = seen & c.labels
            if clash:
                raise DuplicateLabelError(f"duplicate label(s) {sorted(clash)}")
            seen |= c.labels
        self._init(label, weight, children)

    def _init(self, label: str, weight: int, children: tuple) -> None:
        key = (weight, tuple(c.key for c in children), label)
        labels = frozenset().union(*(c.labels for c in children)) | {label}
        _set(self, "label", label)
        _set(self, "weight", weight)
        _set(self, "children", children)
        _set(self, "key", key)
        _set(self, "labels", labels)
        _set(self, "size", 1 + sum(c.size for c in children))
        _set(self, "total_weight", weight + sum(c.total_weight for c in children))
        _set(self, "_hash", hash((self.planar, key)))

    @classmethod
    def _make(cls, label: str, weight: int, children: tuple) -> Tree:
        # unchecked constructor for internal use: labels known distinct
        t = object.__new__(cls)
        t._init(label, weight, children)
        return t

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(other) is not type(self):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Tree) -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        from .syntax import format_tree

        return f"{type(self).__name__}({format_tree(self)!r})"

    def __str__(self) -> str:
        from .syntax import format_tree

        return format_tree(self)

    def __reduce__(self):
        return (_rebuild, (type(self), self.label, self.weight, self.children))

    @property
    def arity(self) -> int:
        return len(self.children)

    def nodes(self) -> Iterator[Tree]:
        """Preorder traversal of all subtrees (one per vertex)."""
        stack = [self]
        while stack:
            t = stack.pop()
            yield t
            stack.extend(reversed(t.children))

    def vertices(self) -> list[str]:
        return [t.label for t in self.nodes()]

    def find(self, label: str) -> Tree:
        """The subtree rooted at ``label``."""
        t = self
        while t.label != label:
            for c in t.children:
                if label in c.labels:
                    t = c
                    break
            else:
                raise UnknownVertexError(f"no vertex {label!r} in {self}")
        return t

    def weights(self) -> dict[str, int]:
        return {t.label: t.weight for t in self.nodes()}

    def parent_of(self, label: str) -> str | None:
        if label == self.label:
            return None
        t = self
        while True:
            for c in t.children:
                if c.label == label:
                    return t.label
                if label in c.labels:
                    t = c
                    break
            else:
                raise UnknownVertexError(f"no vertex {label!r} in {self}")

    def replace(self, label: str, new: Tree) -> Tree:
        """Copy of this tree with the subtree at ``label`` swapped for ``new``."""
        if self.label == label:
            return new
        if label not in self.labels:
            raise UnknownVertexError(f"no vertex {label!r} in {self}")
        children = tuple(c.replace(label, new) if label in c.labels else c for c in self.children)
        return type(self)._make(self.label, self.weight, children)


_set = object.__setattr__


def _rebuild(cls, label, weight, children):
    return cls._make(label, weight, children)


class PlanarTree(Tree):
    """Rooted tree whose children carry a left-to-right order."""

    __slots__ = ()
    planar = True


class NonPlanarTree(Tree):
    """Rooted tree with unordered children, stored in canonical form.

    Children are sorted by their recursive key ``(weight, child keys, label)``.
    Labels are distinct, so the key is a total order and sorting is a
    canonical form.
    """

    __slots__ = ()
    planar = False

    def _init(self, label, weight, children):
        super()._init(label, weight, tuple(sorted(children, key=_key)))


def _key(t: Tree) -> tuple:
    return t.key


AnyTree = Union[PlanarTree, NonPlanarTree]

# raw nodes accepted by canonicalize: (label, children) or (label, weight, children)
RawNode = Union[Tree, tuple]


def canonicalize(t: RawNode) -> NonPlanarTree:
    """Canonical non-planar tree from a tree or a raw nested tuple."""
    if isinstance(t, NonPlanarTree):
        return t
    if isinstance(t, Tree):
        return NonPlanarTree(t.label, [canonicalize(c) for c in t.children], t.weight)
    if isinstance(t, str):
        return NonPlanarTree(t)
    if len(t) == 2:
        label, children = t
        weight = 1
    else:
        label, weight, children = t
    return NonPlanarTree(label, [canonicalize(c) for c in children], weight)


def forget_planarity(t: PlanarTree) -> NonPlanarTree:
    return canonicalize(t)


def with_weights(t: Tree, weights: Mapping[str, int]) -> Tree:
    """Same shape and labels, weights replaced (missing labels keep theirs)."""
    return type(t)(t.label, [with_weights(c, weights) for c in t.children], weights.get(t.label, t.weight))


def total_weight(t: Tree) -> int:
    return t.total_weight


def energy(t: Tree) -> int:
    """Potential energy: sum over vertices of weight times height."""
    # each edge contributes the weight of the branch above it
    return sum(energy(c) + c.total_weight for c in t.children)


def heights(t: Tree) -> dict[str, int]:
    out = {}
    stack = [(t, 0)]
    while stack:
        node, h = stack.pop()
        out[node.label] = h
        stack.extend((c, h + 1) for c in node.children)
    return out


def height(t: Tree, v: str) -> int:
    h = heights(t)
    if v not in h:
        raise UnknownVertexError(f"no vertex {v!r} in {t}")
    return h[v]


def branch_weight(t: Tree, e: EdgeRef) -> int:
    parent, child = e
    node = t.find(parent)
    for c in node.children:
        if c.label == child:
            return c.total_weight
    raise UnknownVertexError(f"no edge {parent}<-{child} in {t}")


def angles(t: PlanarTree) -> list[Angle]:
    """All corners of ``t`` in left-to-right (contour) order; 2n-1 of them."""
    out: list[Angle] = []

    def walk(node):
        for i, c in enumerate(node.children):
            out.append(Angle(node.label, i))
            walk(c)
        out.append(Angle(node.label, len(node.children)))

    walk(t)
    return out


def root_angles(t: PlanarTree) -> list[Angle]:
    return [Angle(t.label, i) for i in range(t.arity + 1)]


def incoming_edges(t: Tree, v: str) -> list[EdgeRef]:
    """Edges arriving at ``v`` from its children, in stored child order."""
    return [EdgeRef(v, c.label) for c in t.find(v).children]


def relabel(t: Tree, sigma: Mapping[str, str] | Callable[[str], str]) -> Tree:
    """Apply a label bijection (only its values on labels of ``t`` matter)."""
    f = sigma if callable(sigma) else sigma.__getitem__
    try:
        image = {lab: f(lab) for lab in t.labels}
    except KeyError as exc:
        raise UnknownVertexError(f"relabeling undefined on {exc.args[0]!r}") from None
    if len(set(image.values())) != len(image):
        raise DuplicateLabelError("relabeling is not injective on the labels of the tree")

    def go(node):
        return type(t)(image[node.label], [go(c) for c in node.children], node.weight)

    return go(t)
