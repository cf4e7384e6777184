"""Text, JSON and DOT forms of trees.

Tree grammar (whitespace is ignored between tokens)::

    tree  := label (":" uint)? ("[" tree ("," tree)* "]")?
    label := [A-Za-z][A-Za-z0-9_]*
"""

from __future__ import annotations

import json
from typing import Any

from .trees import DuplicateLabelError, NonPlanarTree, PlanarTree, Tree, TreeError

__all__ = [
    "TreeSyntaxError",
    "parse_tree",
    "format_tree",
    "tree_to_json",
    "tree_from_json",
    "tree_to_dot",
    "TreeScanner",
]


class TreeSyntaxError(TreeError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text[:pos]}<<HERE>>{text[pos:]}")
        self.text = text
        self.pos = pos


class TreeScanner:
    """Recursive-descent reader over a string; shared with the expression parser."""

    def __init__(self, text: str, pos: int = 0):
        self.text = text
        self.pos = pos

    def error(self, message: str) -> TreeSyntaxError:
        return TreeSyntaxError(message, self.text, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def at_end(self) -> bool:
        return self.peek() == ""

    def label(self) -> str:
        self.skip_ws()
        start = self.pos
        text = self.text
        if start < len(text) and text[start].isascii() and text[start].isalpha():
            self.pos += 1
            while self.pos < len(text) and (text[self.pos].isascii() and (text[self.pos].isalnum() or text[self.pos] == "_")):
                self.pos += 1
            return text[start : self.pos]
        raise self.error("expected a label")

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an unsigned integer")
        return int(self.text[start : self.pos])

    def tree(self, cls: type[Tree], default_weight: int = 1) -> Tree:
        seen: set[str] = set()

        def node():
            start = self.pos
            label = self.label()
            if label in seen:
                self.pos = start
                raise DuplicateLabelError(f"duplicate label {label!r} at position {start}")
            seen.add(label)
            weight = default_weight
            if self.peek() == ":":
                self.pos += 1
                wpos = self.pos
                weight = self.uint()
                if weight == 0:
                    self.pos = wpos
                    raise self.error(f"weight of {label!r} must be at least 1")
            children = []
            if self.peek() == "[":
                self.pos += 1
                children.append(node())
                while self.peek() == ",":
                    self.pos += 1
                    children.append(node())
                self.expect("]")
            return cls._make(label, weight, tuple(children))

        return node()


def parse_tree(text: str, mode: str = "nonplanar", default_weight: int = 1) -> Tree:
    """Parse ``text``; ``mode`` is ``"planar"`` or ``"nonplanar"``."""
    cls = _tree_class(mode)
    if default_weight < 1:
        raise TreeError("default weight must be at least 1")
    sc = TreeScanner(text)
    t = sc.tree(cls, default_weight)
    if not sc.at_end():
        raise sc.error("unexpected trailing input")
    return t


def _tree_class(mode: str) -> type[Tree]:
    if mode == "planar":
        return PlanarTree
    if mode == "nonplanar":
        return NonPlanarTree
    raise ValueError(f"mode must be 'planar' or 'nonplanar', not {mode!r}")


def format_tree(t: Tree, weights: bool = True) -> str:
    """Grammar form of ``t``.

    With ``weights=False`` the compact form ``a[b,c]`` is produced; it parses
    back to the same tree only when every weight is 1.
    """
    head = f"{t.label}:{t.weight}" if weights else t.label
    if not t.children:
        return head
    sep = ", " if weights else ","
    return head + "[" + sep.join(format_tree(c, weights) for c in t.children) + "]"


def tree_to_json(t: Tree) -> dict[str, Any]:
    return {"label": t.label, "weight": t.weight, "children": [tree_to_json(c) for c in t.children]}


def tree_from_json(data: dict[str, Any] | str, mode: str = "nonplanar") -> Tree:
    if isinstance(data, str):
        data = json.loads(data)
    cls = _tree_class(mode)

    def go(d):
        try:
            return cls(d["label"], [go(c) for c in d.get("children", [])], d.get("weight", 1))
        except (KeyError, TypeError) as exc:
            raise TreeError(f"malformed tree JSON: {exc}") from None

    return go(data)


def tree_to_dot(t: Tree, name: str = "T", graph_label: str | None = None) -> str:
    """DOT digraph; child order is kept via the ``order`` edge attribute."""
    lines = [f"digraph {name} {{"]
    if graph_label is not None:
        lines.append(f'  label="{graph_label}";')
    lines.append("  ordering=out;")
    for node in t.nodes():
        lines.append(f'  "{node.label}" [label="{node.label}:{node.weight}"];')
    for node in t.nodes():
        for i, c in enumerate(node.children):
            lines.append(f'  "{node.label}" -> "{c.label}" [order={i}];')
    lines.append("}")
    return "\n".join(lines)
