from __future__ import annotations

import json

import pytest

from treeoperads.enumeration import enumerate_planar, enumerate_weightings
from treeoperads.syntax import (
    TreeSyntaxError,
    format_tree,
    parse_tree,
    tree_from_json,
    tree_to_dot,
    tree_to_json,
)
from treeoperads.trees import DuplicateLabelError


def test_parse_default_weight():
    t = parse_tree("a")
    assert (t.label, t.weight) == ("a", 1)


def test_parse_planar_children_in_order():
    t = parse_tree("a:1[b:2, c:1]", "planar")
    assert [(c.label, c.weight) for c in t.children] == [("b", 2), ("c", 1)]


def test_format():
    assert format_tree(parse_tree("a")) == "a:1"
    assert format_tree(parse_tree("a:1[b:2, c:1]", "planar")) == "a:1[b:2, c:1]"
    assert format_tree(parse_tree("a[c,b]")) == format_tree(parse_tree("a[b, c]"))
    assert format_tree(parse_tree("a[b[c],d]", "planar"), weights=False) == "a[b[c],d]"


def test_default_weight_argument():
    assert parse_tree("a[b:3]", default_weight=2).weights() == {"a": 2, "b": 3}


@pytest.mark.parametrize(
    "bad", ["", "a[", "a[b,]", "a]", "a[b] c", "a:0", "a:x", "1", "a[b,,c]", "a:-2"]
)
def test_syntax_errors(bad):
    with pytest.raises(TreeSyntaxError):
        parse_tree(bad)


def test_duplicate_label_in_text():
    with pytest.raises(DuplicateLabelError, match="position 2"):
        parse_tree("a[a]")


def test_error_reports_position():
    with pytest.raises(TreeSyntaxError, match="position"):
        parse_tree("a[b c]")


def test_round_trip_text_and_json():
    for t in enumerate_planar(["a", "b", "c"]):
        for w in enumerate_weightings(t, 5):
            assert parse_tree(format_tree(w), "planar") == w
            assert tree_from_json(json.dumps(tree_to_json(w)), "planar") == w


def test_json_schema():
    assert tree_to_json(parse_tree("a[b:2]")) == {
        "label": "a",
        "weight": 1,
        "children": [{"label": "b", "weight": 2, "children": []}],
    }


def test_dot_single_vertex():
    dot = tree_to_dot(parse_tree("a"))
    assert dot.startswith("digraph")
    assert '"a"' in dot and "->" not in dot


def test_dot_edge_order():
    dot = tree_to_dot(parse_tree("a[b,c]", "planar"))
    assert '"a" -> "b" [order=0];' in dot
    assert '"a" -> "c" [order=1];' in dot
    assert "ordering=out" in dot
