from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from gcx import catalog
from gcx.exactnum import GaussRational, parse_scalar
from gcx.report import (
    classification_tree, dump, dump_text, dump_tree, eigen_tree, gacs_tree, load_text, load_tree, normalize,
)
from gcx.structures import Gacs, classify, eigenbundles
from helpers import scalars

keys = st.from_regex(r"[A-Za-z_][A-Za-z0-9_()*+,\-]{0,8}", fullmatch=True)
texts = st.from_regex(r"[A-Za-z0-9/+*^()\[\], =-]{1,20}", fullmatch=True)
leaves = st.one_of(texts, st.booleans(), st.none(), st.integers(-50, 50), scalars)

trees = st.recursive(
    st.dictionaries(keys, leaves, max_size=4),
    lambda inner: st.dictionaries(
        keys, st.one_of(leaves, inner, st.lists(st.one_of(texts, inner), max_size=3)), max_size=4),
    max_leaves=20,
)


@given(trees)
def test_text_roundtrip(tree):
    assert load_text(dump_text(tree)) == normalize(tree)


@given(trees)
def test_json_roundtrip_and_stability(tree):
    assert load_tree(dump_tree(tree)) == normalize(tree)
    assert dump(tree) == dump(tree) == dump_text(tree)
    assert dump(tree, "json-like-tree") == dump_tree(tree)


@given(scalars)
def test_scalars_print_exactly(z: GaussRational):
    leaf = normalize({"z": z})["z"]
    assert "." not in leaf and "e+" not in leaf
    assert parse_scalar(leaf) == z


def test_catalog_reports_roundtrip():
    for name in sorted(catalog.ENTRIES):
        obj = catalog.build(name)
        if not isinstance(obj, Gacs):
            continue
        tree = {
            "structure": gacs_tree(obj),
            "classification": classification_tree(classify(obj)),
            "spans": eigen_tree(eigenbundles(obj)),
        }
        text = dump_text(tree)
        assert load_text(text) == normalize(tree)
        assert load_tree(dump_tree(tree)) == normalize(tree)


def test_leaf_formatting():
    assert normalize({"a": True, "b": False, "c": None, "d": "", "e": "x  y"}) == {
        "a": "true", "b": "false", "c": "none", "d": "-", "e": "x y"}
    assert dump_text({"empty": {}, "none": [], "k": ["a", {"b": "c"}]}) == (
        "empty: {}\nnone: []\nk:\n  - a\n  -\n    b: c\n")
