import itertools

import pytest

from opstree import refkit
from opstree.refkit import (
    naive_all_op_squares,
    naive_code,
    naive_compacted_trie,
    naive_iso,
    naive_occurrences,
)


def test_refkit_is_standalone():
    src = open(refkit.__file__).read()
    assert "from ." not in src and "import opstree" not in src


def test_naive_code():
    assert naive_code((5, 2, 7, 5, 1, 4, 9, 4, 5)) == (
        (0, 0), (0, 0), (2, 0), (1, 1), (0, 0), (2, 0), (6, 0), (2, 1), (4, 2))
    assert naive_code(()) == ()


def test_naive_iso():
    assert naive_iso((5, 2, 7, 5, 1, 4, 9, 4, 5), (6, 4, 7, 6, 3, 5, 8, 5, 6))
    assert naive_iso((3, 1), (3, 1))
    assert not naive_iso((1, 2, 2), (1, 2, 3))


def test_naive_iso_agrees_with_naive_code():
    for m in range(7):
        words = list(itertools.product((1, 2, 3), repeat=m))
        codes = {x: naive_code(x) for x in words}
        for x in words:
            for y in words:
                assert naive_iso(x, y) == (codes[x] == codes[y])


def test_naive_occurrences():
    w = (6, 8, 2, 0, 7, 9, 3, 1, 4, 5)
    assert naive_occurrences(w, (1, 2, 3)) == [4, 8]
    assert naive_occurrences(w, w + (1,)) == []
    assert naive_occurrences(w, (3,)) == list(range(1, 11))


def test_naive_squares():
    assert naive_all_op_squares((1, 2, 1, 2)) == [(1, 1), (2, 1), (3, 1), (1, 2)]
    assert naive_all_op_squares((1,)) == []
    assert naive_all_op_squares((1, 1)) == [(1, 1)]


def test_naive_trie():
    root = naive_compacted_trie([("a", "b", "$"), ("b", "$")])
    assert set(root.children) == {"a", "b"}
    assert root.children["a"].label == ("a", "b", "$")
    assert root.children["a"].leaf == 1
    assert root.count() == 3
    one = naive_compacted_trie([("x", "y")])
    assert len(one.children) == 1 and one.children["x"].label == ("x", "y")


def test_naive_trie_rejects_prefix_rows():
    with pytest.raises(ValueError):
        naive_compacted_trie([("a", "b"), ("a",)])
    with pytest.raises(ValueError):
        naive_compacted_trie([("a",), ("a", "b")])
