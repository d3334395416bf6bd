import io
import json

import pytest

from conftest import random_text, tree_canonical
from opstree import serialize
from opstree.tree import build_tree


def roundtrip(t):
    buf = io.StringIO()
    serialize.dump(t, buf)
    buf.seek(0)
    return serialize.load(buf), buf.getvalue()


def test_roundtrip_random(rng):
    for _ in range(20):
        w = random_text(rng, rng.randint(1, 80))
        t = build_tree(w)
        back, raw = roundtrip(t)
        assert tree_canonical(back) == tree_canonical(t)
        assert serialize.to_dict(back) == serialize.to_dict(t)
        x = w[:3]
        assert back.occurrences(x) == t.occurrences(x)
        assert back.lca_depth(1, len(w)) == t.lca_depth(1, len(w))
        back.check()


def test_header():
    t = build_tree((3, 1, 2))
    data = json.loads(roundtrip(t)[1])
    assert data["format"] == "opstree-index"
    assert data["version"] == 1
    assert data["n"] == 3
    assert data["nodes"][0][:3] == [0, -1, None]
    assert sorted(label for label, _ in data["leaves"]) == [1, 2, 3]
    assert any(row[2] == "#" for row in data["nodes"])


@pytest.mark.parametrize("patch", [
    {"format": "other"},
    {"version": 99},
    {"n": 7},
])
def test_rejects_bad_header(patch):
    data = serialize.to_dict(build_tree((3, 1, 2)))
    data.update(patch)
    with pytest.raises(ValueError):
        serialize.from_dict(data)


def test_rejects_incomplete_leaves():
    data = serialize.to_dict(build_tree((3, 1, 2)))
    data["leaves"] = data["leaves"][:-1]
    with pytest.raises(ValueError):
        serialize.from_dict(data)
