import random

import pytest


def tree_canonical(t, node=None):
    """Nested ``{head: (label, leaf, subtree)}`` form of a built tree, labels read via the oracle."""
    node = t.root if node is None else node
    return {
        k: (t.edge_label(c), c.leaf or None, tree_canonical(t, c))
        for k, c in node.children.items()
    }


def random_text(rng: random.Random, n: int, kind: str = "mixed") -> list[int]:
    if kind == "mixed":
        kind = rng.choice(["wide", "small", "binary", "constant", "wide", "small"])
    if kind == "wide":
        return [rng.randint(-10**9, 10**9) for _ in range(n)]
    if kind == "small":
        return [rng.randint(1, rng.randint(2, 6)) for _ in range(n)]
    if kind == "binary":
        return [rng.randint(0, 1) for _ in range(n)]
    if kind == "constant":
        return [7] * n
    if kind == "increasing":
        return list(range(n))
    if kind == "decreasing":
        return list(range(n, 0, -1))
    if kind == "periodic":
        period = [rng.randint(0, 9) for _ in range(rng.randint(1, 5))]
        return [period[i % len(period)] for i in range(n)]
    raise ValueError(kind)


def lcp(a, b) -> int:
    k = 0
    for p, q in zip(a, b):
        if p != q:
            break
        k += 1
    return k


@pytest.fixture
def rng():
    return random.Random(20131014)
