"""Brute-force reference implementations used as test oracles.

Everything here works straight from the definitions and deliberately
shares no code with the rest of the package. Nothing is fast.
"""
from __future__ import annotations

from typing import Hashable, Optional, Sequence


def naive_code(w: Sequence[int]) -> tuple[tuple[int, int], ...]:
    out = []
    for i in range(len(w)):
        lt = sum(1 for k in range(i) if w[k] < w[i])
        eq = sum(1 for k in range(i) if w[k] == w[i])
        out.append((lt, eq))
    return tuple(out)


def naive_iso(x: Sequence[int], y: Sequence[int]) -> bool:
    """Order-isomorphism checked over every index pair."""
    if len(x) != len(y):
        return False
    m = len(x)
    return all((x[i] <= x[j]) == (y[i] <= y[j]) for i in range(m) for j in range(m))


def naive_occurrences(w: Sequence[int], x: Sequence[int]) -> list[int]:
    m = len(x)
    return [p + 1 for p in range(len(w) - m + 1) if naive_iso(w[p:p + m], x)]


def naive_all_op_squares(w: Sequence[int]) -> list[tuple[int, int]]:
    """All ``(start, half)`` with equal-length isomorphic halves, sorted by (half, start)."""
    n = len(w)
    found = []
    for k in range(1, n // 2 + 1):
        for i in range(n - 2 * k + 1):
            if naive_iso(w[i:i + k], w[i + k:i + 2 * k]):
                found.append((i + 1, k))
    return found


def naive_non_extendible(w: Sequence[int]) -> list[tuple[int, int]]:
    """Op-squares whose halves stop being isomorphic when both grow by one."""
    n = len(w)
    out = []
    for i, k in naive_all_op_squares(w):
        s = i - 1
        if s + 2 * k == n or not naive_iso(w[s:s + k + 1], w[s + k:s + 2 * k + 1]):
            out.append((i, k))
    return out


class TrieNode:
    __slots__ = ("label", "children", "leaf", "depth")

    def __init__(self, label: tuple = (), depth: int = 0):
        self.label = label
        self.children: dict = {}
        self.leaf: Optional[int] = None
        self.depth = depth

    def canonical(self):
        """Order-independent nested form: ``{head: (label, leaf, subtree)}``."""
        return {k: (c.label, c.leaf, c.canonical()) for k, c in self.children.items()}

    def count(self) -> int:
        return 1 + sum(c.count() for c in self.children.values())


def naive_compacted_trie(rows: Sequence[Sequence[Hashable]]) -> TrieNode:
    """Insert rows char by char into an uncompacted trie, then merge unary chains.

    Leaves are labelled 1..len(rows) in row order. ``depth`` counts
    characters from the root, the row's final symbol included.
    """
    root = TrieNode()
    for idx, row in enumerate(rows, start=1):
        node = root
        for ch in row:
            if node.leaf is not None:
                raise ValueError(f"row {node.leaf} is a prefix of row {idx}")
            node = node.children.setdefault(ch, TrieNode((ch,), node.depth + 1))
        if node.children or node.leaf is not None:
            raise ValueError(f"row {idx} is a prefix of another row")
        node.leaf = idx
    stack = [root]
    while stack:
        node = stack.pop()
        for key, child in list(node.children.items()):
            while len(child.children) == 1 and child.leaf is None:
                (grand,) = child.children.values()
                grand.label = child.label + grand.label
                child = grand
            node.children[key] = child
            stack.append(child)
    return root
