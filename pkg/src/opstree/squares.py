"""Order-preserving squares.

An op-square ``(i, k)`` is the factor ``w[i..i+2k-1]`` whose two halves
are order-isomorphic. The halves agree iff the leaves of suffixes ``i``
and ``i+k`` meet at depth at least ``k``. When they meet at depth exactly
``k`` the square cannot be extended to the right; those squares are
found per branching node and every other square is reached from one of
them by shifting left.
"""
from __future__ import annotations

from typing import NamedTuple

from .tree import SuffixTree


class OpSquare(NamedTuple):
    start: int
    half: int

    @property
    def length(self) -> int:
        return 2 * self.half


def _order(squares) -> list[OpSquare]:
    return sorted((OpSquare(i, k) for i, k in squares), key=lambda sq: (sq.half, sq.start))


def is_op_square(t: SuffixTree, i: int, k: int) -> bool:
    """True iff ``w[i..i+2k-1]`` has order-isomorphic halves (O(1))."""
    if k < 1 or i < 1 or i + 2 * k - 1 > t.n:
        raise IndexError(f"no square of half-length {k} at {i} in a text of length {t.n}")
    return t.lca_depth(i, i + k) >= k


def non_extendible_squares(t: SuffixTree) -> list[OpSquare]:
    """All ``(i, k)`` whose suffix leaves ``i`` and ``i+k`` meet at depth exactly ``k``.

    For each branching node of depth ``d`` only leaves of the non-largest
    children are enumerated, looking for a partner ``d`` positions away
    elsewhere under the same node. Each leaf is enumerated O(log n) times.
    """
    t._require_final()
    n = t.n
    rank = t.leaf_rank
    order = t.leaf_order
    found = set()
    for v in t.nodes:
        d = v.depth
        if v.leaf or d == 0 or len(v.children) < 2:
            continue
        kids = list(v.children.values())
        biggest = max(kids, key=lambda c: c.hi - c.lo)
        for c in kids:
            if c is biggest:
                continue
            for s in order[c.lo:c.hi]:
                for other in (s - d, s + d):
                    if 1 <= other <= n:
                        r = rank[other]
                        if v.lo <= r < v.hi and not c.lo <= r < c.hi:
                            found.add((min(s, other), d))
    return _order(found)


class SquareLengthIndex:
    """Constant-time lookup of which square lengths occur in a text.

    Indexed by half-length ``k`` in ``1..n//2``.
    """

    def __init__(self, n: int, halves):
        self.n = n
        self.max_half = n // 2
        self.present = [False] * (self.max_half + 1)
        for k in halves:
            self.present[k] = True

    def __getitem__(self, k: int) -> bool:
        if not 1 <= k <= self.max_half:
            raise IndexError(f"half-length {k} outside 1..{self.max_half}")
        return self.present[k]

    def has_length(self, length: int) -> bool:
        """Whether a square of total length ``length`` occurs; odd lengths never do."""
        if length % 2 or length < 2:
            raise ValueError("square length must be even and at least 2")
        return length // 2 <= self.max_half and self.present[length // 2]

    def halves(self) -> list[int]:
        return [k for k in range(1, self.max_half + 1) if self.present[k]]


def square_length_index(t: SuffixTree) -> SquareLengthIndex:
    # every length that occurs at all occurs as a non-extendible square
    return SquareLengthIndex(t.n, {sq.half for sq in non_extendible_squares(t)})


def all_op_squares(t: SuffixTree) -> list[OpSquare]:
    """Every op-square, sorted by ``(half, start)``.

    Each non-extendible square is shifted left for as long as it stays a
    square; a chain stops early on reaching a square already collected.
    """
    seen = set()
    for i, k in non_extendible_squares(t):
        if (i, k) in seen:
            continue
        seen.add((i, k))
        j = i - 1
        while j >= 1 and (j, k) not in seen and t.lca_depth(j, j + k) >= k:
            seen.add((j, k))
            j -= 1
    return _order(seen)
