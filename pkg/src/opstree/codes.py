"""Order-preserving codes and shapes of integer sequences.

Positions are 1-based throughout the public API. A sequence is any
indexable collection of ints; values need not be distinct.
"""
from __future__ import annotations

from bisect import bisect_left
from typing import NamedTuple, Sequence


class CharCode(NamedTuple):
    """Code of one position: counts of strictly smaller / equal earlier values."""

    lt: int
    eq: int

    def __str__(self) -> str:
        return f"({self.lt},{self.eq})"


class InvalidCodeError(ValueError):
    """Raised when a code sequence cannot belong to any integer sequence."""


def phi(w: Sequence[int], i: int) -> CharCode:
    """Return the code of position ``i`` (1-based) of ``w`` by direct counting."""
    if not 1 <= i <= len(w):
        raise IndexError(f"position {i} out of range 1..{len(w)}")
    v = w[i - 1]
    lt = eq = 0
    for k in range(i - 1):
        if w[k] < v:
            lt += 1
        elif w[k] == v:
            eq += 1
    return CharCode(lt, eq)


class _Fenwick:
    __slots__ = ("tree",)

    def __init__(self, size: int):
        self.tree = [0] * (size + 1)

    def add(self, pos: int) -> None:
        tree = self.tree
        pos += 1
        while pos < len(tree):
            tree[pos] += 1
            pos += pos & -pos

    def prefix(self, pos: int) -> int:
        """Sum over slots ``0..pos-1``."""
        tree = self.tree
        total = 0
        while pos > 0:
            total += tree[pos]
            pos -= pos & -pos
        return total


def code(w: Sequence[int]) -> tuple[CharCode, ...]:
    """Return ``(phi(w, 1), ..., phi(w, n))`` in O(n log n)."""
    if not w:
        return ()
    values = sorted(set(w))
    ranks = [bisect_left(values, v) for v in w]
    seen = _Fenwick(len(values))
    counts = [0] * len(values)
    out = []
    for r in ranks:
        out.append(CharCode(seen.prefix(r), counts[r]))
        seen.add(r)
        counts[r] += 1
    return tuple(out)


def shape(w: Sequence[int]) -> tuple[int, ...]:
    """Rank-compact ``w``: each value becomes the number of distinct smaller values."""
    values = sorted(set(w))
    rank = {v: r for r, v in enumerate(values)}
    return tuple(rank[v] for v in w)


def shape_from_code(c: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    """Reconstruct the shape of a sequence from its code alone.

    Peels off one value class at a time. The first occurrence of the
    current minimum is the rightmost remaining ``(0, 0)``; every later
    ``(0, z)`` repeats that minimum. Those positions get the current rank,
    are removed, and each surviving element's ``lt`` drops by the number
    of removed positions to its left. Quadratic; meant for verification.

    Raises:
        InvalidCodeError: if ``c`` is not the code of any sequence.
    """
    if not c:
        return ()
    if tuple(c[0]) != (0, 0):
        raise InvalidCodeError("code must start with (0,0)")
    lt = [int(a) for a, _ in c]
    eq = [int(b) for _, b in c]
    alive = list(range(len(c)))
    result = [0] * len(c)
    rank = 0
    while alive:
        start = None
        for idx in range(len(alive) - 1, -1, -1):
            p = alive[idx]
            if lt[p] == 0 and eq[p] == 0:
                start = idx
                break
        if start is None:
            raise InvalidCodeError(f"no (0,0) left while assigning rank {rank}")
        taken = [alive[start]]
        for p in alive[start + 1:]:
            if lt[p] == 0:
                if eq[p] != len(taken):
                    raise InvalidCodeError(f"inconsistent tie count at position {p + 1}")
                taken.append(p)
        removed = set(taken)
        survivors = []
        passed = 0
        for p in alive:
            if p in removed:
                result[p] = rank
                passed += 1
            else:
                lt[p] -= passed
                if lt[p] < 0:
                    raise InvalidCodeError(f"negative count at position {p + 1}")
                survivors.append(p)
        alive = survivors
        rank += 1
    return tuple(result)


def is_order_isomorphic(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff ``x`` and ``y`` have equal length and identical codes."""
    return len(x) == len(y) and code(x) == code(y)
