"""Character oracle: suffix codes by orthogonal range counting.

The text ``w`` is viewed as the point set ``{(i, w_i)}``. The code of
absolute position ``i`` inside the suffix starting at ``j`` counts the
points in ``[j, i-1] x (-inf, w_i)`` and ``[j, i-1] x [w_i, w_i]``.

Counting is done with a wavelet matrix over rank-compressed values:
O(n log sigma) build, O(log sigma) per query, one descent answering
both counts at once. Ranges shorter than about two descents are
counted directly.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from itertools import accumulate
from typing import Optional, Sequence

from .codes import CharCode


class CharacterOracle:
    """Static 2-D counting structure over the points ``(i, w_i)``.

    Attributes:
        n: text length.
        calls: number of :meth:`suffix_char_code` queries answered so far
            (including those made internally by tree construction).
    """

    def __init__(self, w: Sequence[int]):
        self.text = tuple(w)
        self.n = len(self.text)
        self.values = sorted(set(self.text))
        self.ranks = [bisect_left(self.values, v) for v in self.text]
        self.calls = 0
        self._build()

    def _build(self) -> None:
        sigma = len(self.values)
        self.levels = max(1, (sigma - 1).bit_length())
        # per level: (zeros, total zeros, bit); zeros[p] counts 0-bits in slots [0, p)
        self._plan: list[tuple[list[int], int, int]] = []
        cur = self.ranks
        for l in range(self.levels):
            bit = 1 << (self.levels - 1 - l)
            zero_flags = [0 if v & bit else 1 for v in cur]
            prefix = [0]
            prefix.extend(accumulate(zero_flags))
            self._plan.append((prefix, prefix[-1], bit))
            cur = [v for v, z in zip(cur, zero_flags) if z] + [
                v for v, z in zip(cur, zero_flags) if not z
            ]

    def _descend(self, a: int, b: int, r: int) -> tuple[int, int]:
        """Counts ``(< r, == r)`` among ranks at 0-based slots ``[a, b)``."""
        lt = 0
        for zeros, nzero, bit in self._plan:
            za = zeros[a]
            zb = zeros[b]
            if r & bit:
                lt += zb - za
                a += nzero - za
                b += nzero - zb
            else:
                a = za
                b = zb
        return lt, b - a

    def _scan(self, a: int, b: int, r: int) -> tuple[int, int]:
        lt = eq = 0
        for v in self.ranks[a:b]:
            if v < r:
                lt += 1
            elif v == r:
                eq += 1
        return lt, eq

    def _count_below(self, a: int, b: int, r: int) -> int:
        if b <= a or r <= 0:
            return 0
        if r >= len(self.values):
            return b - a
        return self._descend(a, b, r)[0]

    def count_in_rect(
        self,
        x1: int,
        x2: int,
        ylo: Optional[int] = None,
        yhi: Optional[int] = None,
    ) -> int:
        """Number of points with ``x1 <= i <= x2`` and ``ylo <= w_i <= yhi``.

        ``None`` for a value bound means unbounded on that side. Positions
        are clamped to ``1..n``; an empty range yields 0.
        """
        a = max(x1, 1) - 1
        b = min(x2, self.n)
        if b <= a:
            return 0
        lo = 0 if ylo is None else bisect_left(self.values, ylo)
        hi = len(self.values) if yhi is None else bisect_right(self.values, yhi)
        if hi <= lo:
            return 0
        return self._count_below(a, b, hi) - self._count_below(a, b, lo)

    def _phi(self, j: int, i: int) -> tuple[int, int]:
        # unchecked fast path; 1 <= j <= i <= n
        self.calls += 1
        if i == j:
            return (0, 0)
        # short ranges: a linear scan beats one step per level
        if i - j <= 2 * self.levels:
            return self._scan(j - 1, i - 1, self.ranks[i - 1])
        return self._descend(j - 1, i - 1, self.ranks[i - 1])

    def suffix_char_code(self, j: int, i: int) -> CharCode:
        """Code of absolute position ``i`` within the suffix starting at ``j``."""
        if not 1 <= j <= i <= self.n:
            raise IndexError(f"need 1 <= j <= i <= {self.n}, got j={j}, i={i}")
        return CharCode(*self._phi(j, i))


def build_oracle(w: Sequence[int]) -> CharacterOracle:
    return CharacterOracle(w)
