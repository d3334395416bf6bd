"""Order-preserving suffix tree.

The tree is the compacted trie of the terminated suffix codes
``code(w[i..n]) + #`` for ``i = 1..n``. Edges store only their first
code character; every other character is re-read through the
:class:`~opstree.oracle.CharacterOracle` using a leaf below the edge.

Construction follows McCreight: suffixes are inserted longest first,
each insertion starting from the suffix link of the previous head.
Suffix codes are not suffixes of a single code string, so a link may
point into the middle of an edge. Links are kept as :class:`Locus`
values and re-normalized when read.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from .codes import CharCode, code
from .oracle import CharacterOracle, build_oracle


class _Terminator:
    __slots__ = ()

    def __repr__(self) -> str:
        return "#"

    def __reduce__(self):
        return "TERMINATOR"


TERMINATOR = _Terminator()
"""End-of-suffix symbol; unequal to every :class:`CharCode`."""

EdgeHead = Union[CharCode, tuple, _Terminator]


def head_order(head: EdgeHead) -> tuple[int, int, int]:
    """Sort key for edge heads: ``(lt, eq)`` ascending, terminator last."""
    if head is TERMINATOR:
        return (1, 0, 0)
    return (0, head[0], head[1])


class TreeNotFinalizedError(RuntimeError):
    pass


class Node:
    __slots__ = ("id", "depth", "parent", "children", "link", "suffix", "leaf",
                 "lo", "hi")

    def __init__(self, id: int, depth: int, parent: Optional[Node], suffix: int,
                 leaf: int = 0):
        self.id = id
        # number of code characters from the root; a leaf edge carries one more (#)
        self.depth = depth
        self.parent = parent
        self.children: dict = {}
        self.link: Optional[Locus] = None
        # some suffix whose path runs through this node; the smallest one after finalize
        self.suffix = suffix
        self.leaf = leaf
        self.lo = self.hi = 0

    @property
    def is_leaf(self) -> bool:
        return self.leaf > 0

    def __repr__(self) -> str:
        kind = f"leaf {self.leaf}" if self.leaf else "node"
        return f"<{kind} #{self.id} depth={self.depth}>"


@dataclass(frozen=True)
class Locus:
    """A position in the tree spelling some code prefix.

    ``node`` is the explicit node at the position, or the lower endpoint
    of the edge containing it. For implicit positions ``parent`` and
    ``head`` identify that edge and ``offset`` (at least 1, less than the
    edge length) is the distance below ``parent``.
    """

    node: int
    depth: int
    parent: Optional[int] = None
    head: Optional[EdgeHead] = None
    offset: int = 0

    @property
    def is_explicit(self) -> bool:
        return self.parent is None


class SuffixTree:
    """Order-preserving suffix tree of an integer sequence.

    Use :func:`build_tree` (or :meth:`SuffixTree.build`) to construct one.
    """

    def __init__(self, w: Sequence[int], oracle: CharacterOracle):
        self.text = tuple(w)
        self.n = len(self.text)
        self.oracle = oracle
        self.nodes: list[Node] = []
        self.leaves: list[Optional[Node]] = [None] * (self.n + 1)
        self.root = self._new_node(0, None, 0)
        self.finalized = False

    @classmethod
    def build(cls, w: Sequence[int]) -> SuffixTree:
        return build_tree(w, build_oracle(w))

    # -- characters ---------------------------------------------------------

    def char(self, s: int, d: int) -> EdgeHead:
        """Character ``d`` (0-based) of the terminated code of suffix ``s``."""
        if d == self.n - s + 1:
            return TERMINATOR
        return self.oracle._phi(s, s + d)

    def edge_label(self, node: Node) -> tuple:
        """Full label of the edge entering ``node``, read through the oracle."""
        end = node.depth + 1 if node.leaf else node.depth
        return tuple(self.char(node.suffix, d) for d in range(node.parent.depth, end))

    def _new_node(self, depth: int, parent: Optional[Node], suffix: int,
                  leaf: int = 0) -> Node:
        node = Node(len(self.nodes), depth, parent, suffix, leaf)
        self.nodes.append(node)
        return node

    # -- construction -------------------------------------------------------

    def _normalize(self, locus: Locus) -> tuple[Node, int]:
        # edges may have been split since the link was stored
        x = self.nodes[locus.node]
        d = locus.depth
        while x.parent is not None and x.parent.depth >= d:
            x = x.parent
        return x, d

    def _rescan(self, x: Node, d: int, s: int, target: int) -> Node:
        """Skip/count from position ``(x, d)`` down to depth ``target`` along suffix ``s``.

        The path is known to exist, so only edge heads are compared.
        """
        while x.depth < target:
            x = x.children[self.char(s, x.depth)]
        return x

    def _insert(self, x: Node, d: int, s: int) -> tuple[Node, bool]:
        """Scan suffix ``s`` from position ``(x, d)`` and hang its leaf.

        Returns the node the new leaf hangs from and whether it was created.
        """
        char = self.char
        while True:
            if d == x.depth and not x.leaf:
                key = char(s, d)
                child = x.children.get(key)
                if child is None:
                    self._attach_leaf(x, key, s)
                    return x, False
                x = child
                d += 1
                continue
            end = x.depth + 1 if x.leaf else x.depth
            witness = x.suffix
            while d < end:
                theirs = char(witness, d)
                ours = char(s, d)
                if theirs != ours:
                    mid = self._split(x, d, theirs)
                    self._attach_leaf(mid, ours, s)
                    return mid, True
                d += 1

    def _split(self, x: Node, d: int, lower_head: EdgeHead) -> Node:
        parent = x.parent
        mid = self._new_node(d, parent, x.suffix)
        upper_head = self.char(x.suffix, parent.depth)
        parent.children[upper_head] = mid
        mid.children[lower_head] = x
        x.parent = mid
        return mid

    def _attach_leaf(self, parent: Node, key: EdgeHead, s: int) -> Node:
        leaf = self._new_node(self.n - s + 1, parent, s, leaf=s)
        parent.children[key] = leaf
        self.leaves[s] = leaf
        return leaf

    def _construct(self) -> None:
        root = self.root
        head, fresh = self._insert(root, 0, 1)
        for s in range(2, self.n + 1):
            if head is root:
                x, d = root, 0
            elif not fresh:
                x, d = self._follow(head)
            else:
                p = head.parent
                if p is root:
                    x, d = root, 0
                else:
                    x, d = self._follow(p)
                target = head.depth - 1
                x = self._rescan(x, d, s, target)
                d = target
                head.link = self._locus(x, d)
            head, fresh = self._insert(x, d, s)
        if fresh and head.depth == 1:
            head.link = self._locus(root, 0)

    def _locus(self, x: Node, d: int) -> Locus:
        if d == x.depth and not x.leaf:
            return Locus(x.id, d)
        p = x.parent
        head = self.char(x.suffix, p.depth)
        if head is not TERMINATOR:
            head = CharCode(*head)
        return Locus(x.id, d, p.id, head, d - p.depth)

    def _follow(self, node: Node) -> tuple[Node, int]:
        x, d = self._normalize(node.link)
        if x.id != node.link.node:
            node.link = self._locus(x, d)
        return x, d

    # -- finalization -------------------------------------------------------

    def finalize(self) -> None:
        """Fix leaf witnesses, DFS leaf order and the LCA index."""
        order: list[int] = []
        euler: list[int] = []
        first = [0] * len(self.nodes)
        stack: list[tuple[Node, Iterator[Node]]] = [(self.root, self._sorted_children(self.root))]
        euler.append(self.root.id)
        self.root.lo = 0
        while stack:
            node, it = stack[-1]
            child = next(it, None)
            if child is None:
                stack.pop()
                node.hi = len(order)
                if node.leaf:
                    node.suffix = node.leaf
                else:
                    node.suffix = min(c.suffix for c in node.children.values())
                if stack:
                    euler.append(stack[-1][0].id)
                continue
            child.lo = len(order)
            if child.leaf:
                order.append(child.leaf)
            first[child.id] = len(euler)
            euler.append(child.id)
            stack.append((child, self._sorted_children(child)))
        self.leaf_order = order
        self.leaf_rank = [0] * (self.n + 1)
        for r, s in enumerate(order):
            self.leaf_rank[s] = r
        self._first = first
        depth = np.fromiter((nd.depth for nd in self.nodes), dtype=np.int64,
                            count=len(self.nodes))
        euler_depth = depth[np.asarray(euler, dtype=np.int64)]
        self._euler = euler
        self._euler_depth = euler_depth.tolist()
        self._sparse = _sparse_table(euler_depth)
        self.finalized = True

    def _sorted_children(self, node: Node) -> Iterator[Node]:
        return iter([node.children[k] for k in sorted(node.children, key=head_order)])

    def children(self, node: Node) -> list[tuple[EdgeHead, Node]]:
        """Children of ``node`` in ascending edge-head order."""
        return [(k if k is TERMINATOR else CharCode(*k), node.children[k])
                for k in sorted(node.children, key=head_order)]

    # -- queries ------------------------------------------------------------

    def _require_final(self) -> None:
        if not self.finalized:
            raise TreeNotFinalizedError("call finalize() first")

    def lca(self, i: int, j: int) -> Node:
        """Lowest common ancestor of the leaves of suffixes ``i`` and ``j``."""
        self._require_final()
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"leaf ids must lie in 1..{self.n}")
        a = self._first[self.leaves[i].id]
        b = self._first[self.leaves[j].id]
        if a > b:
            a, b = b, a
        k = (b - a + 1).bit_length() - 1
        row = self._sparse[k]
        u, v = row[a], row[b - (1 << k) + 1]
        best = u if self._euler_depth[u] <= self._euler_depth[v] else v
        return self.nodes[self._euler[best]]

    def lca_depth(self, i: int, j: int) -> int:
        """Length of the longest common code prefix of suffixes ``i`` and ``j``."""
        return self.lca(i, j).depth

    def _pattern_chars(self, x: Sequence[int]):
        po = build_oracle(x)
        return lambda d: po._phi(1, d + 1)

    def find_locus(self, x: Sequence[int]) -> Optional[Locus]:
        """Locus spelling ``code(x)``, or ``None`` if ``x`` matches no factor.

        Pattern characters come from an oracle built over ``x``; text
        characters inside an edge are read through the edge's leaf
        witness. The pattern never consumes the terminator.
        """
        m = len(x)
        if m == 0:
            raise ValueError("pattern must be non-empty")
        if m > self.n:
            return None
        pchar = self._pattern_chars(x)
        node = self.root
        d = 0
        while d < m:
            child = node.children.get(pchar(d))
            if child is None:
                return None
            d += 1
            end = min(child.depth, m)
            s = child.suffix
            while d < end:
                if self.char(s, d) != pchar(d):
                    return None
                d += 1
            if d == m:
                return self._locus(child, d)
            if child.leaf:
                return None
            node = child
        return self._locus(node, d)

    def occurrences(self, x: Sequence[int]) -> list[int]:
        """All 1-based ``p`` with ``w[p..p+m-1]`` order-isomorphic to ``x``, ascending."""
        self._require_final()
        locus = self.find_locus(x)
        if locus is None:
            return []
        below = self.nodes[locus.node]
        return sorted(self.leaf_order[below.lo:below.hi])

    def contains(self, x: Sequence[int]) -> bool:
        return self.find_locus(x) is not None

    # -- introspection ------------------------------------------------------

    @property
    def internal_count(self) -> int:
        return len(self.nodes) - self.n

    def max_internal_depth(self) -> int:
        return max((nd.depth for nd in self.nodes if not nd.leaf), default=0)

    def path_label(self, s: int) -> tuple:
        """Concatenated edge labels from the root to leaf ``s``."""
        path = []
        node = self.leaves[s]
        while node.parent is not None:
            path.append(self.edge_label(node))
            node = node.parent
        return tuple(c for label in reversed(path) for c in label)

    def check(self) -> None:
        """Assert the structural invariants; for tests and debugging."""
        assert sum(1 for nd in self.nodes if nd.leaf) == self.n
        for nd in self.nodes:
            if nd.parent is not None:
                # a leaf edge also carries the terminator
                assert nd.depth + (1 if nd.leaf else 0) > nd.parent.depth
                if not nd.leaf:
                    assert len(nd.children) >= 2, nd
            for key, child in nd.children.items():
                assert child.parent is nd
                assert self.char(child.suffix, nd.depth) == key


def _sparse_table(values: np.ndarray) -> list[array]:
    """Range-minimum table of argmin indices over ``values``."""
    idx = np.arange(len(values), dtype=np.int64)
    table = [idx]
    span = 1
    while 2 * span <= len(values):
        prev = table[-1]
        left = prev[: len(prev) - span]
        right = prev[span:]
        table.append(np.where(values[left] <= values[right], left, right))
        span *= 2
    return [array("q", row.astype(np.int64).tobytes()) for row in table]


def suf_codes(w: Sequence[int]) -> list[tuple]:
    """Materialized terminated suffix codes ``code(w[i..n]) + #``, ``i = 1..n``."""
    if not w:
        raise ValueError("sequence must be non-empty")
    return [code(w[i:]) + (TERMINATOR,) for i in range(len(w))]


def _content(row: Sequence) -> Sequence:
    return row[:-1] if row and row[-1] is TERMINATOR else row


def _lcp(a: Sequence, b: Sequence) -> int:
    k = 0
    for p, q in zip(a, b):
        if p != q:
            break
        k += 1
    return k


def validate_quasi_suffix(rows: Sequence[Sequence]) -> bool:
    """Check the three quasi-suffix collection conditions.

    Lengths are taken without a trailing terminator; prefix-freeness and
    the shifted common-prefix condition use the rows as given.
    """
    n = len(rows)
    if n == 0:
        return True
    lengths = [len(_content(r)) for r in rows]
    if lengths[0] != n:
        return False
    if any(lengths[i] != lengths[i - 1] - 1 for i in range(1, n)):
        return False
    lcp = [[_lcp(rows[i], rows[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and lcp[i][j] == min(len(rows[i]), len(rows[j])):
                return False
    for i in range(n - 1):
        for j in range(n - 1):
            if i != j and lcp[i][j] > 0 and lcp[i + 1][j + 1] < lcp[i][j] - 1:
                return False
    return True


def build_tree(w: Sequence[int], oracle: Optional[CharacterOracle] = None,
               finalize: bool = True) -> SuffixTree:
    """Build the order-preserving suffix tree of ``w``.

    ``oracle`` must have been built from the same sequence; one is made
    if omitted.
    """
    if len(w) == 0:
        raise ValueError("cannot index an empty sequence")
    if oracle is None:
        oracle = build_oracle(w)
    elif oracle.text != tuple(w):
        raise ValueError("oracle was built from a different sequence")
    tree = SuffixTree(w, oracle)
    tree._construct()
    if finalize:
        tree.finalize()
    return tree
