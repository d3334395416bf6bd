"""Save and load suffix trees as versioned JSON.

Layout (version 1)::

    {
      "format": "opstree-index",
      "version": 1,
      "n": <text length>,
      "text": [w_1, ..., w_n],
      "nodes": [[id, parent, head, depth], ...],   # root: parent -1, head null
      "leaves": [[label, node id], ...],
      "links": [[node id, target node id, target depth], ...]
    }

``head`` is ``[lt, eq]`` or ``"#"`` for the terminator. Node ids are arena
indices and must be dense. The character oracle is rebuilt from
``text`` on load.
"""
from __future__ import annotations

import json
from typing import IO, Any

from .oracle import build_oracle
from .tree import TERMINATOR, Node, SuffixTree

FORMAT = "opstree-index"
VERSION = 1


def _head_out(head) -> Any:
    return "#" if head is TERMINATOR else [head[0], head[1]]


def _head_in(raw):
    if raw == "#":
        return TERMINATOR
    lt, eq = raw
    return (int(lt), int(eq))


def to_dict(t: SuffixTree) -> dict:
    rows = []
    for nd in t.nodes:
        if nd.parent is None:
            rows.append([nd.id, -1, None, nd.depth])
            continue
        head = next(k for k, c in nd.parent.children.items() if c is nd)
        rows.append([nd.id, nd.parent.id, _head_out(head), nd.depth])
    return {
        "format": FORMAT,
        "version": VERSION,
        "n": t.n,
        "text": list(t.text),
        "nodes": rows,
        "leaves": [[s, t.leaves[s].id] for s in range(1, t.n + 1)],
        "links": [[nd.id, nd.link.node, nd.link.depth] for nd in t.nodes if nd.link is not None],
    }


def from_dict(data: dict) -> SuffixTree:
    if data.get("format") != FORMAT:
        raise ValueError("not an opstree index")
    if data.get("version") != VERSION:
        raise ValueError(f"unsupported index version {data.get('version')!r}")
    text = [int(v) for v in data["text"]]
    if len(text) != data["n"] or not text:
        raise ValueError("text length does not match header")
    t = SuffixTree(text, build_oracle(text))
    t.nodes = []
    for pos, (nid, parent, head, depth) in enumerate(data["nodes"]):
        if nid != pos:
            raise ValueError("node ids must be dense and in order")
        t.nodes.append(Node(nid, int(depth), None, 0))
    t.root = t.nodes[0]
    for nid, parent, head, _ in data["nodes"]:
        if parent < 0:
            if nid != 0:
                raise ValueError("only node 0 may be the root")
            continue
        child = t.nodes[nid]
        child.parent = t.nodes[parent]
        child.parent.children[_head_in(head)] = child
    t.leaves = [None] * (t.n + 1)
    for label, nid in data["leaves"]:
        nd = t.nodes[nid]
        nd.leaf = nd.suffix = int(label)
        t.leaves[label] = nd
    if any(leaf is None for leaf in t.leaves[1:]):
        raise ValueError("leaf table incomplete")
    t.finalize()
    for nid, target, depth in data["links"]:
        t.nodes[nid].link = t._locus(t.nodes[target], int(depth))
    return t


def dump(t: SuffixTree, fp: IO[str]) -> None:
    json.dump(to_dict(t), fp, separators=(",", ":"))
    fp.write("\n")


def load(fp: IO[str]) -> SuffixTree:
    return from_dict(json.load(fp))
