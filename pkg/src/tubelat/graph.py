"""
Simple graphs on labelled vertex sets, with the filled/connected predicates,
cut-set tests and edge intervals used by the tubing lattice.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import ArgumentError

__all__ = [
    "SimpleGraph", "EdgeInterval", "complete", "path", "lollipop",
    "is_filled", "is_connected", "connected_components", "induced_subgraph",
    "is_ab_cut_set", "filled_cut_witness", "edge_intervals", "require_filled_connected",
    "all_filled_connected", "parse_graph",
]


@dataclass(frozen=True)
class SimpleGraph:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]  # stored as (u, v) with u < v

    @classmethod
    def on_range(cls, n: int, edges: Iterable[Iterable[int]]) -> "SimpleGraph":
        return cls.build(range(1, n + 1), edges)

    @classmethod
    def build(cls, vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> "SimpleGraph":
        vs = frozenset(vertices)
        es = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ArgumentError(f"loop at vertex {u}")
            if u not in vs or v not in vs:
                raise ArgumentError(f"edge {u}{v} leaves the vertex set")
            es.add((min(u, v), max(u, v)))
        return cls(vs, frozenset(es))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, obj: dict) -> "SimpleGraph":
        return cls.on_range(int(obj["n"]), obj["edges"])


@dataclass(frozen=True)
class EdgeInterval:
    column: int
    lo: int
    hi: int

    def rows(self) -> range:
        return range(self.lo, self.hi + 1)


def complete(n: int) -> SimpleGraph:
    return SimpleGraph.on_range(n, combinations(range(1, n + 1), 2))


def path(n: int) -> SimpleGraph:
    return SimpleGraph.on_range(n, ((i, i + 1) for i in range(1, n)))


def lollipop(m: int, n: int) -> SimpleGraph:
    """K_m on [m] with the path m, m+1, ..., m+n attached."""
    if m < 1 or n < 0:
        raise ArgumentError(f"lollipop needs m >= 1, n >= 0, got ({m},{n})")
    edges = list(combinations(range(1, m + 1), 2))
    edges += [(i, i + 1) for i in range(m, m + n)]
    return SimpleGraph.on_range(m + n, edges)


def is_filled(g: SimpleGraph) -> bool:
    return all(g.has_edge(i, k) and g.has_edge(k, j)
               for i, j in g.edges for k in range(i + 1, j))


def connected_components(g: SimpleGraph, within: Optional[Iterable[int]] = None) -> list[frozenset[int]]:
    """Components of g (or of g restricted to `within`), sorted by minimum vertex."""
    alive = set(g.vertices if within is None else within)
    adj = g.adjacency()
    comps = []
    while alive:
        start = min(alive)
        stack, seen = [start], {start}
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u in alive and u not in seen:
                    seen.add(u)
                    stack.append(u)
        alive -= seen
        comps.append(frozenset(seen))
    return sorted(comps, key=min)


def is_connected(g: SimpleGraph) -> bool:
    return len(connected_components(g)) <= 1


def induced_subgraph(g: SimpleGraph, w: Iterable[int]) -> SimpleGraph:
    ws = frozenset(w)
    if not ws <= g.vertices:
        raise ArgumentError("induced vertex set is not contained in the graph")
    return SimpleGraph(ws, frozenset(e for e in g.edges if e[0] in ws and e[1] in ws))


def is_ab_cut_set(g: SimpleGraph, a: int, b: int, s: Iterable[int]) -> bool:
    """a and b lie in different components of g minus s."""
    s = set(s)
    if a in s or b in s:
        raise ArgumentError("a and b must not belong to the cut set")
    if a == b:
        raise ArgumentError("a and b must differ")
    for comp in connected_components(g, g.vertices - s):
        if a in comp:
            return b not in comp
    raise ArgumentError(f"vertex {a} is not in the graph")


def require_filled_connected(g: SimpleGraph) -> None:
    if g.vertices != frozenset(range(1, g.n + 1)):
        raise ArgumentError("graph must have vertex set [N]")
    if not (is_filled(g) and is_connected(g)):
        raise ArgumentError("graph must be filled and connected")


def filled_cut_witness(g: SimpleGraph, a: int, b: int, s: Iterable[int]) -> Optional[int]:
    """Smallest c in [a+1, b] with ac not an edge and every lower neighbour of c in s."""
    require_filled_connected(g)
    s = set(s)
    if not a < b:
        raise ArgumentError("need a < b")
    if a in s or b in s:
        raise ArgumentError("a and b must not belong to the cut set")
    for c in range(a + 1, b + 1):
        if g.has_edge(a, c):
            continue
        if all(j in s for j in range(1, c) if g.has_edge(j, c)):
            return c
    return None


def edge_intervals(g: SimpleGraph) -> list[EdgeInterval]:
    """I_j = {i < N-j+1 : {i, N-j+1} is an edge} for j = 1..N-1."""
    require_filled_connected(g)
    n = g.n
    out = []
    for j in range(1, n):
        c = n - j + 1
        rows = [i for i in range(1, c) if g.has_edge(i, c)]
        lo, hi = min(rows), max(rows)
        # filledness makes the rows contiguous and forces the edge {c-1, c}
        assert rows == list(range(lo, hi + 1)) and hi == n - j
        out.append(EdgeInterval(j, lo, hi))
    return out


def all_filled_connected(n: int) -> Iterator[SimpleGraph]:
    """Every filled connected graph on [n], by filtering all edge subsets."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        g = SimpleGraph.on_range(n, (p for k, p in enumerate(pairs) if mask >> k & 1))
        if is_filled(g) and is_connected(g):
            yield g


_SPEC = re.compile(r"^\s*(?:([KP])\s*(\d+)|L\s*(\d+)\s*[, ]\s*(\d+))\s*$", re.IGNORECASE)


def parse_graph(text: str) -> SimpleGraph:
    """Accepts "K4", "P4", "L3,2", "@file.json", or an edge list "12,23" / "1-2 2-3"."""
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return SimpleGraph.from_json(json.load(fh))
    match = _SPEC.match(text)
    if match:
        kind, size, m, n = match.groups()
        if kind:
            k = int(size)
            if k < 1:
                raise ArgumentError("graph needs at least one vertex")
            return complete(k) if kind.upper() == "K" else path(k)
        return lollipop(int(m), int(n))
    edges = []
    for token in re.split(r"[,\s]+", text.strip()):
        if not token:
            continue
        if "-" in token:
            u, v = token.split("-")
        elif len(token) == 2 and token.isdigit():
            u, v = token
        else:
            raise ArgumentError(f"cannot parse graph {text!r}")
        edges.append((int(u), int(v)))
    if not edges:
        raise ArgumentError(f"cannot parse graph {text!r}")
    n = max(max(e) for e in edges)
    return SimpleGraph.on_range(n, edges)
