"""
G-trees, G-equivalence and the tubing lattice L(G) of a filled connected graph.

L(G) is realised as the weak order restricted to G-permutations (the minimum
of each G-equivalence class). Two permutations are G-equivalent exactly when
their G-trees agree, and the class of every permutation in S_N is computed
once when the lattice is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Optional, Sequence

from .errors import ArgumentError, CapacityError, InvariantError
from .graph import SimpleGraph, connected_components, edge_intervals, is_ab_cut_set, require_filled_connected
from .perm import Perm, Word, apply_transposition, hyperplane_walk, inversion_count, weak_leq
from .tableau import Rows, standardize, walk_to_balanced

__all__ = [
    "GTree", "TubingLattice", "g_tree", "g_tree_key", "is_g_permutation",
    "avoids_m312", "avoids_m132", "class_min", "class_max", "same_class_cover",
    "same_class_cover_by_tree", "build_lattice", "maximal_chains", "chain_length",
    "longest_chains", "shortest_chains", "chain_word", "project_word", "is_lattice",
    "intra_class_hyperplanes", "intra_class_lollipop", "reduced_walk", "g_balanced_tableau",
    "lattice_to_json", "lattice_to_dot", "MAX_LATTICE_N", "MAX_CHAIN_N",
]

MAX_LATTICE_N = 8
MAX_CHAIN_N = 7


@dataclass(frozen=True)
class GTree:
    root: int
    children: tuple["GTree", ...] = ()

    def vertices(self) -> frozenset[int]:
        out = {self.root}
        for ch in self.children:
            out |= ch.vertices()
        return frozenset(out)

    def key(self) -> tuple:
        return (self.root, tuple(ch.key() for ch in self.children))


def _tree(adj: dict[int, set[int]], word: Sequence[int]) -> GTree:
    root = word[-1]
    rest = set(word[:-1])
    kids = []
    while rest:
        # components of the remaining vertices; children ordered by minimum vertex
        start = min(rest)
        stack, comp = [start], {start}
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u in rest and u not in comp:
                    comp.add(u)
                    stack.append(u)
        rest -= comp
        kids.append(_tree(adj, [x for x in word if x in comp]))
    return GTree(root, tuple(kids))


def g_tree(g: SimpleGraph, w: Sequence[int]) -> GTree:
    """Root w(N); recurse on the components of G minus the root."""
    if sorted(w) != sorted(g.vertices):
        raise ArgumentError("permutation and graph have different vertex sets")
    if not w:
        raise ArgumentError("empty permutation")
    adj = g.adjacency()
    top = connected_components(g)
    if len(top) > 1:
        raise ArgumentError("G-trees need a connected graph")
    return _tree(adj, list(w))


def g_tree_key(g: SimpleGraph, w: Sequence[int]) -> tuple:
    return g_tree(g, w).key()


def is_g_permutation(g: SimpleGraph, w: Sequence[int]) -> bool:
    """w(i) lies in the component of max(w(1..i)) inside G restricted to w(1..i)."""
    adj = g.adjacency()
    for i in range(1, len(w) + 1):
        prefix = set(w[:i])
        top = max(prefix)
        stack, seen = [top], {top}
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u in prefix and u not in seen:
                    seen.add(u)
                    stack.append(u)
        if w[i - 1] not in seen:
            return False
    return True


def avoids_m312(w: Sequence[int], m: int) -> bool:
    """No i < j < k with w(j) < w(k) < w(i) and w(k) >= m."""
    n = len(w)
    for k in range(n):
        if w[k] < m:
            continue
        seen_big = False
        for j in range(k):
            if w[j] > w[k]:
                seen_big = True
            elif seen_big:
                return False
    return True


def avoids_m132(w: Sequence[int], m: int) -> bool:
    """No i < j < k with w(i) < w(k) < w(j) and w(k) >= m."""
    n = len(w)
    for k in range(n):
        if w[k] < m:
            continue
        seen_small = False
        for j in range(k):
            if w[j] < w[k]:
                seen_small = True
            elif seen_small:
                return False
    return True


def same_class_cover(g: SimpleGraph, u: Sequence[int], i: int) -> bool:
    """u and u*s_i are G-equivalent iff u(i+2..N) separates u(i) from u(i+1)."""
    if not 1 <= i < len(u) or u[i - 1] > u[i]:
        raise ArgumentError(f"position {i} is not an ascent of {tuple(u)}")
    return is_ab_cut_set(g, u[i - 1], u[i], u[i + 1:])


def same_class_cover_by_tree(g: SimpleGraph, u: Sequence[int], i: int) -> bool:
    return g_tree_key(g, u) == g_tree_key(g, apply_transposition(u, i))


def _walk_class(g: SimpleGraph, w: Sequence[int], up: bool) -> Perm:
    # classes are weak-order intervals, so greedy same-class moves reach the extreme
    w = tuple(w)
    moved = True
    while moved:
        moved = False
        for i in range(1, len(w)):
            if up and w[i - 1] < w[i] and same_class_cover(g, w, i):
                w = apply_transposition(w, i)
                moved = True
                break
            if not up and w[i - 1] > w[i] and same_class_cover(g, apply_transposition(w, i), i):
                w = apply_transposition(w, i)
                moved = True
                break
    return w


def class_min(g: SimpleGraph, w: Sequence[int]) -> Perm:
    require_filled_connected(g)
    return _walk_class(g, w, up=False)


def class_max(g: SimpleGraph, w: Sequence[int]) -> Perm:
    require_filled_connected(g)
    return _walk_class(g, w, up=True)


@dataclass
class TubingLattice:
    graph: SimpleGraph
    elements: list[Perm]                   # class minima, sorted by (rank, one-line)
    maxima: list[Perm]                     # class maxima, same indexing
    covers: list[tuple[int, int]]          # (lower, upper) element indices
    class_of: dict[Perm, int] = field(repr=False)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.class_of[tuple(range(self.graph.n, 0, -1))]

    def upper_covers(self) -> list[list[int]]:
        up: list[list[int]] = [[] for _ in self.elements]
        for a, b in self.covers:
            up[a].append(b)
        for lst in up:
            lst.sort()
        return up

    def index(self, w: Sequence[int]) -> int:
        return self.class_of[tuple(w)]


def build_lattice(g: SimpleGraph) -> TubingLattice:
    require_filled_connected(g)
    n = g.n
    if n > MAX_LATTICE_N:
        raise CapacityError(f"lattice construction is capped at N <= {MAX_LATTICE_N}")
    adj = g.adjacency()
    groups: dict[tuple, list[Perm]] = {}
    for w in permutations(range(1, n + 1)):
        groups.setdefault(_tree(adj, w).key(), []).append(w)
    reps = []
    for members in groups.values():
        ranked = sorted(members, key=lambda w: (inversion_count(w), w))
        reps.append((ranked[0], ranked[-1], members))
    reps.sort(key=lambda t: (inversion_count(t[0]), t[0]))
    class_of: dict[Perm, int] = {}
    for idx, (_, _, members) in enumerate(reps):
        for w in members:
            class_of[w] = idx
    covers = set()
    for w, a in class_of.items():
        for i in range(1, n):
            if w[i - 1] < w[i]:
                b = class_of[apply_transposition(w, i)]
                if a != b:
                    covers.add((a, b))
    return TubingLattice(
        graph=g,
        elements=[r[0] for r in reps],
        maxima=[r[1] for r in reps],
        covers=sorted(covers),
        class_of=class_of,
    )


def is_lattice(lat: TubingLattice) -> bool:
    """Every pair has a meet and a join in the induced weak order (exhaustive)."""
    els = lat.elements
    size = len(els)
    leq = [[weak_leq(els[a], els[b]) for b in range(size)] for a in range(size)]
    for a in range(size):
        for b in range(a + 1, size):
            ups = [c for c in range(size) if leq[a][c] and leq[b][c]]
            if not any(all(leq[j][c] for c in ups) for j in ups):
                return False
            downs = [c for c in range(size) if leq[c][a] and leq[c][b]]
            if not any(all(leq[c][j] for c in downs) for j in downs):
                return False
    return True


def maximal_chains(lat: TubingLattice) -> list[tuple[int, ...]]:
    """All maximal chains bottom to top, as tuples of element indices, sorted."""
    if lat.graph.n > MAX_CHAIN_N:
        raise CapacityError(f"chain enumeration is capped at N <= {MAX_CHAIN_N}")
    up = lat.upper_covers()
    out: list[tuple[int, ...]] = []
    stack = [(lat.bottom, (lat.bottom,))]
    while stack:
        v, chain = stack.pop()
        if v == lat.top:
            out.append(chain)
            continue
        for u in reversed(up[v]):
            stack.append((u, chain + (u,)))
    return sorted(out)


def chain_length(chain: Sequence[int]) -> int:
    return len(chain) - 1


def longest_chains(lat: TubingLattice) -> list[tuple[int, ...]]:
    chains = maximal_chains(lat)
    best = max(map(len, chains))
    return [c for c in chains if len(c) == best]


def shortest_chains(lat: TubingLattice) -> list[tuple[int, ...]]:
    chains = maximal_chains(lat)
    best = min(map(len, chains))
    return [c for c in chains if len(c) == best]


def chain_word(lat: TubingLattice, chain: Sequence[int]) -> Word:
    """Reduced word of a chain whose consecutive class minima differ by one transposition."""
    letters = []
    for a, b in zip(chain, chain[1:]):
        u, v = lat.elements[a], lat.elements[b]
        diff = [k for k in range(len(u)) if u[k] != v[k]]
        if len(diff) != 2 or diff[1] != diff[0] + 1:
            raise InvariantError("chain step is not a single adjacent transposition")
        letters.append(diff[0] + 1)
    return tuple(letters)


def project_word(lat: TubingLattice, letters: Sequence[int]) -> tuple[int, ...]:
    """The chain of L(G) traced by a weak-order maximal chain (repeats collapsed)."""
    w = list(range(1, lat.graph.n + 1))
    chain = [lat.class_of[tuple(w)]]
    for i in letters:
        w[i - 1], w[i] = w[i], w[i - 1]
        c = lat.class_of[tuple(w)]
        if c != chain[-1]:
            chain.append(c)
    return tuple(chain)


def intra_class_hyperplanes(g: SimpleGraph, letters: Sequence[int], method: str = "cut") -> frozenset[int]:
    """1-indexed walk positions whose step stays inside one G-class.

    method "cut": the cut-set criterion on the permutation before the step.
    method "interval": some non-neighbour c = N-j+1 of a in [a+1, b] has every
    edge-interval row i crossed (H_{i,b}) before H_{a,b}.
    method "tableau": the same test read off balanced-tableau entries.
    """
    require_filled_connected(g)
    n = g.n
    walk = hyperplane_walk(letters, n)
    if method == "cut":
        out = set()
        w = list(range(1, n + 1))
        for k, i in enumerate(letters, 1):
            if same_class_cover(g, w, i):
                out.add(k)
            w[i - 1], w[i] = w[i], w[i - 1]
        return frozenset(out)
    intervals = {iv.column: iv for iv in edge_intervals(g)}
    if method == "interval":
        when = {h: k for k, h in enumerate(walk, 1)}
        before = lambda i, b, k: when[(i, b)] < k  # noqa: E731
    elif method == "tableau":
        t = walk_to_balanced(walk, n)
        before = lambda i, b, k: t[i - 1][n - b] < k  # noqa: E731
    else:
        raise ArgumentError(f"unknown method {method!r}")
    out = set()
    for k, (a, b) in enumerate(walk, 1):
        for c in range(a + 1, b + 1):
            if g.has_edge(a, c):
                continue
            rows = intervals[n - c + 1].rows()
            if all(i < b and before(i, b, k) for i in rows):
                out.add(k)
                break
    return frozenset(out)


def intra_class_lollipop(m: int, n: int, letters: Sequence[int]) -> frozenset[int]:
    """Lollipop shortcut: some j <= n with a < N-j <= b-1 and H_{N-j,b} before H_{a,b}."""
    big_n = m + n
    walk = hyperplane_walk(letters, big_n)
    when = {h: k for k, h in enumerate(walk, 1)}
    out = set()
    for k, (a, b) in enumerate(walk, 1):
        for j in range(1, n + 1):
            r = big_n - j
            if a < r <= b - 1 and when[(r, b)] < k:
                out.add(k)
                break
    return frozenset(out)


def reduced_walk(g: SimpleGraph, letters: Sequence[int], method: str = "cut") -> tuple[tuple[int, int], ...]:
    """The hyperplane walk with intra-class steps removed (an element of MH(G))."""
    drop = intra_class_hyperplanes(g, letters, method)
    walk = hyperplane_walk(letters, g.n)
    return tuple(h for k, h in enumerate(walk, 1) if k not in drop)


def g_balanced_tableau(g: SimpleGraph, letters: Sequence[int], method: str = "cut") -> Rows:
    """Balanced tableau of the word with intra-class cells deleted, then standardized
    (an element of MB(G))."""
    n = g.n
    walk = hyperplane_walk(letters, n)
    t = walk_to_balanced(walk, n)
    drop = intra_class_hyperplanes(g, letters, method)
    holed = tuple(tuple(None if x in drop else x for x in row) for row in t)
    return standardize(holed)


def _label(w: Sequence[int]) -> str:
    return "".join(map(str, w)) if len(w) < 10 else ",".join(map(str, w))


def lattice_to_json(lat: TubingLattice) -> dict:
    return {
        "graph": lat.graph.to_json(),
        "elements": [list(w) for w in lat.elements],
        "maxima": [list(w) for w in lat.maxima],
        "covers": [list(c) for c in lat.covers],
    }


def lattice_to_dot(lat: TubingLattice, name: Optional[str] = None) -> str:
    lines = [f"digraph {name or 'tubing'} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for idx, w in enumerate(lat.elements):
        lines.append(f'  n{idx} [label="{_label(w)}"];')
    for a, b in lat.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
