"""
Shortest maximal chains of the lollipop tubing lattice L(L_{m,n}).

The pipeline: skew balanced tableaux SMB(L_{m,n}) are lifted to full balanced
tableaux, read off as reduced words of w_{m,n} by varsigma, and sent to cycle
words by psi. Maximal chains of any L(G) become cycle words through their
class-maximum representatives.

>>> psi((1, 4, 3, 2, 1), 3, 2)
CycleWord('(1,2)(1,5,4,3,2)(2,5,4,3)(4,5)(3,4)')
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import ArgumentError, CapacityError, InvariantError
from .perm import Perm, Word, evaluate, is_reduced
from .tableau import Rows, balanced_to_word, enumerate_balanced, staircase, standardize, word_to_balanced
from .tubing import TubingLattice

__all__ = [
    "AdjacentCycle", "CycleWord", "w_mn", "smb_shape", "is_smb", "enumerate_smb", "lift_smb",
    "varsigma", "varsigma_inverse", "psi", "chain_to_cycles", "cycle_descents", "evaluate_chain_end", "expected_length",
    "MAX_SMB_N",
]

MAX_SMB_N = 6


@dataclass(frozen=True, order=True)
class AdjacentCycle:
    """The cycle (a, b, b-1, ..., a+1); a = b+1 is never produced, a < b always."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a < self.b:
            raise ArgumentError(f"adjacent cycle needs 1 <= a < b, got ({self.a},{self.b})")

    def act(self, u: Sequence[int]) -> Perm:
        """u o c: the entry in position b moves to position a, the block a..b-1 shifts right."""
        if self.b > len(u):
            raise ArgumentError(f"cycle ({self.a},{self.b}) does not fit S_{len(u)}")
        out = list(u)
        x = out.pop(self.b - 1)
        out.insert(self.a - 1, x)
        return tuple(out)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, [self.a, *range(self.b, self.a, -1)])) + ")"


@dataclass(frozen=True)
class CycleWord:
    n: int
    cycles: tuple[AdjacentCycle, ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def __str__(self) -> str:
        return "".join(map(str, self.cycles))

    def __repr__(self) -> str:
        return f"CycleWord({str(self)!r})"

    def descents(self) -> frozenset[int]:
        return cycle_descents(self)

    def chain(self) -> list[Perm]:
        """The permutations visited from the identity."""
        w = tuple(range(1, self.n + 1))
        out = [w]
        for c in self.cycles:
            w = c.act(w)
            out.append(w)
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "cycles": [{"a": c.a, "b": c.b} for c in self.cycles]}

    @classmethod
    def from_json(cls, obj: dict) -> "CycleWord":
        return cls(int(obj["n"]), tuple(AdjacentCycle(int(c["a"]), int(c["b"])) for c in obj["cycles"]))

    @classmethod
    def from_pairs(cls, n: int, pairs: Sequence[tuple[int, int]]) -> "CycleWord":
        return cls(n, tuple(AdjacentCycle(a, b) for a, b in pairs))


def cycle_descents(gamma: CycleWord) -> frozenset[int]:
    """Des(gamma) = {i : b_i >= b_{i+1}}."""
    bs = [c.b for c in gamma.cycles]
    return frozenset(i for i in range(1, len(bs)) if bs[i - 1] >= bs[i])


def w_mn(m: int, n: int) -> Perm:
    """[m+n, m-1, m-2, ..., 1, m, m+1, ..., m+n-1]."""
    if m < 1 or n < 0:
        raise ArgumentError(f"w_(m,n) needs m >= 1, n >= 0, got ({m},{n})")
    if n == 0:
        return tuple(range(m, 0, -1))
    return (m + n,) + tuple(range(m - 1, 0, -1)) + tuple(range(m, m + n))


def smb_shape(m: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Outer staircase st_{m+n} and the deleted inner shape (n^{m-1}, n-1, ..., 1)."""
    if m < 1 or n < 0:
        raise ArgumentError(f"SMB needs m >= 1, n >= 0, got ({m},{n})")
    outer = staircase(m + n)
    inner = (n,) * (m - 1) + tuple(range(n - 1, 0, -1))
    inner = inner + (0,) * (len(outer) - len(inner))
    return outer, inner[:len(outer)]


def _diagonal(m: int, n: int) -> list[tuple[int, int]]:
    # cells (m+n-1, 1), (m+n-2, 2), ..., (m, n)
    return [(m + n - k, k) for k in range(1, n + 1)]


def _get(b: Rows, r: int, c: int):
    return b[r - 1][c - 1]


def is_smb(b: Rows, m: int, n: int) -> bool:
    """Diagonal increases up and to the right and B(m,n) is below every B(i, n+1), i < m."""
    diag = [_get(b, r, c) for r, c in _diagonal(m, n)]
    if any(x >= y for x, y in zip(diag, diag[1:])):
        return False
    if n == 0:
        return True
    corner = _get(b, m, n)
    return all(corner < _get(b, i, n + 1) for i in range(1, m))


def enumerate_smb(m: int, n: int) -> list[Rows]:
    """All of SMB(L_{m,n}): balanced skew fillings satisfying both conditions."""
    if m + n > MAX_SMB_N:
        raise CapacityError(f"SMB enumeration is capped at m + n <= {MAX_SMB_N}")
    outer, inner = smb_shape(m, n)
    return [b for b in enumerate_balanced(outer, inner) if is_smb(b, m, n)]


def lift_smb(b: Rows, m: int, n: int) -> Rows:
    """A full balanced tableau of shape st_{m+n} that restricts to b off the inner shape.

    Columns n, ..., 1 are filled right to left, each bottom to top. For the cell
    (i, k) the entries east and south of it, read in increasing order, form an
    S/E word; its (m+n-k-i)-th letter is an S carrying some y, and y+1 goes in
    the cell after every entry >= y+1 is bumped up by one.
    """
    if not is_smb(b, m, n):
        raise ArgumentError("tableau is not in SMB(L_{m,n})")
    big = m + n
    grid = [list(row) for row in b]
    for k in range(n, 0, -1):
        for i in range(big - k - 1, 0, -1):
            east = [(grid[i - 1][c - 1], "E") for c in range(k + 1, big - i + 1)]
            south = [(grid[r - 1][k - 1], "S") for r in range(i + 1, big - k + 1)]
            word = sorted(east + south)
            y, tag = word[big - k - i - 1]
            if tag != "S":
                raise InvariantError(f"lift at ({i},{k}) hit an E")
            for row in grid:
                for c, z in enumerate(row):
                    if z is not None and z > y:
                        row[c] = z + 1
            grid[i - 1][k - 1] = y + 1
    return tuple(tuple(row) for row in grid)


def varsigma(b: Rows, m: int, n: int) -> Word:
    """Reduced word of w_{m,n}: the diagonal positions carry m+n-1, ..., m and the
    rest carry the word of the standardized right block."""
    if not is_smb(b, m, n):
        raise ArgumentError("tableau is not in SMB(L_{m,n})")
    diag = [_get(b, r, c) for r, c in _diagonal(m, n)]
    block = tuple(tuple(row[n:]) for row in b[:m - 1])
    rho = balanced_to_word(standardize(block), m) if m > 1 else ()
    i2 = sorted(x for row in block for x in row)
    sigma = [0] * (len(diag) + len(i2))
    for pos, letter in zip(diag, range(m + n - 1, m - 1, -1)):
        sigma[pos - 1] = letter
    for pos, letter in zip(i2, rho):
        sigma[pos - 1] = letter
    return tuple(sigma)


def _check_w_mn(sigma: Sequence[int], m: int, n: int) -> None:
    big = m + n
    if any(not 1 <= x < big for x in sigma) or not is_reduced(sigma, big) or evaluate(sigma, big) != w_mn(m, n):
        raise ArgumentError(f"{''.join(map(str, sigma))} is not a reduced word of w_({m},{n})")


def varsigma_inverse(sigma: Sequence[int], m: int, n: int) -> Rows:
    sigma = tuple(sigma)
    _check_w_mn(sigma, m, n)
    i1 = [k for k, x in enumerate(sigma, 1) if x >= m]
    i2 = [k for k, x in enumerate(sigma, 1) if x < m]
    outer, inner = smb_shape(m, n)
    grid: list[list] = [[None] * k for k in outer]
    for (r, c), pos in zip(_diagonal(m, n), i1):
        grid[r - 1][c - 1] = pos
    if m > 1:
        rho = tuple(sigma[k - 1] for k in i2)
        block = word_to_balanced(rho, m)
        for r, row in enumerate(block, 1):
            for c, x in enumerate(row, 1):
                grid[r - 1][n + c - 1] = i2[x - 1]
    b = tuple(tuple(row) for row in grid)
    if not is_smb(b, m, n):
        raise InvariantError("inverse image violates the SMB conditions")
    return b


def psi(sigma: Sequence[int], m: int, n: int) -> CycleWord:
    """Letters >= m become (m+n-x, m+n, m+n-1, ...); a letter x < m becomes (x+l, x+l+1)
    where l counts the earlier letters >= m."""
    sigma = tuple(sigma)
    _check_w_mn(sigma, m, n)
    big = m + n
    out = []
    seen = 0
    for x in sigma:
        if x >= m:
            out.append(AdjacentCycle(big - x, big))
            seen += 1
        else:
            out.append(AdjacentCycle(x + seen, x + seen + 1))
    return CycleWord(big, tuple(out))


def _cycle_between(u: Perm, v: Perm) -> AdjacentCycle:
    diff = [k for k in range(len(u)) if u[k] != v[k]]
    if not diff:
        raise InvariantError("chain step does not move")
    c = AdjacentCycle(diff[0] + 1, diff[-1] + 1)
    if c.act(u) != v:
        raise InvariantError(f"no adjacent cycle takes {u} to {v}")
    return c


def chain_to_cycles(lat: TubingLattice, chain: Sequence[int]) -> CycleWord:
    """The cycle word of a maximal chain, read off consecutive class maxima."""
    reps = [lat.maxima[i] for i in chain]
    if reps[0] != tuple(range(1, lat.graph.n + 1)):
        raise InvariantError("chain does not start at the identity")
    cycles = [_cycle_between(u, v) for u, v in zip(reps, reps[1:])]
    if cycles and evaluate_chain_end(lat.graph.n, cycles) != tuple(range(lat.graph.n, 0, -1)):
        raise InvariantError("cycle word does not reach the longest element")
    return CycleWord(lat.graph.n, tuple(cycles))


def evaluate_chain_end(n: int, cycles: Sequence[AdjacentCycle]) -> Perm:
    w = tuple(range(1, n + 1))
    for c in cycles:
        w = c.act(w)
    return w


def expected_length(m: int, n: int) -> int:
    """|gamma| for every shortest chain: n + C(m, 2)."""
    return n + comb(m, 2)
