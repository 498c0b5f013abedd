"""
Quasisymmetric functions in the fundamental basis.

An expression is a finite integer combination of fundamental functions Q_alpha,
stored as a mapping from compositions to nonzero coefficients. This is enough
for every identity we check: Stanley symmetric functions, Schur functions,
Young quasisymmetric Schur functions and the chain functions of a tubing
lattice all expand into fundamentals with integer coefficients.

>>> young_quasi_schur((2, 2))
QSymExpr({(1, 2, 1): 1, (2, 2): 1})
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ArgumentError, check_cells
from .graph import SimpleGraph, lollipop
from .perm import all_reduced_words, descent_set, inversion_count, is_permutation
from .tableau import enumerate_syct, enumerate_syt, syct_descents, tableau_descents
from .tubing import build_lattice, chain_word, longest_chains, maximal_chains

__all__ = [
    "Composition", "QSymExpr", "Expansion", "check_composition", "comp_from_set", "set_from_comp",
    "fundamental", "stanley_f", "schur", "young_quasi_schur", "lmf", "lmf_lollipop",
    "comp_mn", "expand_in_basis", "chain_function_fg", "BASES",
]

Composition = tuple[int, ...]

BASES = ("young_quasi_schur", "schur")


def check_composition(parts: Iterable[int]) -> Composition:
    alpha = tuple(int(p) for p in parts)
    if any(p < 1 for p in alpha):
        raise ArgumentError(f"{alpha} is not a composition")
    return alpha


def comp_from_set(s: Iterable[int], n: int) -> Composition:
    """The composition of n whose partial sums are the elements of s."""
    s = sorted(set(s))
    if s and (s[0] < 1 or s[-1] >= n):
        raise ArgumentError(f"set {s} must lie in 1..{n - 1}")
    if n < 0:
        raise ArgumentError("n must be nonnegative")
    if n == 0:
        return ()
    cuts = [0, *s, n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def set_from_comp(alpha: Sequence[int]) -> tuple[frozenset[int], int]:
    alpha = check_composition(alpha)
    sums, total = [], 0
    for p in alpha[:-1]:
        total += p
        sums.append(total)
    return frozenset(sums), sum(alpha)


def _comp_key(alpha: Composition) -> tuple:
    return (sum(alpha), alpha)


@dataclass(frozen=True)
class QSymExpr:
    terms: Mapping[Composition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {check_composition(a): int(c) for a, c in dict(self.terms).items() if c}
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=lambda t: _comp_key(t[0]))))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Sequence[int], int]]) -> "QSymExpr":
        acc: dict[Composition, int] = {}
        for alpha, c in pairs:
            key = tuple(alpha)
            acc[key] = acc.get(key, 0) + c
        return cls(acc)

    def __repr__(self) -> str:
        return f"QSymExpr({dict(self.terms)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for alpha, c in self.terms.items():
            name = "Q(" + ",".join(map(str, alpha)) + ")"
            term = name if abs(c) == 1 else f"{abs(c)}*{name}"
            if not out:
                out = term if c > 0 else f"-{term}"
            else:
                out += f" + {term}" if c > 0 else f" - {term}"
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSymExpr):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[tuple[Composition, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "QSymExpr") -> "QSymExpr":
        acc = dict(self.terms)
        for a, c in other.terms.items():
            acc[a] = acc.get(a, 0) + c
        return QSymExpr(acc)

    def __neg__(self) -> "QSymExpr":
        return QSymExpr({a: -c for a, c in self.terms.items()})

    def __sub__(self, other: "QSymExpr") -> "QSymExpr":
        return self + (-other)

    def __mul__(self, k: int) -> "QSymExpr":
        if not isinstance(k, int):
            return NotImplemented
        return QSymExpr({a: k * c for a, c in self.terms.items()})

    __rmul__ = __mul__

    def coefficient(self, alpha: Sequence[int]) -> int:
        return self.terms.get(tuple(alpha), 0)

    def degrees(self) -> list[int]:
        return sorted({sum(a) for a in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree_slice(self, d: int) -> "QSymExpr":
        return QSymExpr({a: c for a, c in self.terms.items() if sum(a) == d})

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def to_json(self) -> dict:
        return {"terms": [{"comp": list(a), "coeff": c} for a, c in self.terms.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> "QSymExpr":
        return cls.from_pairs((t["comp"], t["coeff"]) for t in obj["terms"])


def fundamental(s: Iterable[int], n: int) -> QSymExpr:
    """Q_{S,n}."""
    return QSymExpr({comp_from_set(s, n): 1})


def _sum_descents(descents: Iterable[frozenset[int]], n: int) -> QSymExpr:
    acc: dict[Composition, int] = {}
    for d in descents:
        a = comp_from_set(d, n)
        acc[a] = acc.get(a, 0) + 1
    return QSymExpr(acc)


def stanley_f(w: Sequence[int]) -> QSymExpr:
    """Stanley symmetric function: Q_{Des(sigma)} summed over reduced words of w."""
    w = tuple(w)
    if not is_permutation(w):
        raise ArgumentError(f"{w} is not a permutation")
    length = inversion_count(w)
    check_cells(length, "Stanley symmetric function")
    return _sum_descents((descent_set(s) for s in all_reduced_words(w)), length)


def schur(shape: Sequence[int]) -> QSymExpr:
    """s_lambda as the sum of Q_{Des(T)} over standard Young tableaux T."""
    shape = tuple(shape)
    size = sum(shape)
    return _sum_descents((tableau_descents(t) for t in enumerate_syt(shape)), size)


def young_quasi_schur(alpha: Sequence[int]) -> QSymExpr:
    """Young quasisymmetric Schur function as the sum of Q_{Des(tau)} over SYCT tau."""
    alpha = check_composition(alpha)
    return _sum_descents((syct_descents(y) for y in enumerate_syct(alpha)), sum(alpha))


def lmf(g: SimpleGraph) -> QSymExpr:
    """Sum of Q_{Des(sigma)} over the words of the longest maximal chains of L(G)."""
    lat = build_lattice(g)
    words = [chain_word(lat, c) for c in longest_chains(lat)]
    if not words:
        return QSymExpr()
    return _sum_descents((descent_set(s) for s in words), len(words[0]))


def lmf_lollipop(m: int, n: int) -> QSymExpr:
    return lmf(lollipop(m, n))


def comp_mn(m: int, n: int) -> list[Composition]:
    """(alpha_1, ..., alpha_{m-1}, n, ..., 2, 1) with the prefix a permutation of [n+1, n+m-1]."""
    if m < 1 or n < 0:
        raise ArgumentError(f"comp(m, n) needs m >= 1, n >= 0, got ({m},{n})")
    tail = tuple(range(n, 0, -1))
    return sorted(tuple(p) + tail for p in permutations(range(n + 1, n + m)))


@dataclass(frozen=True)
class Expansion:
    """Result of peeling an expression into a basis.

    `residue` is whatever could not be peeled; it is zero exactly when the
    expansion succeeded.
    """

    basis: str
    coefficients: Mapping[Composition, int]
    residue: QSymExpr

    @property
    def exact(self) -> bool:
        return not self.residue

    @property
    def positive(self) -> bool:
        return self.exact and all(c > 0 for c in self.coefficients.values())

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "coefficients": [{"index": list(a), "coeff": c} for a, c in self.coefficients.items()],
            "residue": self.residue.to_json()["terms"],
            "exact": self.exact,
            "positive": self.positive,
        }


def _basis_element(basis: str, alpha: Composition) -> QSymExpr | None:
    if basis == "young_quasi_schur":
        return young_quasi_schur(alpha)
    if basis == "schur":
        if any(a < b for a, b in zip(alpha, alpha[1:])):
            return None
        return schur(alpha)
    raise ArgumentError(f"unknown basis {basis!r}; choose from {', '.join(BASES)}")


def expand_in_basis(expr: QSymExpr, basis: str = "young_quasi_schur") -> Expansion:
    """Peel off the basis element of the lexicographically greatest surviving composition.

    Each basis element must have leading term Q_alpha with coefficient 1 and
    only lexicographically smaller terms otherwise. When that fails, or the
    leading composition does not index a basis element, peeling stops and the
    remainder is reported as the residue.
    """
    if basis not in BASES:
        raise ArgumentError(f"unknown basis {basis!r}; choose from {', '.join(BASES)}")
    coeffs: dict[Composition, int] = {}
    rest = expr
    while rest:
        top_degree = max(rest.degrees())
        alpha = max(a for a in rest.terms if sum(a) == top_degree)
        elem = _basis_element(basis, alpha)
        if elem is None or elem.coefficient(alpha) != 1:
            break
        if any(sum(b) == sum(alpha) and b > alpha for b in elem.terms):
            break
        c = rest.coefficient(alpha)
        coeffs[alpha] = coeffs.get(alpha, 0) + c
        rest = rest - c * elem
    ordered = dict(sorted(coeffs.items(), key=lambda t: _comp_key(t[0])))
    return Expansion(basis, {a: c for a, c in ordered.items() if c}, rest)


def chain_function_fg(g: SimpleGraph) -> QSymExpr:
    """F_G: Q_{Des(gamma), |gamma|} summed over the cycle words of every maximal chain."""
    from .shortest import chain_to_cycles

    lat = build_lattice(g)
    acc: dict[Composition, int] = {}
    for chain in maximal_chains(lat):
        gamma = chain_to_cycles(lat, chain)
        a = comp_from_set(gamma.descents(), len(gamma))
        acc[a] = acc.get(a, 0) + 1
    return QSymExpr(acc)
