"""
Exhaustive checks of the main theorems at small parameters.

Each suite yields Check records; the command line prints them and the test
suite asserts on them. Pairs (m, n) range over m >= 1, n >= 0 with
2 <= m + n <= max_size.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator

from .errors import ArgumentError, check_cells
from .graph import lollipop
from .perm import all_reduced_words, descent_set, longest
from .qsym import QSymExpr, chain_function_fg, comp_mn, expand_in_basis, lmf, schur, stanley_f, young_quasi_schur
from .shortest import MAX_SMB_N, chain_to_cycles, enumerate_smb, lift_smb, psi, smb_shape, varsigma, w_mn
from .shuffle import MAX_SHUF_N, shuf
from .tableau import balanced_to_word, eg_q, is_n_row_shiftable, staircase
from .tubing import build_lattice, chain_word, intra_class_hyperplanes, longest_chains, project_word, shortest_chains

__all__ = ["Check", "SUITES", "lollipop_pairs", "suite_3equiv", "suite_quasi_schur", "suite_smc", "run_suites"]


@dataclass(frozen=True)
class Check:
    suite: str
    label: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return f"{status} {self.suite} {self.label}{tail}"


def lollipop_pairs(max_size: int) -> list[tuple[int, int]]:
    return [(m, big - m) for big in range(2, max_size + 1) for m in range(big, 0, -1)]


def suite_3equiv(max_size: int) -> Iterator[Check]:
    """Shuf(m,n) = EG-preimage of n-row-shiftable tableaux = longest-chain words of L(L_{m,n})."""
    for m, n in lollipop_pairs(min(max_size, MAX_SHUF_N)):
        big = m + n
        shuffles = shuf(m, n)
        lat = build_lattice(lollipop(m, n))
        chains = {chain_word(lat, c) for c in longest_chains(lat)}
        shiftable = {w for w in all_reduced_words(longest(big)) if is_n_row_shiftable(eg_q(w, big), n)}
        ok = shuffles == chains == shiftable
        yield Check("3equiv", f"m={m} n={n}", ok,
                    f"|Shuf|={len(shuffles)} |EG|={len(shiftable)} |LMR|={len(chains)}")


def suite_quasi_schur(max_size: int) -> Iterator[Check]:
    for big in range(2, max_size + 1):
        ok = stanley_f(longest(big)) == schur(staircase(big))
        yield Check("quasi-schur", f"stanley N={big}", ok, "F_w0 = s_staircase")
    for m, n in lollipop_pairs(max_size):
        lhs = lmf(lollipop(m, n))
        rhs = QSymExpr()
        for alpha in comp_mn(m, n):
            rhs = rhs + young_quasi_schur(alpha)
        expansion = expand_in_basis(lhs, "young_quasi_schur")
        ok = lhs == rhs and expansion.positive and lhs.degrees() == [comb(m + n, 2)]
        yield Check("quasi-schur", f"m={m} n={n}", ok, f"|comp(m,n)|={len(comp_mn(m, n))} terms={len(lhs)}")
        degrees = chain_function_fg(lollipop(m, n)).degrees()
        ok = (degrees[0], degrees[-1]) == (comb(m, 2) + n, comb(m + n, 2))
        yield Check("quasi-schur", f"degrees m={m} n={n}", ok, f"F_G degrees {degrees[0]}..{degrees[-1]}")


def suite_smc(max_size: int) -> Iterator[Check]:
    for m, n in lollipop_pairs(min(max_size, MAX_SMB_N)):
        g = lollipop(m, n)
        lat = build_lattice(g)
        smb = enumerate_smb(m, n)
        words = all_reduced_words(w_mn(m, n))
        shortest = set(shortest_chains(lat))
        images = [varsigma(b, m, n) for b in smb]
        bijective = len(set(images)) == len(images) and set(images) == set(words)
        descents = all(descent_set(s) == psi(s, m, n).descents() for s in words)
        _, inner = smb_shape(m, n)
        square = True
        for b in smb:
            t = lift_smb(b, m, n)
            tau = balanced_to_word(t, m + n)
            chain = project_word(lat, tau)
            mu = frozenset(t[r][c] for r in range(len(inner)) for c in range(inner[r]))
            square &= chain in shortest
            square &= intra_class_hyperplanes(g, tau) == mu
            square &= chain_to_cycles(lat, chain) == psi(varsigma(b, m, n), m, n)
        counts = len(smb) == len(words) == len(shortest)
        ok = counts and bijective and descents and square
        yield Check("smc", f"m={m} n={n}", ok,
                    f"|SMB|={len(smb)} |R(w)|={len(words)} |shortest|={len(shortest)}")


SUITES: dict[str, Callable[[int], Iterator[Check]]] = {
    "3equiv": suite_3equiv,
    "quasi-schur": suite_quasi_schur,
    "smc": suite_smc,
}


def run_suites(names: list[str], max_size: int) -> Iterator[Check]:
    if max_size < 2:
        raise ArgumentError("max size must be at least 2")
    check_cells(comb(max_size, 2), "verification")
    for name in names:
        yield from SUITES[name](max_size)
