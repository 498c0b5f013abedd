"""
Commuting shuffles of a reduced word of v_{m,n} with a shiftable word of the
longest element of S_{n+1}, and the set Shuf(m, n) they generate.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Sequence

from .errors import ArgumentError, CapacityError, InvariantError
from .perm import Perm, Word, all_reduced_words, is_reduced
from .tableau import Rows, shiftable_words

__all__ = [
    "TaggedShuffle", "v_word", "commuting_shuffles", "shuf", "decreasing_sequences",
    "is_lattice_word", "is_reverse_lattice_word", "stacked_q", "MAX_SHUF_N",
]

MAX_SHUF_N = 7


@dataclass(frozen=True, order=True)
class TaggedShuffle:
    letters: Word
    sigma_indices: tuple[int, ...]  # I, 1-indexed positions carrying the v_{m,n} word
    tau_indices: tuple[int, ...]    # J

    def to_json(self) -> dict:
        return {"letters": list(self.letters), "I": list(self.sigma_indices), "J": list(self.tau_indices)}


def v_word(m: int, n: int) -> Perm:
    """[m, m+1, ..., m+n, m-1, ..., 1]."""
    if m < 1 or n < 0:
        raise ArgumentError(f"v_{{m,n}} needs m >= 1, n >= 0, got ({m},{n})")
    return tuple(range(m, m + n + 1)) + tuple(range(m - 1, 0, -1))


def commuting_shuffles(sigma: Sequence[int], tau: Sequence[int], n_total: int) -> frozenset[TaggedShuffle]:
    """Closure of sigma.tau under swapping a sigma letter with the tau letter after it
    when the two letters commute."""
    sigma, tau = tuple(sigma), tuple(tau)
    word = sigma + tau
    if not is_reduced(word, n_total):
        raise ArgumentError("the concatenation sigma.tau must be reduced")
    start = (word, frozenset(range(1, len(sigma) + 1)))
    seen = {start}
    queue = deque([start])
    while queue:
        w, idx = queue.popleft()
        for i in range(1, len(w)):
            if i in idx and i + 1 not in idx and abs(w[i - 1] - w[i]) > 1:
                nw = list(w)
                nw[i - 1], nw[i] = nw[i], nw[i - 1]
                state = (tuple(nw), (idx - {i}) | {i + 1})
                if state not in seen:
                    seen.add(state)
                    queue.append(state)
    total = range(1, len(word) + 1)
    return frozenset(
        TaggedShuffle(w, tuple(sorted(idx)), tuple(k for k in total if k not in idx)) for w, idx in seen
    )


def shuf(m: int, n: int, tagged: bool = False):
    """Shuf(m, n) as plain words (or every tagged shuffle if tagged=True)."""
    if m < 1 or n < 0:
        raise ArgumentError(f"Shuf needs m >= 1, n >= 0, got ({m},{n})")
    if m + n > MAX_SHUF_N:
        raise CapacityError(f"Shuf is capped at m + n <= {MAX_SHUF_N}")
    big_n = m + n
    taus = sorted(shiftable_words(n))
    out = set()
    for sigma in all_reduced_words(v_word(m, n)):
        for tau in taus:
            out |= commuting_shuffles(sigma, tau, big_n)
    if tagged:
        return frozenset(out)
    return frozenset(t.letters for t in out)


def decreasing_sequences(sigma: Sequence[int], m: int, n: int) -> tuple[dict[int, tuple[int, ...]], tuple[int, ...]]:
    """The index sequences d^k (m-1 <= k <= m+n-1) and a of a word of v_{m,n}.

    d^k records the steps that carry the value k+1 one place to the left and
    a records the steps that carry the value 1 one place to the right.
    """
    big_n = m + n
    if not is_reduced(sigma, big_n):
        raise InvariantError("not a reduced word")
    w = list(range(1, big_n + 1))
    moves: dict[int, list[int]] = {v: [] for v in range(m, big_n + 1)}
    ones: list[int] = []
    for t, i in enumerate(sigma, 1):
        left, right = w[i - 1], w[i]
        if right in moves:
            moves[right].append(t)
        if left == 1:
            ones.append(t)
        w[i - 1], w[i] = right, left
    if tuple(w) != v_word(m, n):
        raise InvariantError(f"word does not evaluate to v_{{{m},{n}}}")
    d = {v - 1: tuple(steps) for v, steps in moves.items()}
    for k, steps in d.items():
        if len(steps) != m - 1 or [sigma[s - 1] for s in steps] != [k - i + 1 for i in range(1, m)]:
            raise InvariantError(f"d^{k} has the wrong shape")
    if [sigma[s - 1] for s in ones] != list(range(1, big_n)):
        raise InvariantError("the ascending witness a is malformed")
    return d, tuple(ones)


def is_lattice_word(word: Sequence[int]) -> bool:
    """Every prefix has at least as many i as i+1."""
    counts: Counter[int] = Counter()
    for x in word:
        if x < 1:
            return False
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


def is_reverse_lattice_word(word: Sequence[int]) -> bool:
    return is_lattice_word(tuple(reversed(word)))


def stacked_q(q_sigma: Rows, q_tau: Rows, sigma_indices: Sequence[int], tau_indices: Sequence[int]) -> Rows:
    """Q(sigma) relabelled by I (rows of lengths m+n-1, ..., n+1) with the
    staircase Q(tau) relabelled by J placed underneath."""
    top = tuple(tuple(sigma_indices[x - 1] for x in row) for row in q_sigma)
    bottom = tuple(tuple(tau_indices[x - 1] for x in row) for row in q_tau)
    return top + bottom
