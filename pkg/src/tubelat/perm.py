"""
Permutations of [N] in one-line notation and reduced words acting on positions.

Everything is 1-indexed. A permutation is a tuple ``w`` with ``w[i-1] = w(i)``.
A reduced word ``(i_1, ..., i_l)`` is read left to right starting from the
identity, and the letter ``i`` swaps the entries in positions ``i`` and ``i+1``
(right weak order).

>>> evaluate((2, 1, 3, 2, 1, 3), 4)
(4, 3, 2, 1)
>>> sorted(inversions((4, 2, 3, 1)))
[(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ArgumentError

__all__ = [
    "Perm", "Word", "Hyperplane",
    "identity", "longest", "is_permutation", "apply_transposition", "evaluate",
    "inversion_count", "is_reduced", "inversions", "weak_order_covers", "weak_leq",
    "all_reduced_words", "descent_set", "tits_neighbors", "commutation_neighbors",
    "hyperplane_walk", "word_from_walk", "parse_word", "format_word",
    "perm_to_json", "word_to_json", "word_from_json",
]

# one-line notation, 1-indexed values
Perm = tuple[int, ...]
# letters in 1..N-1
Word = tuple[int, ...]
# hyperplane H_{a,b}, a < b
Hyperplane = tuple[int, int]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    """The longest element of S_n, [n, n-1, ..., 1]."""
    return tuple(range(n, 0, -1))


def is_permutation(w: Sequence[int]) -> bool:
    return len(w) >= 1 and sorted(w) == list(range(1, len(w) + 1))


def _check_letters(letters: Iterable[int], n: int) -> None:
    for x in letters:
        if not 1 <= x <= n - 1:
            raise ArgumentError(f"letter {x} outside 1..{n - 1}")


def apply_transposition(w: Sequence[int], i: int) -> Perm:
    """Swap the entries in positions i and i+1."""
    if not 1 <= i <= len(w) - 1:
        raise ArgumentError(f"position {i} outside 1..{len(w) - 1}")
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def evaluate(letters: Sequence[int], n: int) -> Perm:
    """Apply the letters left to right to the identity of S_n."""
    _check_letters(letters, n)
    out = list(range(1, n + 1))
    for i in letters:
        out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def inversion_count(w: Sequence[int]) -> int:
    return sum(1 for x, y in combinations(w, 2) if x > y)


def is_reduced(letters: Sequence[int], n: int) -> bool:
    # each letter must create a new inversion; one pass, no quadratic recount
    _check_letters(letters, n)
    out = list(range(1, n + 1))
    for i in letters:
        if out[i - 1] > out[i]:
            return False
        out[i - 1], out[i] = out[i], out[i - 1]
    return True


def inversions(w: Sequence[int]) -> frozenset[Hyperplane]:
    """Value pairs (a, b), a < b, with b appearing before a."""
    return frozenset((y, x) for x, y in combinations(w, 2) if x > y)


def weak_order_covers(w: Sequence[int]) -> list[tuple[Perm, int]]:
    """Upper covers w * s_i for every ascent i of w, with the position i."""
    return [(apply_transposition(w, i), i) for i in range(1, len(w)) if w[i - 1] < w[i]]


def weak_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """u <= v in the right weak order, i.e. Inv(u) is contained in Inv(v)."""
    return inversions(u) <= inversions(v)


@lru_cache(maxsize=None)
def _words(w: Perm) -> tuple[Word, ...]:
    n = len(w)
    if all(w[i] < w[i + 1] for i in range(n - 1)):
        return ((),)
    out: list[Word] = []
    for i in range(1, n):
        if w[i - 1] > w[i]:
            # strip a final letter i: w = (w s_i) s_i
            for prefix in _words(apply_transposition(w, i)):
                out.append(prefix + (i,))
    return tuple(sorted(out))


def all_reduced_words(w: Sequence[int]) -> tuple[Word, ...]:
    """All reduced words of w, lexicographically sorted."""
    w = tuple(w)
    if not is_permutation(w):
        raise ArgumentError(f"{w} is not a permutation")
    return _words(w)


def descent_set(letters: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(letters)) if letters[i - 1] > letters[i])


def commutation_neighbors(letters: Sequence[int]) -> set[Word]:
    out = set()
    for k in range(len(letters) - 1):
        x, y = letters[k], letters[k + 1]
        if abs(x - y) > 1:
            new = list(letters)
            new[k], new[k + 1] = y, x
            out.add(tuple(new))
    return out


def tits_neighbors(letters: Sequence[int]) -> set[Word]:
    """Words one braid move or one commutation move away."""
    out = commutation_neighbors(letters)
    for k in range(len(letters) - 2):
        x, y, z = letters[k:k + 3]
        if x == z and abs(x - y) == 1:
            new = list(letters)
            new[k:k + 3] = [y, x, y]
            out.add(tuple(new))
    return out


def hyperplane_walk(letters: Sequence[int], n: int) -> list[Hyperplane]:
    """The hyperplanes H_{a,b} crossed by the chain of a reduced word."""
    if not is_reduced(letters, n):
        raise ArgumentError(f"{format_word(letters)} is not reduced")
    out = list(range(1, n + 1))
    walk = []
    for i in letters:
        a, b = out[i - 1], out[i]
        walk.append((a, b))
        out[i - 1], out[i] = b, a
    return walk


def word_from_walk(walk: Sequence[Hyperplane], n: int) -> Word:
    """Inverse of hyperplane_walk: find the position where a and b are adjacent."""
    out = list(range(1, n + 1))
    pos = {v: v - 1 for v in out}
    letters = []
    for a, b in walk:
        if not a < b:
            raise ArgumentError(f"hyperplane ({a},{b}) needs a < b")
        p = pos[a]
        if p + 1 >= n or out[p + 1] != b:
            raise ArgumentError(f"H_{{{a},{b}}} is not crossable here")
        out[p], out[p + 1] = b, a
        pos[a], pos[b] = p + 1, p
        letters.append(p + 1)
    return tuple(letters)


def parse_word(text: str) -> Word:
    """Digits run together ("213213") or comma/space separated ("10,2,3")."""
    text = text.strip()
    if not text:
        return ()
    if "," in text or " " in text:
        parts = [p for p in text.replace(",", " ").split() if p]
        return tuple(int(p) for p in parts)
    if not text.isdigit():
        raise ArgumentError(f"cannot parse word {text!r}")
    return tuple(int(c) for c in text)


def format_word(letters: Sequence[int]) -> str:
    if all(x < 10 for x in letters):
        return "".join(str(x) for x in letters)
    return ",".join(str(x) for x in letters)


def perm_to_json(w: Sequence[int]) -> list[int]:
    return list(w)


def word_to_json(letters: Sequence[int], n: int) -> dict:
    return {"n": n, "letters": list(letters)}


def word_from_json(obj: dict) -> tuple[Word, int]:
    return tuple(obj["letters"]), int(obj["n"])
