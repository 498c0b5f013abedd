"""
Tableaux in English notation: row 1 on top, rows listed top to bottom.

A tableau is a tuple of rows; a row is a tuple of entries. ``None`` marks a
cell that is not part of the diagram (the inner shape of a skew tableau, or
a deleted cell), so row lengths always give the outer shape. Rows and
columns are 1-indexed in every public function.

The same representation covers standard Young tableaux, balanced tableaux,
Edelman-Greene P/Q tableaux, promotion intermediates (negative entries are
fine) and standard Young column tableaux on composition shapes.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterator, Optional, Sequence

from .errors import ArgumentError, InvariantError, check_cells
from .perm import Word, all_reduced_words, hyperplane_walk, is_reduced, longest, word_from_walk

__all__ = [
    "Rows", "staircase", "shape_of", "cells", "entry", "is_syt", "is_balanced",
    "walk_to_balanced", "balanced_to_walk", "word_to_balanced", "balanced_to_word",
    "eg_insert", "eg_q", "longest_p", "eg_reverse", "elementary_promotion", "promotion_sequence", "gamma",
    "is_n_row_shiftable", "shiftable_words", "is_syct", "rho_hat", "rho_hat_inverse",
    "tableau_descents", "syct_descents", "standardize", "enumerate_syt",
    "enumerate_syct", "enumerate_balanced", "tableau_to_json", "tableau_from_json",
    "syct_to_json", "syct_from_json", "format_tableau",
]

Rows = tuple[tuple[Optional[int], ...], ...]


def _freeze(rows: Sequence[Sequence[Optional[int]]]) -> Rows:
    return tuple(tuple(r) for r in rows)


def staircase(n: int) -> tuple[int, ...]:
    """The staircase partition st_n = (n-1, n-2, ..., 1)."""
    return tuple(range(n - 1, 0, -1))


def shape_of(t: Rows) -> tuple[int, ...]:
    return tuple(len(r) for r in t)


def cells(t: Rows) -> Iterator[tuple[int, int, int]]:
    """(row, column, entry) for every filled cell, 1-indexed."""
    for r, row in enumerate(t, 1):
        for c, x in enumerate(row, 1):
            if x is not None:
                yield r, c, x


def entry(t: Rows, r: int, c: int) -> Optional[int]:
    if 1 <= r <= len(t) and 1 <= c <= len(t[r - 1]):
        return t[r - 1][c - 1]
    return None


def _is_partition(shape: Sequence[int]) -> bool:
    return all(p >= 1 for p in shape) and all(a >= b for a, b in zip(shape, shape[1:]))


def is_syt(t: Rows) -> bool:
    if not _is_partition(shape_of(t)):
        return False
    vals = [x for _, _, x in cells(t)]
    if len(vals) != sum(shape_of(t)) or sorted(vals) != list(range(1, len(vals) + 1)):
        return False
    for r, row in enumerate(t):
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
        if r and any(t[r - 1][c] >= row[c] for c in range(len(row))):
            return False
    return True


def is_balanced(t: Rows) -> bool:
    """Every cell has as many smaller entries to its right as larger entries below.

    This is the hook condition (the entry is the (leg+1)-th smallest of its hook)
    split into arm and leg; it applies to straight, skew and holed diagrams alike.
    """
    vals = [x for _, _, x in cells(t)]
    if len(set(vals)) != len(vals):
        return False
    for r, c, x in cells(t):
        right = sum(1 for y in t[r - 1][c:] if y is not None and y < x)
        below = sum(1 for rr in range(r, len(t)) if c <= len(t[rr])
                    and t[rr][c - 1] is not None and t[rr][c - 1] > x)
        if right != below:
            return False
    return True


def walk_to_balanced(walk: Sequence[tuple[int, int]], n: int) -> Rows:
    """Put k in row a_k, column n - b_k + 1."""
    expected = {(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)}
    if len(walk) != len(expected) or set(walk) != expected:
        raise ArgumentError("a hyperplane walk must cross every H_{a,b} exactly once")
    grid = [[0] * k for k in staircase(n)]
    for k, (a, b) in enumerate(walk, 1):
        grid[a - 1][n - b] = k
    return _freeze(grid)


def balanced_to_walk(t: Rows, n: int) -> list[tuple[int, int]]:
    if shape_of(t) != staircase(n):
        raise ArgumentError(f"expected staircase shape {staircase(n)}")
    by_value = sorted((x, r, c) for r, c, x in cells(t))
    return [(r, n - c + 1) for _, r, c in by_value]


def word_to_balanced(letters: Sequence[int], n: int) -> Rows:
    return walk_to_balanced(hyperplane_walk(letters, n), n)


def balanced_to_word(t: Rows, n: int) -> Word:
    return word_from_walk(balanced_to_walk(t, n), n)


def eg_insert(letters: Sequence[int], n: Optional[int] = None) -> tuple[Rows, Rows]:
    """Edelman-Greene insertion; returns (P, Q)."""
    if n is None:
        n = max(letters, default=0) + 1
    if not is_reduced(letters, n):
        raise ArgumentError("Edelman-Greene insertion needs a reduced word")
    p: list[list[int]] = []
    q: list[list[int]] = []
    for t, x in enumerate(letters, 1):
        r = 0
        while True:
            if r == len(p):
                p.append([x])
                q.append([t])
                break
            row = p[r]
            if x > row[-1]:
                row.append(x)
                q[r].append(t)
                break
            k = bisect_left(row, x)
            z = row[k]
            if z == x:
                x = z + 1  # row unchanged, z+1 moves down
            else:
                row[k] = x
                x = z
            r += 1
    return _freeze(p), _freeze(q)


def eg_q(letters: Sequence[int], n: Optional[int] = None) -> Rows:
    return eg_insert(letters, n)[1]


def longest_p(n: int) -> Rows:
    """The insertion tableau shared by every reduced word of the longest element of S_n."""
    return tuple(tuple(range(i, n)) for i in range(1, n))


def eg_reverse(p: Rows, q: Rows) -> Word:
    """Undo Edelman-Greene insertion, removing the entries of Q from largest to smallest."""
    if shape_of(p) != shape_of(q):
        raise ArgumentError("P and Q must have the same shape")
    if not is_syt(q):
        raise ArgumentError("Q must be a standard Young tableau")
    rows = [list(r) for r in p]
    where = {x: (r, c) for r, c, x in cells(q)}
    out: list[int] = []
    for t in range(len(where), 0, -1):
        r, c = where[t]
        r -= 1
        if c != len(rows[r]):
            raise InvariantError("Q is out of step with P")
        y = rows[r].pop()
        for k in range(r - 1, -1, -1):
            row = rows[k]
            j = bisect_left(row, y) - 1
            if j < 0:
                raise ArgumentError("P is not an Edelman-Greene insertion tableau")
            w = row[j]
            if not (w == y - 1 and j + 1 < len(row) and row[j + 1] == y):
                row[j] = y
            y = w
        out.append(y)
    while rows and not rows[-1]:
        rows.pop()
    word = tuple(reversed(out))
    if eg_insert(word, max(word, default=0) + 1) != (_freeze(p), _freeze(q)):
        raise ArgumentError("(P, Q) is not the image of a reduced word")
    return word


def elementary_promotion(t: Rows) -> Rows:
    """One step of delta: slide along the evacuation path from the maximum entry."""
    grid = [list(r) for r in t]
    vals = [x for _, _, x in cells(t)]
    if not vals:
        return _freeze(grid)
    lo, hi = min(vals), max(vals)
    p, q = next((r, c) for r, c, x in cells(t) if x == hi)
    while (p, q) != (1, 1):
        if q == 1:
            nxt = (p - 1, q)
        elif p == 1:
            nxt = (p, q - 1)
        else:
            up, left = grid[p - 2][q - 1], grid[p - 1][q - 2]
            nxt = (p - 1, q) if up > left else (p, q - 1)
        grid[p - 1][q - 1] = grid[nxt[0] - 1][nxt[1] - 1]
        p, q = nxt
    grid[0][0] = lo - 1
    return _freeze(grid)


def promotion_sequence(t: Rows) -> list[Rows]:
    """[T^(0), T^(1), ..., T^(M)] with T^(k) = delta(T^(k-1))."""
    seq = [_freeze(t)]
    size = sum(1 for _ in cells(t))
    for _ in range(size):
        seq.append(elementary_promotion(seq[-1]))
    return seq


def gamma(t: Rows) -> Word:
    """rho_{M-k+1} is the column of the largest entry of T^(k-1)."""
    seq = promotion_sequence(t)
    size = len(seq) - 1
    word = [0] * size
    for k in range(1, size + 1):
        cur = seq[k - 1]
        top = max(x for _, _, x in cells(cur))
        word[size - k] = next(c for _, c, x in cells(cur) if x == top)
    return tuple(word)


def is_n_row_shiftable(t: Rows, n: int) -> bool:
    """T(i,j) < T(i+1,j-1) for rows i = N-n-1..N-2 and 2 <= j <= lambda_i.

    Row 0 is read as all zeros, so it never fails. N is the number of rows
    plus one, which also covers partial staircases (c^(N-c), c-1, ..., 1).
    """
    big_n = len(t) + 1
    shape = shape_of(t)
    if not t:
        if n != 0:
            raise ArgumentError("the empty tableau only admits n = 0")
        return True
    if not _is_partition(shape) or any(a - b > 1 for a, b in zip(shape, shape[1:])) or shape[-1:] != (1,):
        raise ArgumentError("n-row-shiftability needs a (partial) staircase shape")
    if not 0 <= n < big_n:
        raise ArgumentError(f"n must lie in 0..{big_n - 1}")
    for i in range(max(1, big_n - n - 1), big_n - 1):
        row, below = t[i - 1], t[i]
        for j in range(2, len(row) + 1):
            if not row[j - 1] < below[j - 2]:
                return False
    return True


def shiftable_words(n: int, method: str = "tableau") -> frozenset[Word]:
    """Reduced words of the longest element of S_{n+1} with shiftable Q-tableau.

    method="lattice" uses the lattice / reverse-lattice characterization instead.
    """
    words = all_reduced_words(longest(n + 1))
    if method == "tableau":
        return frozenset(w for w in words if is_n_row_shiftable(eg_q(w, n + 1), n))
    if method == "lattice":
        from .shuffle import is_lattice_word, is_reverse_lattice_word
        return frozenset(w for w in words
                         if is_lattice_word(w) and is_reverse_lattice_word(w)
                         and all(w.count(i) == n - i + 1 for i in range(1, n + 1)))
    raise ArgumentError(f"unknown method {method!r}")


# composition tableaux

def is_syct(t: Rows) -> bool:
    """Standard Young column tableau on the composition shape given by the row lengths."""
    comp = shape_of(t)
    if any(p < 1 for p in comp):
        return False
    vals = [x for _, _, x in cells(t)]
    if len(vals) != sum(comp) or sorted(vals) != list(range(1, len(vals) + 1)):
        return False
    if any(a >= b for row in t for a, b in zip(row, row[1:])):
        return False
    if any(t[i][0] >= t[i + 1][0] for i in range(len(t) - 1)):
        return False
    inf = float("inf")

    def val(i: int, k: int) -> float:
        x = entry(t, i, k)
        return inf if x is None else x

    for j in range(1, len(t) + 1):
        for k in range(1, len(t[j - 1])):
            top = val(j, k + 1)
            for i in range(j + 1, len(t) + 1):
                if val(i, k) <= top and not val(i, k + 1) < top:
                    return False
    return True


def rho_hat(y: Rows) -> Rows:
    """Sort rows into partition shape, then sort every column increasingly."""
    rows = sorted((list(r) for r in y), key=len, reverse=True)
    for c in range(len(rows[0]) if rows else 0):
        col = sorted(r[c] for r in rows if len(r) > c)
        k = 0
        for r in rows:
            if len(r) > c:
                r[c] = col[k]
                k += 1
    return _freeze(rows)


def rho_hat_inverse(t: Rows) -> Rows:
    """Rebuild a column tableau column by column; column 1 stays put."""
    rows = [[r[0]] for r in t]
    ncols = len(t[0]) if t else 0
    for c in range(2, ncols + 1):
        col = sorted(r[c - 1] for r in t if len(r) >= c)
        placed: set[int] = set()
        for x in col:
            target = None
            for i in range(len(rows) - 1, -1, -1):
                if i not in placed and len(rows[i]) == c - 1 and rows[i][-1] < x:
                    target = i
                    break
            if target is None:
                raise InvariantError(f"no row accepts {x} in column {c}")
            rows[target].append(x)
            placed.add(target)
    return _freeze(rows)


def tableau_descents(t: Rows) -> frozenset[int]:
    """i is a descent when i+1 sits in a strictly lower row than i."""
    row_of = {x: r for r, _, x in cells(t)}
    return frozenset(i for i in row_of if i + 1 in row_of and row_of[i + 1] > row_of[i])


def syct_descents(y: Rows) -> frozenset[int]:
    return tableau_descents(rho_hat(y))


def standardize(t: Rows) -> Rows:
    """Replace the i-th smallest entry by i, keeping holes."""
    order = {x: k for k, x in enumerate(sorted(x for _, _, x in cells(t)), 1)}
    return tuple(tuple(None if x is None else order[x] for x in row) for row in t)


# enumeration

def enumerate_syt(shape: Sequence[int]) -> list[Rows]:
    shape = tuple(shape)
    if not _is_partition(shape):
        raise ArgumentError(f"{shape} is not a partition")
    check_cells(sum(shape), "SYT enumeration")
    grid = [[0] * k for k in shape]
    filled = [0] * len(shape)
    out: list[Rows] = []

    def place(v: int) -> None:
        if v > sum(shape):
            out.append(_freeze(grid))
            return
        for r in range(len(shape)):
            c = filled[r]
            if c < shape[r] and (r == 0 or filled[r - 1] > c):
                grid[r][c] = v
                filled[r] += 1
                place(v + 1)
                filled[r] -= 1

    place(1)
    return sorted(out)


def enumerate_syct(comp: Sequence[int]) -> list[Rows]:
    """All SYCT of a composition shape, checking rule 3 as each entry lands."""
    comp = tuple(comp)
    if any(p < 1 for p in comp):
        raise ArgumentError(f"{comp} is not a composition")
    total = sum(comp)
    check_cells(total, "SYCT enumeration")
    grid = [[0] * k for k in comp]
    filled = [0] * len(comp)
    out: list[Rows] = []

    def ok(j: int, col: int) -> bool:
        # placing the current (largest so far) value at (j, col), col >= 2:
        # any lower row whose column col-1 is already filled must already own column col
        for i in range(j + 1, len(comp)):
            if filled[i] >= col - 1 and filled[i] < col:
                return False
        return True

    def place(v: int) -> None:
        if v > total:
            out.append(_freeze(grid))
            return
        for r in range(len(comp)):
            c = filled[r]
            if c >= comp[r]:
                continue
            if c == 0 and r > 0 and filled[r - 1] == 0:
                continue
            if c >= 1 and not ok(r, c + 1):
                continue
            grid[r][c] = v
            filled[r] += 1
            place(v + 1)
            filled[r] -= 1

    place(1)
    return sorted(out)


def enumerate_balanced(outer: Sequence[int], inner: Sequence[int] = ()) -> list[Rows]:
    """All balanced fillings of outer // inner with entries 1..#cells.

    Values are placed from largest to smallest; at placement time the cells of
    the arm still empty will hold smaller values and the filled leg cells hold
    larger ones, so the balance condition is decided on the spot.
    """
    outer = tuple(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    diagram = [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]
    total = len(diagram)
    check_cells(total, "balanced tableau enumeration")
    grid: list[list[Optional[int]]] = [[None] * k for k in outer]
    arm = {(r, c): [(r, cc) for cc in range(c + 1, outer[r])] for r, c in diagram}
    leg = {(r, c): [(rr, c) for rr in range(r + 1, len(outer)) if outer[rr] > c and inner[rr] <= c]
           for r, c in diagram}
    out: list[Rows] = []

    def place(v: int) -> None:
        if v == 0:
            out.append(_freeze(grid))
            return
        for r, c in diagram:
            if grid[r][c] is not None:
                continue
            empty_arm = sum(1 for a, b in arm[(r, c)] if grid[a][b] is None)
            full_leg = sum(1 for a, b in leg[(r, c)] if grid[a][b] is not None)
            if empty_arm == full_leg:
                grid[r][c] = v
                place(v - 1)
                grid[r][c] = None

    place(total)
    return sorted(out, key=lambda t: tuple(tuple(-1 if x is None else x for x in r) for r in t))


# serialization

def tableau_to_json(t: Rows) -> dict:
    inner = []
    rows = []
    for row in t:
        k = 0
        while k < len(row) and row[k] is None:
            k += 1
        inner.append(k)
        rows.append(list(row[k:]))
    obj = {"outer": list(shape_of(t)), "rows": rows}
    if any(inner):
        obj["inner"] = inner
    return obj


def tableau_from_json(obj: dict) -> Rows:
    inner = obj.get("inner") or [0] * len(obj["rows"])
    return tuple(tuple([None] * k + list(r)) for k, r in zip(inner, obj["rows"]))


def syct_to_json(y: Rows) -> dict:
    return {"comp": list(shape_of(y)), "rows": [list(r) for r in y]}


def syct_from_json(obj: dict) -> Rows:
    return _freeze(obj["rows"])


def format_tableau(t: Rows) -> str:
    width = max((len(str(x)) for _, _, x in cells(t)), default=1)
    lines = []
    for row in t:
        lines.append(" ".join(("." if x is None else str(x)).rjust(width) for x in row))
    return "\n".join(lines)
