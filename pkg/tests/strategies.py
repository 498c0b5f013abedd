"""Hypothesis strategies shared by the property tests."""

from __future__ import annotations

from hypothesis import strategies as st

from tubelat.graph import all_filled_connected


@st.composite
def permutations_of(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return tuple(draw(st.permutations(range(1, n + 1))))


@st.composite
def reduced_words(draw, min_n=2, max_n=6):
    """A random reduced word: follow random ascents up the weak order."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    w = list(range(1, n + 1))
    word = []
    steps = draw(st.integers(min_value=0, max_value=n * (n - 1) // 2))
    for _ in range(steps):
        ascents = [i for i in range(1, n) if w[i - 1] < w[i]]
        if not ascents:
            break
        i = draw(st.sampled_from(ascents))
        w[i - 1], w[i] = w[i], w[i - 1]
        word.append(i)
    return tuple(word), n


@st.composite
def longest_words(draw, min_n=2, max_n=6):
    """A random reduced word of the longest element of S_n."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    w = list(range(1, n + 1))
    word = []
    while True:
        ascents = [i for i in range(1, n) if w[i - 1] < w[i]]
        if not ascents:
            return tuple(word), n
        i = draw(st.sampled_from(ascents))
        w[i - 1], w[i] = w[i], w[i - 1]
        word.append(i)


_GRAPHS = {n: list(all_filled_connected(n)) for n in range(1, 6)}


@st.composite
def filled_graphs(draw, min_n=2, max_n=5):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return draw(st.sampled_from(_GRAPHS[n]))


@st.composite
def compositions(draw, max_size=7):
    size = draw(st.integers(min_value=1, max_value=max_size))
    cuts = draw(st.sets(st.integers(min_value=1, max_value=size - 1))) if size > 1 else set()
    points = [0, *sorted(cuts), size]
    return tuple(b - a for a, b in zip(points, points[1:]))
