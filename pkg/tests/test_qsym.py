from collections import Counter
from itertools import permutations
from math import comb

import pytest
from hypothesis import assume, given, strategies as st

import oracles
from strategies import compositions, permutations_of
from tubelat.errors import ArgumentError
from tubelat.graph import complete, lollipop, path
from tubelat.qsym import (
    QSymExpr, check_composition, comp_from_set, comp_mn, chain_function_fg, expand_in_basis,
    fundamental, lmf, lmf_lollipop, schur, set_from_comp, stanley_f, young_quasi_schur,
)
from tubelat.perm import inversion_count, longest
from tubelat.tableau import staircase
from tubelat.tubing import build_lattice, chain_word, longest_chains, maximal_chains


def brute_stanley(w):
    words = oracles.reduced_words(w)
    n = inversion_count(w)
    return QSymExpr(Counter(oracles.composition_of(oracles.descents(s), n) for s in words))


def brute_schur(shape):
    n = sum(shape)
    out = Counter()
    for t in oracles.brute_syt(shape):
        row = {x: r for r, rr in enumerate(t) for x in rr}
        out[oracles.composition_of({i for i in range(1, n) if row[i + 1] > row[i]}, n)] += 1
    return QSymExpr(out)


def brute_yqs(comp):
    n = sum(comp)
    return QSymExpr(Counter(oracles.composition_of(oracles.column_descents(y), n)
                            for y in oracles.brute_syct(comp)))


def partitions_of(n, top=None):
    top = n if top is None else top
    if n == 0:
        yield ()
        return
    for k in range(min(n, top), 0, -1):
        for rest in partitions_of(n - k, k):
            yield (k, *rest)


# compositions

def test_composition_set_round_trip():
    assert comp_from_set({2}, 3) == (2, 1)
    assert comp_from_set(set(), 3) == (3,)
    assert set_from_comp((1, 2, 1)) == ({1, 3}, 4)
    with pytest.raises(ArgumentError):
        comp_from_set({3}, 3)
    with pytest.raises(ArgumentError):
        check_composition((2, 0))


@given(compositions())
def test_set_from_comp_inverts_comp_from_set(alpha):
    s, n = set_from_comp(alpha)
    assert comp_from_set(s, n) == alpha


# expressions

def test_expression_arithmetic():
    a = fundamental({1}, 2)
    b = QSymExpr({(2,): 1})
    assert a + b - a == b
    assert 3 * a == a * 3 == QSymExpr({(1, 1): 3})
    assert not (a - a)
    assert (a + b).coefficient((1, 1)) == 1
    assert str(QSymExpr.from_pairs([((1, 2), 3), ((2, 1), -1)])) == "3*Q(1,2) - Q(2,1)"
    assert str(QSymExpr()) == "0"


def test_expression_degrees():
    e = QSymExpr({(1,): 1, (2, 1): 2})
    assert e.degrees() == [1, 3] and not e.is_homogeneous()
    assert e.degree_slice(3) == QSymExpr({(2, 1): 2})
    assert e.is_nonnegative() and not (-e).is_nonnegative()


def test_expression_json_round_trip():
    e = QSymExpr({(1, 2): -1, (3,): 4})
    assert QSymExpr.from_json(e.to_json()) == e
    assert e.to_json() == {"terms": [{"comp": [1, 2], "coeff": -1}, {"comp": [3], "coeff": 4}]}


# Stanley, Schur, quasisymmetric Schur

def test_stanley_of_321():
    assert stanley_f((3, 2, 1)) == QSymExpr({(1, 2): 1, (2, 1): 1})


@pytest.mark.parametrize("w", list(permutations(range(1, 5))))
def test_stanley_matches_brute_force(w):
    assert stanley_f(w) == brute_stanley(w)


@pytest.mark.parametrize("shape", [(1,), (2, 1), (3, 1), (2, 2), (3, 2), (2, 2, 1), (3, 2, 1), (4, 2, 1)])
def test_schur_matches_brute_force(shape):
    assert schur(shape) == brute_schur(shape)


@pytest.mark.parametrize("comp", [(1, 2), (2, 1), (2, 2), (1, 3), (1, 2, 1), (2, 1, 2), (3, 2, 1), (1, 1, 3)])
def test_young_quasi_schur_matches_brute_force(comp):
    assert young_quasi_schur(comp) == brute_yqs(comp)


def test_young_quasi_schur_doc_example():
    assert young_quasi_schur((2, 2)) == QSymExpr({(1, 2, 1): 1, (2, 2): 1})


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_schur_is_the_sum_of_rearranged_quasi_schurs(n):
    for lam in partitions_of(n):
        total = QSymExpr()
        for alpha in set(permutations(lam)):
            total = total + young_quasi_schur(alpha)
        assert total == schur(lam)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_stanley_of_longest_is_staircase_schur(n):
    assert stanley_f(longest(n)) == schur(staircase(n))


@given(permutations_of(min_n=2, max_n=5))
def test_stanley_is_schur_positive(w):
    assume(inversion_count(w) > 0)
    assert expand_in_basis(stanley_f(w), "schur").positive


def test_stanley_52134_is_a_single_schur():
    exp = expand_in_basis(stanley_f((5, 2, 1, 3, 4)), "schur")
    assert exp.coefficients == {(2, 1, 1, 1): 1} and exp.positive


# expansions

def test_expand_quasi_schur_into_itself():
    exp = expand_in_basis(young_quasi_schur((2, 1, 2)))
    assert exp.coefficients == {(2, 1, 2): 1} and exp.positive


def test_expand_q22_in_quasi_schur_basis():
    exp = expand_in_basis(QSymExpr({(2, 2): 1}))
    assert exp.coefficients == {(1, 2, 1): -1, (2, 2): 1}
    assert exp.exact and not exp.positive


def test_expand_leaves_residue_when_not_symmetric():
    exp = expand_in_basis(QSymExpr({(1, 2): 1}), "schur")
    assert not exp.exact and exp.residue == QSymExpr({(1, 2): 1})


def test_expand_unknown_basis():
    with pytest.raises(ArgumentError):
        expand_in_basis(QSymExpr(), "monomial")


@given(st.lists(st.tuples(compositions(max_size=5), st.integers(-3, 3)), max_size=4))
def test_expansion_reconstructs_input(pairs):
    expr = QSymExpr()
    for alpha, c in pairs:
        expr = expr + c * young_quasi_schur(alpha)
    exp = expand_in_basis(expr)
    assert exp.exact
    rebuilt = QSymExpr()
    for alpha, c in exp.coefficients.items():
        rebuilt = rebuilt + c * young_quasi_schur(alpha)
    assert rebuilt == expr


# chain functions of tubing lattices

def test_comp_mn():
    assert comp_mn(3, 1) == [(2, 3, 1), (3, 2, 1)]
    assert comp_mn(2, 2) == [(3, 2, 1)]
    assert comp_mn(1, 3) == [(3, 2, 1)]
    assert len(comp_mn(4, 1)) == 6


def test_lmf_path_four():
    assert lmf(path(4)) == QSymExpr({(2, 2, 1, 1): 1, (3, 2, 1): 1})
    assert lmf_lollipop(1, 3) == lmf(path(4))


@pytest.mark.parametrize("m,n", [(2, 0), (3, 0), (2, 1), (3, 1), (2, 2), (1, 3), (4, 1), (3, 2), (2, 3), (1, 4)])
def test_lmf_is_sum_of_quasi_schurs(m, n):
    rhs = QSymExpr()
    for alpha in comp_mn(m, n):
        rhs = rhs + young_quasi_schur(alpha)
    assert lmf(lollipop(m, n)) == rhs


def test_lmf_of_complete_graph_is_stanley():
    assert lmf(complete(4)) == stanley_f(longest(4))


def test_chain_function_p4_nine_chains():
    f = chain_function_fg(path(4))
    assert sum(c for _, c in f) == len(maximal_chains(build_lattice(path(4)))) == 9
    assert len(f) == 8 and f.coefficient((2, 1, 1)) == 2
    assert f == QSymExpr({(1, 1, 1): 1, (1, 2, 1): 1, (2, 1, 1): 2, (2, 2): 1, (1, 2, 1, 1): 1,
                          (3, 1, 1): 1, (2, 2, 1, 1): 1, (3, 2, 1): 1})


def test_chain_function_p4_degree_five_is_not_positive():
    exp = expand_in_basis(chain_function_fg(path(4)).degree_slice(5))
    assert exp.coefficients == {(1, 2, 1, 1): 2, (2, 1, 2): -1, (2, 2, 1): -1, (3, 1, 1): 1}
    assert exp.exact and not exp.positive


@pytest.mark.parametrize("m,n", [(2, 1), (3, 1), (2, 2), (1, 3), (4, 1), (3, 2)])
def test_chain_function_degree_range(m, n):
    degrees = chain_function_fg(lollipop(m, n)).degrees()
    assert degrees[0] == comb(m, 2) + n and degrees[-1] == comb(m + n, 2)


def test_chain_function_of_complete_graph_is_stanley():
    assert chain_function_fg(complete(4)) == stanley_f(longest(4))


def test_longest_chain_words_of_p4():
    lat = build_lattice(path(4))
    assert {chain_word(lat, c) for c in longest_chains(lat)} == {(1, 2, 1, 3, 2, 1), (1, 2, 3, 1, 2, 1)}


@pytest.mark.parametrize("m,n", [(2, 1), (3, 1), (2, 2), (3, 2), (4, 1), (2, 3)])
def test_lmf_is_homogeneous_of_top_degree(m, n):
    f = lmf(lollipop(m, n))
    assert f.is_homogeneous() and f.degrees() == [comb(m + n, 2)]
