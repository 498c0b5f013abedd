"""
Longest chains of lollipop lattices
===================================

For the lollipop L_{m,n} the longest maximal chains of L(L_{m,n}) come from
reduced words of the longest permutation. Three descriptions of that word set
agree: commuting shuffles, Edelman-Greene preimages of n-row-shiftable
tableaux, and chain words read off the lattice. Their descent generating
function is a sum of Young quasisymmetric Schur functions.
"""

from tubelat.graph import lollipop
from tubelat.perm import all_reduced_words, longest
from tubelat.qsym import comp_mn, expand_in_basis, lmf
from tubelat.shuffle import shuf
from tubelat.tableau import eg_q, format_tableau, is_n_row_shiftable
from tubelat.tubing import build_lattice, chain_word, longest_chains

# the Edelman-Greene recording tableau of one reduced word
word = (2, 1, 3, 2, 1, 3)
print("Q(213213):")
print(format_tableau(eg_q(word, 4)))

for m, n in [(3, 1), (2, 2), (3, 2), (4, 1), (2, 3)]:
    big = m + n
    shuffles = shuf(m, n)
    shiftable = {w for w in all_reduced_words(longest(big)) if is_n_row_shiftable(eg_q(w, big), n)}
    lat = build_lattice(lollipop(m, n))
    chains = {chain_word(lat, c) for c in longest_chains(lat)}
    same = shuffles == shiftable == chains
    print(f"\nL_{{{m},{n}}}: {len(shuffles)} words, three descriptions agree: {same}")

    # lmf expands positively, one quasi-Schur term per composition in comp(m, n)
    expansion = expand_in_basis(lmf(lollipop(m, n)), "young_quasi_schur")
    print("  comp(m,n):", comp_mn(m, n))
    print("  quasi-Schur coefficients:", dict(expansion.coefficients))
