"""
Shortest chains of lollipop lattices
====================================

Shortest maximal chains of L(L_{m,n}) are counted by reduced words of
w_{m,n}. Follow one skew balanced tableau through the pipeline: lift it to a
full balanced tableau, read the reduced word with varsigma, turn it into a
cycle word with psi and check that the lifted walk projects to the same chain.
"""

from tubelat.graph import lollipop
from tubelat.perm import all_reduced_words, descent_set
from tubelat.shortest import chain_to_cycles, enumerate_smb, lift_smb, psi, varsigma, w_mn
from tubelat.tableau import balanced_to_word, format_tableau
from tubelat.tubing import build_lattice, project_word, shortest_chains

m, n = 3, 2
g = lollipop(m, n)
lat = build_lattice(g)
smb = enumerate_smb(m, n)
print(f"w_{{{m},{n}}} = {w_mn(m, n)}")
print(f"|SMB| = {len(smb)}, |R(w)| = {len(all_reduced_words(w_mn(m, n)))}, "
      f"shortest chains = {len(shortest_chains(lat))}")

for b in smb:
    sigma = varsigma(b, m, n)
    gamma = psi(sigma, m, n)
    print("\nB =")
    print(format_tableau(b))
    print("lift =")
    print(format_tableau(lift_smb(b, m, n)))
    print("sigma =", ''.join(map(str, sigma)), " Des =", sorted(descent_set(sigma)))
    print("gamma =", gamma, " Des =", sorted(gamma.descents()))

    # the lifted walk, with intra-class steps collapsed, is the same shortest chain
    chain = project_word(lat, balanced_to_word(lift_smb(b, m, n), m + n))
    print("square commutes:", chain_to_cycles(lat, chain) == gamma)
