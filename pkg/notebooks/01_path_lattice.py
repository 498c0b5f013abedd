"""
The tubing lattice of the path P4
=================================

Build L(P4) as a quotient of the weak order on S4, look at one equivalence
class, list the nine maximal chains as cycle words and assemble the chain
function F_P4 from their descent sets.
"""

from tubelat.graph import path
from tubelat.qsym import chain_function_fg, expand_in_basis, lmf
from tubelat.shortest import chain_to_cycles
from tubelat.tubing import build_lattice, g_tree, longest_chains, maximal_chains, shortest_chains

g = path(4)
lat = build_lattice(g)
print(f"L(P4) has {len(lat.elements)} elements and {len(lat.covers)} cover relations")

# each class is an interval of the weak order; its minimum is a G-permutation
idx = lat.index((1, 3, 4, 2))
members = sorted(w for w, c in lat.class_of.items() if c == idx)
print("class of 1342:", [''.join(map(str, w)) for w in members])
print("shared G-tree:", g_tree(g, (1, 3, 4, 2)))

# maximal chains, read as products of adjacent cycles between class maxima
chains = maximal_chains(lat)
print(f"\n{len(chains)} maximal chains "
      f"({len(longest_chains(lat))} longest, {len(shortest_chains(lat))} shortest)")
for c in chains:
    gamma = chain_to_cycles(lat, c)
    print(f"  {str(gamma):34s} Des = {sorted(gamma.descents())}")

# the generating function over all chains is not homogeneous
f = chain_function_fg(g)
print("\nF_P4 =", f)
print("longest chains only:", lmf(g))

# its degree-5 part peels into quasisymmetric Schur functions with a negative sign
slice5 = expand_in_basis(f.degree_slice(5), "young_quasi_schur")
print("degree 5 in the quasi-Schur basis:", dict(slice5.coefficients), "positive:", slice5.positive)
