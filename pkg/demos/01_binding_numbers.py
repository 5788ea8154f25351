"""
Binding numbers
===============

The binding number of G is the smallest ratio |N(X)|/|X| over nonempty
vertex sets X whose neighbourhood is not all of V(G).  Small graphs are
cheap to scan exhaustively, so every value below is exact.
"""

from fractions import Fraction

from bindlab import generators as gen
from bindlab.binding import binding_number, binding_number_pruned, woodall_bound

# A star is fragile: its leaves share one neighbour.
for m in range(1, 6):
    bw = binding_number(gen.star(m))
    print(f"K_1,{m}: bind = {bw.value}, attained by X = {bw.witness_set}")

# Cycles sit a little above 1; odd cycles are slightly more robust.
for n in range(3, 10):
    print(f"C_{n}: bind = {binding_number(gen.cycle(n)).value}")

# The exhaustive scan and the branch-and-bound search agree, witness included.
G = gen.random_gnp(14, Fraction(3, 5), seed=7)
print(binding_number(G) == binding_number_pruned(G))

# A large binding number pins the minimum degree from below.
chk = woodall_bound(G)
print(f"min degree {chk.min_degree} >= n - (n-1)/bind = {chk.bound}: {chk.holds}")
