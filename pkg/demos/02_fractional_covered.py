"""
Fractional [a,b]-covered graphs, two ways
=========================================

A graph is fractional [a,b]-covered when every edge can be given weight 1
inside some edge weighting h: E -> [0,1] whose vertex sums all lie in [a,b].
The structural test checks one inequality per vertex subset S; the oracle
searches half-integral weightings directly.  They must always agree.
"""

from bindlab import generators as gen
from bindlab.factors import covered_oracle, fractional_factor_exists, is_fractional_ab_covered

# The triangle has a fractional perfect matching (all weights 1/2) ...
h = fractional_factor_exists(gen.complete(3), (1, 1))
print("K_3 weights:", [str(w) for w in h.weights])

# ... but no edge of it can carry weight 1, so it is not [1,1]-covered.
print("K_3 covered:", is_fractional_ab_covered(gen.complete(3), (1, 1)).covered)

# When the structural test fails it names the offending set S.
verdict = is_fractional_ab_covered(gen.cycle(5), (1, 1))
w = verdict.witness
print(f"C_5: S={w.S} T={w.T} eps={w.epsilon} delta={w.delta}")
print("oracle:", covered_oracle(gen.cycle(5), (1, 1)))

# Agreement on a handful of graph families.
families = {
    "K_4": gen.complete(4),
    "C_6": gen.cycle(6),
    "W_5": gen.wheel(5),
    "K_3,3": gen.complete_bipartite(3, 3),
    "K_2,2,2": gen.complete_multipartite(2, 2, 2),
}
for name, G in families.items():
    for ab in [(1, 1), (1, 2), (2, 2), (2, 3)]:
        s = is_fractional_ab_covered(G, ab).covered
        o = covered_oracle(G, ab).covered
        print(f"{name:8s} {ab}: structural={s} oracle={o}")
