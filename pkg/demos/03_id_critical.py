"""
Deleting independent sets
=========================

G is fractional ID-[a,b]-factor-critical covered when G - I stays
fractional [a,b]-covered for every independent set I.  The profile view
counts which deletion sizes break the property.
"""

from fractions import Fraction

from bindlab import generators as gen
from bindlab.idcritical import id_critical_profile, is_id_critical_covered

for name, G in {
    "K_7": gen.complete(7),
    "K_3,3": gen.complete_bipartite(3, 3),
    "K_4 v 3K_1": gen.complete_split(4, 3),
    "G(10, 4/5)": gen.random_gnp(10, Fraction(4, 5), seed=3),
}.items():
    v = is_id_critical_covered(G, (2, 2))
    print(f"{name}: holds={v.holds}", "" if v.holds else f"first failing I={v.failing_set}")
    for size, prof in id_critical_profile(G, (2, 2)).items():
        print(f"    |I|={size}: {prof.passed} pass, {prof.failed} fail")

# Whether I = {} counts changes the answer for K_3 at [1,1].
K3 = gen.complete(3)
print(is_id_critical_covered(K3, (1, 1)).holds, is_id_critical_covered(K3, (1, 1), include_empty=False).holds)
