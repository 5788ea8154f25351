"""
Binding thresholds and counterexample hunting
=============================================

Graphs of order n >= ((a+2b)(a+b-2)+2)/b with binding number above
(a+2b-1)(n-1)/(bn-(a+b)) are fractional ID-[a,b]-factor-critical covered.
A campaign re-checks that on random graphs and, in the non-strict mode,
looks for graphs sitting right at the threshold.
"""

from fractions import Fraction

from bindlab import generators as gen
from bindlab.report import emit_report
from bindlab.theorem import binding_threshold, order_threshold, run_campaign, theorem1_threshold

for a, b in [(2, 2), (2, 3), (3, 3)]:
    n0 = order_threshold((a, b))
    print(f"[{a},{b}] needs n >= {n0}; threshold at n=20 is {binding_threshold(20, (a, b))}")

# The covered version asks for a larger binding number than the older bound.
for n in (7, 10, 20):
    print(n, binding_threshold(n, (2, 2)), ">", theorem1_threshold(n, 2))

corpus = list(gen.gnp_corpus(range(7, 12), [Fraction(7, 10), Fraction(9, 10)], range(40)))
report = run_campaign(corpus, (2, 2), "theorem2")
print(emit_report(report, "text"))

# Classical extremal shapes: a clique joined to an independent set, and
# complete multipartite graphs.  Their binding numbers come in steps, so a
# wider slack shows which ones land near the threshold.
extremal = [gen.complete_split(p, q) for p in range(3, 10) for q in range(1, 6) if p + q >= 7]
extremal += [gen.complete_multipartite(*parts) for parts in [(2, 2, 2, 2), (3, 3, 3), (1, 2, 2, 2), (2, 2, 2, 2, 2)]]
scan = run_campaign(extremal, (2, 2), "conjecture1", slack=Fraction(1, 2))
print(emit_report(scan, "text"))
