"""Evaluate the rapid-mixing degree-spread conditions.

The swap chains mix rapidly whenever the product of the degree spreads is
dominated by slack terms built from the extreme degrees and class sizes.
The checkers report exact integer certificates; "not applicable" (window
violated) is distinct from "fails".  The Erdos-Renyi windows answer the
same question for random-graph degree sequences: for which edge
probabilities does the condition hold with high probability?
"""

from swapmc import (
    BipartiteDegreeSequence,
    bipartite_spread_condition,
    bounds_of,
    directed_spread_condition,
    erdos_renyi_window,
)
from swapmc.degrees import DegreeBounds

print("=== bipartite spread condition ===")
cases = [
    ("regular 2 on 4+4", DegreeBounds(c1=2, c2=2, d1=2, d2=2, n=4, m=4)),
    ("spread 1..5 on 6+6", DegreeBounds(c1=1, c2=5, d1=1, d2=5, n=6, m=6)),
    ("almost-half-regular", DegreeBounds(c1=2, c2=3, d1=1, d2=4, n=8, m=8)),
    ("window violated (c2=n)", DegreeBounds(c1=1, c2=6, d1=1, d2=3, n=6, m=8)),
]
for label, b in cases:
    rep = bipartite_spread_condition(b)
    print(f"{label:28s} lhs={rep.lhs:>3}  rhs={rep.rhs!s:>4}  -> {rep.verdict}")

print("\n=== directed spread condition ===")
for label, b in [
    ("regular k=2 on n=6", DegreeBounds(c1=2, c2=2, d1=2, d2=2, n=6, m=6)),
    ("3..5 on n=8", DegreeBounds(c1=3, c2=5, d1=3, d2=5, n=8, m=8)),
    ("1..6 on n=8", DegreeBounds(c1=1, c2=6, d1=1, d2=6, n=8, m=8)),
]:
    rep = directed_spread_condition(b)
    print(f"{label:28s} lhs={rep.lhs:>3}  rhs={rep.rhs!s:>4}  -> {rep.verdict}")

print("\nbounds_of extracts the intervals from a concrete sequence:")
seq = BipartiteDegreeSequence((3, 2, 3, 3, 2, 3), (3, 3, 2, 3, 2, 3))
b = bounds_of(seq)
print("  ", b)
print("  ", bipartite_spread_condition(b).verdict)

print("\n=== Erdos-Renyi windows ===")
print("size        p     windows                                   verdict")
for n, p in [(1000, 0.5), (100, 0.5), (1000, 0.1)]:
    rep = erdos_renyi_window("bipartite", n, p, m=n)
    lo, hi = rep.windows[0]
    print(f"n=m={n:<5} {p:<5} bipartite [{lo:.4f}, {hi:.4f}]               {rep.verdict}")
for n, p in [(1000, 0.5), (1000, 0.25)]:
    rep = erdos_renyi_window("directed", n, p)
    lo, hi = rep.windows[0]
    print(f"n={n:<7} {p:<5} directed  [{lo:.4f}, {hi:.4f}]               {rep.verdict}")
