"""
How many barcodes can a graph carry?
====================================

On a tree every consistent barcode is realized, so the closed-form count
is exact.  On the 6-cycle it is only an upper bound.
"""

import time

from dmtrees.counting import (
    enumerate_achievable_diagrams,
    enumerate_consistent_diagrams,
    upper_bound_general,
    upper_bound_tree,
)
from dmtrees.graph import cycle_graph, nonisomorphic_trees

# Closed forms.
print("n=5,  k=1:", upper_bound_tree(5, 1))
print("n=11, k=5:", upper_bound_tree(11, 5))
print("n=21, k=5:", upper_bound_tree(21, 5))
print("n=12, b1=1, k=1:", upper_bound_general(12, 1, 1))

# Sharpness on every tree shape with five vertices.
for t in nonisomorphic_trees(5):
    n = t.n_simplices
    consistent = {d for k in range(len(t.edges) + 1) for d in enumerate_consistent_diagrams(n, k)}
    achievable = enumerate_achievable_diagrams(t)
    print(f"tree {t.edges}: {len(achievable)} achievable, {len(consistent)} consistent")

# The 6-cycle falls short of the bound.
start = time.perf_counter()
c6 = enumerate_achievable_diagrams(cycle_graph(6))
bound = sum(upper_bound_general(12, 1, k) for k in range(6))
print(f"C6: {len(c6)} achievable out of a bound of {bound} ({time.perf_counter() - start:.1f}s)")

# A cycle born at time 1 means every vertex was already hanging off the
# first one through regular pairs, so no second component is ever born.
early = [d for d in c6 if d.essential_h1 == (1,)]
print("cycle born at 1:", [str(d) for d in early])
