"""
Minimal primes and dimension
============================

Every minimal prime of J_G has the form P_S(G) for a vertex set S whose
removal splits the graph enough.  Lines and cycles are the standard
examples; the claw shows the dimension exceeding n + 1.
"""

from bei.graph import LabeledGraph, cycle_graph, path_graph, star_graph
from bei.primes import cm_sufficient, cycle_report, is_unmixed, krull_dimension, minimal_primes

for name, G in [("claw", star_graph(3)), ("line 5", path_graph(5)), ("cycle 5", cycle_graph(5))]:
    dec = minimal_primes(G)
    print(f"{name}: dimension {dec.dimension}, unmixed {is_unmixed(G)}")
    for P in dec.components:
        print(f"   S={P.S}  blocks={P.blocks}  height={P.height}")

# On a line the minimal sets are exactly the interior sets with no two
# consecutive vertices, and every prime has dimension n + 1.
print("line 6 sets:", minimal_primes(path_graph(6)).minimal_sets)
print("line 6 dimension:", krull_dimension(path_graph(6)))

# Only the triangle gives a prime (and Cohen-Macaulay) cycle ideal.
for n in range(3, 7):
    print(cycle_report(n))

# The sufficient Cohen-Macaulay test on two closed graphs.
print(cm_sufficient(LabeledGraph.from_edges([(1, 2), (2, 3), (1, 3), (3, 4)])))
print(cm_sufficient(LabeledGraph.from_edges([(1, 2), (2, 3), (1, 3), (2, 4), (3, 4)])))
