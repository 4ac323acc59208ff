"""
Closed labelings
================

A labeling is closed when any two edges sharing their smaller (or their
larger) endpoint force the edge between the two other endpoints.  This
script checks a few small graphs, searches for closed relabelings and
builds closures.
"""

from bei.graph import (
    LabeledGraph,
    closed_necessary_conditions,
    closure,
    find_closed_labeling,
    is_closed_labeling,
    relabel,
    star_graph,
)

# Two edges sharing the vertex 1: the labeling is not closed, and the
# checker names the offending pair together with the missing edge.
G = LabeledGraph.from_edges([(1, 2), (1, 3)])
print("closed:", is_closed_labeling(G))
print("witness:", is_closed_labeling(G).witness)

# The graph is a path in disguise, so some relabeling fixes it.
sigma = find_closed_labeling(G)
print("relabeling:", sigma, "->", relabel(G, sigma).sorted_edges())

# Keeping the labels and adding edges instead gives the closure.
print("closure:", closure(G).sorted_edges())

# The claw has no closed labeling at all; it is not claw-free.
claw = star_graph(3)
print("claw labeling:", find_closed_labeling(claw))
print("claw (chordal, claw-free):", closed_necessary_conditions(claw))

# Chordal and claw-free is still not enough: a triangle with a pendant
# edge on each corner passes both tests yet has no closed labeling.
pendants = LabeledGraph.from_edges([(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)])
print("pendants (chordal, claw-free):", closed_necessary_conditions(pendants))
print("pendants labeling:", find_closed_labeling(pendants))
