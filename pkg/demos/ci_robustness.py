"""
Robustness specifications
=========================

A binary output X0 and inputs X1, X2.  Asking X0 to be independent of each
input given the other compiles to a binomial edge ideal on the four input
states; its minimal primes describe the ways the statements can hold.
"""

from bei.ci import (
    RobustnessSpec,
    StateSpace,
    ci_generators,
    decompose_spec,
    full_support_implication,
    spec_to_graph,
)

space = StateSpace((2, 2))

# One statement: X0 independent of X1 given X2.
single = RobustnessSpec.from_pairs([({1}, {2})])
for g in ci_generators(single, space):
    print(g.to_text(space))

# Both single-coordinate statements; the graph is the square on 4 states.
both = RobustnessSpec.hamming(2, 1)
print("edges:", spec_to_graph(both, space).sorted_edges())

for comp in decompose_spec(both, space):
    print(comp.narrative())
    print()

# With full support the two statements force plain independence.
print(full_support_implication(both))

# Larger grids: three states for X2 give seven components.
print(len(decompose_spec(both, StateSpace((2, 3)))), "components on a 2 x 3 grid")
