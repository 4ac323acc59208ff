"""
Groebner bases of binomial edge ideals
======================================

The reduced lex basis of J_G is read off from admissible paths.  We print
it for the claw, compare with a plain Buchberger run, and look at the
squarefree initial ideal.
"""

from bei.edge_ideal import (
    all_admissible_paths,
    generator_polynomials,
    has_quadratic_gb,
    initial_ideal,
    monomial_text,
    theoretical_groebner,
)
from bei.graph import path_graph, star_graph
from bei.groebner import buchberger_reduced

claw = star_graph(3)

# Each pair i < j joined by an admissible path contributes u * f_ij.
for (i, j), paths in sorted(all_admissible_paths(claw).items()):
    for p in paths:
        print(f"{i},{j}: path {p.vertices}, u = {monomial_text(claw.n, p.monomial)}")

basis = theoretical_groebner(claw)
for f in basis:
    print("  ", f)

# Buchberger knows nothing about paths, yet lands on the same basis.
print("agrees with Buchberger:", basis.polynomials == buchberger_reduced(generator_polynomials(claw)).generators)

# The leading terms are squarefree, so J_G is a radical ideal.
ini = initial_ideal(claw)
print("initial ideal:", [monomial_text(claw.n, m) for m in ini.monomials])
print("squarefree:", ini.squarefree)

# The claw needs cubic elements; a path does not.
print("quadratic basis, claw:", has_quadratic_gb(claw))
print("quadratic basis, path:", has_quadratic_gb(path_graph(4)))
