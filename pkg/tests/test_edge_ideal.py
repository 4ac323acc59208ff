import itertools
import logging

import pytest

from bei.edge_ideal import (
    EdgeBinomial,
    admissible_paths,
    binomial,
    generator_polynomials,
    has_quadratic_gb,
    initial_ideal,
    is_minimal_path,
    monomial_text,
    path_monomial,
    theoretical_groebner,
)
from bei.errors import DomainError, ResourceError
from bei.graph import all_graphs, complete_graph, is_closed_labeling, path_graph
from bei.groebner import buchberger_reduced
from bei.poly import Polynomial
from helpers import graph


def literal_admissible(G, i, j):
    """Every vertex sequence from i to j, filtered by the three conditions as stated."""
    others = [v for v in G.vertices if v not in (i, j)]
    found = []
    for r in range(len(others) + 1):
        for interior in itertools.permutations(others, r):
            seq = (i,) + interior + (j,)
            if not all(G.has_edge(a, b) for a, b in zip(seq, seq[1:])):
                continue
            if not all(k < i or k > j for k in interior):
                continue
            shortcut = False
            for s in range(len(interior)):
                for sub in itertools.permutations(interior, s):
                    hop = (i,) + sub + (j,)
                    if all(G.has_edge(a, b) for a, b in zip(hop, hop[1:])):
                        shortcut = True
                        break
                if shortcut:
                    break
            if not shortcut:
                found.append(seq)
    return sorted(found)


def literal_monomial(n, seq):
    i, j = seq[0], seq[-1]
    u = Polynomial.constant(1, 2 * n)
    for k in seq[1:-1]:
        if k > j:
            u = u * Polynomial.variable(k - 1, 2 * n)
        if k < i:
            u = u * Polynomial.variable(n + k - 1, 2 * n)
    (m,) = u.terms
    return m


class TestGenerators:
    def test_binomial_text(self):
        assert binomial(3, 1, 2).to_text() == "x1*y2 - x2*y1"
        assert binomial(3, 2, 3).to_text() == "x2*y3 - x3*y2"

    def test_edge_binomial_validates(self):
        with pytest.raises(DomainError):
            EdgeBinomial(2, 1, 3)

    def test_one_per_edge(self, c4):
        assert len(generator_polynomials(c4)) == 4


class TestAdmissiblePaths:
    def test_edge_is_its_own_path(self, k3):
        (p,) = admissible_paths(k3, 1, 3)
        assert p.vertices == (1, 3) and not any(p.monomial)

    def test_claw_leaves(self, claw):
        (p,) = admissible_paths(claw, 2, 3)
        assert p.vertices == (2, 1, 3)
        assert monomial_text(4, p.monomial) == "y1"

    def test_upper_interior_gives_x(self):
        G = graph((1, 3), (2, 3))
        (p,) = admissible_paths(G, 1, 2)
        assert monomial_text(3, p.monomial) == "x3"

    def test_interior_inside_window_rejected(self, path3):
        assert admissible_paths(path3, 1, 3) == []

    def test_shortcut_rejected(self):
        # 2-1-4-3 is ruled out because 2-4-3 is shorter through a subset of it
        G = graph((1, 2), (1, 4), (2, 4), (3, 4))
        assert [p.vertices for p in admissible_paths(G, 2, 3)] == [(2, 4, 3)]

    def test_matches_literal_definition(self):
        for n in range(2, 6):
            for G in all_graphs(n):
                for i, j in itertools.combinations(G.vertices, 2):
                    got = admissible_paths(G, i, j)
                    assert [p.vertices for p in got] == literal_admissible(G, i, j), (G, i, j)
                    for p in got:
                        assert p.monomial == literal_monomial(n, p.vertices)
                        assert p.monomial == path_monomial(n, p.vertices)

    def test_minimality_helper(self, c4):
        assert is_minimal_path(c4, (1, 4, 3))
        assert not is_minimal_path(graph((1, 2), (2, 3), (1, 3)), (1, 2, 3))

    def test_requires_i_below_j(self, c4):
        with pytest.raises(DomainError):
            admissible_paths(c4, 3, 2)

    def test_path_bound(self):
        with pytest.raises(ResourceError, match="BEI_MAX_PATH_N"):
            admissible_paths(path_graph(13), 1, 2)

    def test_simple_path_cap(self, monkeypatch):
        monkeypatch.setenv("BEI_MAX_SIMPLE_PATHS", "1")
        G = graph((1, 3), (3, 2), (1, 4), (4, 2))
        with pytest.raises(ResourceError, match="BEI_MAX_SIMPLE_PATHS"):
            admissible_paths(G, 1, 2)


class TestTheoreticalBasis:
    def test_claw(self, claw):
        basis = theoretical_groebner(claw)
        assert len(basis) == 6
        assert initial_ideal(claw).squarefree

    def test_equals_buchberger_up_to_five(self):
        for n in range(2, 5):
            for G in all_graphs(n):
                if not G.edges:
                    assert len(theoretical_groebner(G)) == 0
                    continue
                assert theoretical_groebner(G).polynomials == buchberger_reduced(generator_polynomials(G)).generators

    def test_quadratic_iff_closed(self):
        for n in range(1, 6):
            for G in all_graphs(n):
                assert has_quadratic_gb(G) == bool(is_closed_labeling(G))

    def test_complete_graph_is_quadratic(self):
        assert has_quadratic_gb(complete_graph(5))

    def test_basis_is_sorted_and_monic(self, c4):
        basis = theoretical_groebner(c4)
        lms = [p.leading_monomial() for p in basis]
        assert lms == sorted(lms, key=basis.as_basis().order.key)
        assert all(p.leading_term()[1] == 1 for p in basis)

    def test_no_duplicate_warnings_on_small_graphs(self, caplog):
        with caplog.at_level(logging.WARNING, logger="bei"):
            for G in all_graphs(4):
                theoretical_groebner(G)
        assert not caplog.records
