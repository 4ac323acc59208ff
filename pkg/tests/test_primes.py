import itertools

import pytest

from bei.edge_ideal import generator_polynomials
from bei.errors import DomainError, ResourceError
from bei.graph import (
    LabeledGraph,
    all_graphs,
    complete_graph,
    cycle_graph,
    is_connected,
    path_graph,
)
from bei.groebner import buchberger_reduced, ideal_contains
from bei.primes import (
    component_contains,
    component_height,
    cm_sufficient,
    cycle_report,
    is_prime_ideal,
    is_unmixed,
    krull_dimension,
    minimal_primes,
    prime_component,
)
from helpers import brute_components, graph


def dim_from_initial_ideal(G):
    """Krull dimension read off a Buchberger basis: the largest variable set
    that contains the support of no leading monomial."""
    nv = 2 * G.n
    if not G.edges:
        return nv
    basis = buchberger_reduced(generator_polynomials(G))
    supports = [sum(1 << k for k, e in enumerate(m) if e) for m in basis.leading_monomials()]
    best = 0
    for mask in range(1 << nv):
        if all(s & mask != s for s in supports):
            best = max(best, bin(mask).count("1"))
    return best


def brute_minimal_sets(G):
    """Minimal elements among all P_S, using Groebner containment of generators."""
    gens = {}
    for r in range(G.n + 1):
        for S in itertools.combinations(G.vertices, r):
            gens[S] = prime_component(G, S).generators()

    def contained(T, S):
        return all(ideal_contains(gens[S], f) for f in gens[T])

    sets = list(gens)
    return sorted((S for S in sets if not any(T != S and contained(T, S) for T in sets)),
                  key=lambda s: (len(s), s))


class TestPrimeComponent:
    def test_claw_leaves(self, claw):
        P = prime_component(claw, [1])
        assert P.blocks == ((2,), (3,), (4,))
        assert P.height == 1 + 4 - 3
        assert P.dimension == 6

    def test_empty_set(self, c4):
        P = prime_component(c4, [])
        assert P.c == 1 and P.height == 3

    def test_blocks_match_oracle(self):
        for G in all_graphs(4):
            for r in range(5):
                for S in itertools.combinations(G.vertices, r):
                    rest = [v for v in G.vertices if v not in S]
                    assert list(prime_component(G, S).blocks) == brute_components(G, rest)

    def test_generators(self, path3):
        gens = prime_component(path3, [2]).generators()
        assert {g.to_text() for g in gens} == {"x2", "y2"}


class TestMinimalPrimes:
    def test_claw(self, claw):
        assert minimal_primes(claw).minimal_sets == [(), (1,)]

    def test_path(self):
        assert minimal_primes(path_graph(4)).minimal_sets == [(), (2,), (3,)]

    def test_complete_graph_is_prime(self):
        assert minimal_primes(complete_graph(4)).minimal_sets == [()]

    def test_disconnected_recombines(self):
        G = graph((1, 2), (2, 3), (4, 5), (5, 6))
        assert minimal_primes(G).minimal_sets == [(), (2,), (5,), (2, 5)]

    def test_against_groebner_containment(self):
        for n in range(1, 4):
            for G in all_graphs(n):
                assert minimal_primes(G).minimal_sets == brute_minimal_sets(G), G

    def test_containment_against_groebner(self):
        for G in all_graphs(4):
            if not is_connected(G):
                continue
            gens = {S: prime_component(G, S).generators()
                    for r in range(5) for S in itertools.combinations(G.vertices, r)}
            for S in gens:
                for r in range(len(S) + 1):
                    for T in itertools.combinations(S, r):
                        expected = all(ideal_contains(gens[S], f) for f in gens[T])
                        assert component_contains(G, T, S) == expected

    def test_containment_needs_subset(self, path3):
        assert not component_contains(path3, [2], [1])

    def test_bounds(self, monkeypatch):
        with pytest.raises(ResourceError, match="BEI_MAX_PRIME_N"):
            minimal_primes(LabeledGraph(21))
        monkeypatch.setenv("BEI_MAX_COMPONENT_N", "3")
        with pytest.raises(ResourceError, match="BEI_MAX_COMPONENT_N"):
            minimal_primes(path_graph(4))
        assert len(minimal_primes(LabeledGraph(10)).components) == 1


class TestDimension:
    def test_claw(self, claw):
        assert krull_dimension(claw) == 6

    def test_empty_graph(self):
        assert krull_dimension(LabeledGraph(0)) == 0
        assert krull_dimension(LabeledGraph(3)) == 6

    def test_against_initial_ideal(self):
        for n in range(1, 6):
            for G in all_graphs(n):
                assert krull_dimension(G) == dim_from_initial_ideal(G), G

    def test_height(self, claw):
        assert component_height(claw, []) == 3


class TestPrimality:
    def test_complete_components(self):
        assert is_prime_ideal(graph((1, 2), (3, 4), (3, 5), (4, 5)))
        assert not is_prime_ideal(path_graph(3))

    def test_prime_iff_single_minimal_prime(self):
        for n in range(1, 6):
            for G in all_graphs(n):
                assert is_prime_ideal(G) == (len(minimal_primes(G).components) == 1)

    def test_unmixed(self, claw):
        assert is_unmixed(path_graph(5))
        assert not is_unmixed(cycle_graph(4))
        assert not is_unmixed(claw)


class TestCohenMacaulay:
    @pytest.mark.parametrize("G", [complete_graph(4), path_graph(5), graph((1, 2), (2, 3), (1, 3), (3, 4))])
    def test_certified(self, G):
        assert cm_sufficient(G)
        assert is_unmixed(G)
        assert krull_dimension(G) == G.n + 1

    def test_closed_but_not_certified(self):
        assert not cm_sufficient(graph((1, 2), (2, 3), (1, 3), (2, 4), (3, 4)))

    def test_not_closed(self, claw):
        assert not cm_sufficient(claw)

    def test_disconnected(self):
        with pytest.raises(DomainError):
            cm_sufficient(LabeledGraph(2))

    def test_certified_implies_unmixed(self):
        for n in range(1, 7):
            for G in all_graphs(n):
                if is_connected(G) and cm_sufficient(G):
                    assert is_unmixed(G) and krull_dimension(G) == n + 1


class TestCycles:
    def test_triangle(self):
        rep = cycle_report(3)
        assert rep.prime and rep.unmixed and rep.cm_equivalent and rep.consistent

    @pytest.mark.parametrize("n", range(4, 8))
    def test_longer_cycles(self, n):
        rep = cycle_report(n)
        assert not rep.prime and not rep.unmixed and not rep.cm_equivalent

    def test_too_short(self):
        with pytest.raises(DomainError):
            cycle_report(2)


def test_triangle_with_pendants_unmixed(triangle_with_pendants):
    # Cohen-Macaulayness itself is out of reach here; these are its checkable consequences
    assert is_unmixed(triangle_with_pendants)
    assert krull_dimension(triangle_with_pendants) == 7
    assert not cm_sufficient(triangle_with_pendants)
