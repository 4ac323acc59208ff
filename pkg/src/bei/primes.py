"""Minimal primes, heights and dimension of binomial edge ideals.

For a vertex set ``S`` let ``c(S)`` be the number of connected components of
``G`` restricted to the complement of ``S``.  The prime ``P_S(G)`` is generated
by ``x_i, y_i`` for ``i`` in ``S`` together with all 2-minors ``f_kl`` inside
each of those components; it has height ``|S| + n - c(S)``.  For connected
``G``, ``P_S(G)`` is a minimal prime of ``J_G`` exactly when ``S`` is empty or
every ``i`` in ``S`` satisfies ``c(S - {i}) < c(S)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from . import bounds
from .edge_ideal import binomial, x_index, y_index
from .errors import DomainError, ResourceError
from .graph import (
    LabeledGraph,
    component_masks,
    connected_components,
    cycle_graph,
    is_closed_labeling,
    is_connected,
    mask_to_subset,
    vertex_subset,
)
from .poly import Polynomial


@dataclass(frozen=True)
class PrimeComponent:
    n: int
    S: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def c(self) -> int:
        return len(self.blocks)

    @property
    def height(self) -> int:
        return len(self.S) + self.n - self.c

    @property
    def dimension(self) -> int:
        """Krull dimension of the quotient, ``(n - |S|) + c(S)``."""
        return self.n - len(self.S) + self.c

    def generators(self) -> list[Polynomial]:
        nv = 2 * self.n
        gens = []
        for i in self.S:
            gens.append(Polynomial.variable(x_index(self.n, i), nv))
            gens.append(Polynomial.variable(y_index(self.n, i), nv))
        for block in self.blocks:
            for k, l in itertools.combinations(block, 2):
                gens.append(binomial(self.n, k, l))
        return gens


@dataclass(frozen=True)
class Decomposition:
    n: int
    components: tuple[PrimeComponent, ...]

    @property
    def minimal_sets(self) -> list[tuple[int, ...]]:
        return [p.S for p in self.components]

    @property
    def dimension(self) -> int:
        return max(p.dimension for p in self.components)


def prime_component(G: LabeledGraph, S: Iterable[int]) -> PrimeComponent:
    S = vertex_subset(G, S)
    rest = [v for v in G.vertices if v not in set(S)]
    return PrimeComponent(G.n, S, connected_components(G, rest).blocks)


def component_height(G: LabeledGraph, S: Iterable[int]) -> int:
    return prime_component(G, S).height


def component_contains(G: LabeledGraph, T: Iterable[int], S: Iterable[int]) -> bool:
    """Whether ``P_T(G)`` is contained in ``P_S(G)``.

    Holds iff ``T`` is a subset of ``S`` and each component of ``G`` off ``T``,
    once ``S`` is removed from it, fits inside a single component of ``G`` off ``S``.
    """
    T = set(vertex_subset(G, T))
    S = set(vertex_subset(G, S))
    if not T <= S:
        return False
    outer = connected_components(G, [v for v in G.vertices if v not in T])
    inner = connected_components(G, [v for v in G.vertices if v not in S])
    inner_sets = [set(b) for b in inner.blocks]
    for block in outer.blocks:
        rest = set(block) - S
        if rest and not any(rest <= b for b in inner_sets):
            return False
    return True


def _minimal_masks_connected(adj: tuple[int, ...], comp: int) -> list[int]:
    """Cut-point criterion on one connected vertex set ``comp``, all as bitmasks."""
    counts: dict[int, int] = {}
    sub = comp
    while True:
        counts[sub] = len(component_masks(adj, comp & ~sub))
        if sub == 0:
            break
        sub = (sub - 1) & comp
    out = []
    for sub, c in counts.items():
        ok = True
        rest = sub
        while rest:
            bit = rest & -rest
            rest ^= bit
            if counts[sub ^ bit] >= c:
                ok = False
                break
        if ok:
            out.append(sub)
    return out


def minimal_primes(G: LabeledGraph) -> Decomposition:
    """All minimal primes, assembled component by component.

    Each connected component contributes its own minimal choices of ``S``;
    the minimal primes of ``J_G`` are the sums of one choice per component.
    """
    limit_n = bounds.get("MAX_PRIME_N")
    limit_comp = bounds.get("MAX_COMPONENT_N")
    if G.n > limit_n:
        raise ResourceError(f"n={G.n} exceeds the minimal-prime bound {limit_n} (BEI_MAX_PRIME_N)")
    adj = G.adjacency_masks
    comps = component_masks(adj, (1 << G.n) - 1)
    for cm in comps:
        size = bin(cm).count("1")
        if size > limit_comp:
            raise ResourceError(
                f"a connected component has {size} vertices; exhaustive subset search is "
                f"capped at {limit_comp} (BEI_MAX_COMPONENT_N)"
            )
    per_comp = [_minimal_masks_connected(adj, cm) for cm in comps]
    sets = []
    for choice in itertools.product(*per_comp):
        mask = 0
        for m in choice:
            mask |= m
        sets.append(mask_to_subset(mask))
    sets.sort(key=lambda s: (len(s), s))
    return Decomposition(G.n, tuple(prime_component(G, s) for s in sets))


def krull_dimension(G: LabeledGraph) -> int:
    """``max((n - |S|) + c(S))``; the maximum is attained at a minimal prime."""
    if G.n == 0:
        return 0
    return minimal_primes(G).dimension


def is_prime_ideal(G: LabeledGraph) -> bool:
    """Every connected component is a complete graph."""
    for block in connected_components(G).blocks:
        for a, b in itertools.combinations(block, 2):
            if not G.has_edge(a, b):
                return False
    return True


def is_unmixed(G: LabeledGraph) -> bool:
    heights = {p.height for p in minimal_primes(G).components}
    return len(heights) <= 1


def cm_sufficient(G: LabeledGraph) -> bool:
    """Closed labeling plus the shifted transitivity condition; certifies Cohen-Macaulay.

    The shifted condition: whenever ``{i, j+1}`` (``i < j``) and ``{j, k+1}``
    (``j < k``) are edges, so is ``{i, k+1}``.  Only a sufficient test.
    """
    if not is_connected(G):
        raise DomainError("the Cohen-Macaulay criterion applies to connected graphs; apply it per component")
    if not is_closed_labeling(G):
        return False
    for a, b in G.edges:
        # {a, b} read as {i, j+1} with i < j
        i, j = a, b - 1
        if not i < j:
            continue
        for w in G.neighbors[j]:
            k = w - 1
            if j < k and not G.has_edge(i, k + 1):
                return False
    return True


@dataclass(frozen=True)
class CycleReport:
    n: int
    prime: bool
    unmixed: bool
    cm_equivalent: bool

    @property
    def consistent(self) -> bool:
        return self.prime == self.unmixed == self.cm_equivalent


def cycle_report(n: int) -> CycleReport:
    if n < 3:
        raise DomainError(f"cycles have length at least 3, got {n}")
    G = cycle_graph(n)
    return CycleReport(n, is_prime_ideal(G), is_unmixed(G), n == 3)

