"""Binomial edge ideals: generators, admissible paths and the closed-form basis.

For ``i < j`` write ``f_ij = x_i*y_j - x_j*y_i``.  A path ``i = i_0, ..., i_r = j``
is *admissible* when its vertices are distinct, every interior vertex lies
below ``i`` or above ``j``, and no proper subset of the interior vertices
already connects ``i`` to ``j``.  Such a path carries the squarefree monomial
``u = prod(x_v : v > j) * prod(y_v : v < i)`` over its interior vertices, and
the binomials ``u * f_ij`` form the reduced lex Groebner basis of ``J_G``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from . import bounds
from .errors import DomainError, ResourceError
from .graph import LabeledGraph
from .groebner import IdealBasis
from .poly import Monomial, MonomialOrder, Polynomial, is_squarefree

log = logging.getLogger(__name__)


def x_index(n: int, i: int) -> int:
    return i - 1


def y_index(n: int, i: int) -> int:
    return n + i - 1


def binomial(n: int, i: int, j: int) -> Polynomial:
    """``x_i*y_j - x_j*y_i`` in the ring of a graph on ``n`` vertices."""
    a = [0] * (2 * n)
    b = [0] * (2 * n)
    a[x_index(n, i)] += 1
    a[y_index(n, j)] += 1
    b[x_index(n, j)] += 1
    b[y_index(n, i)] += 1
    return Polynomial({tuple(a): 1, tuple(b): -1}, 2 * n)


@dataclass(frozen=True)
class EdgeBinomial:
    i: int
    j: int
    n: int

    def __post_init__(self):
        if not 1 <= self.i < self.j <= self.n:
            raise DomainError(f"edge binomial needs 1 <= i < j <= n, got i={self.i}, j={self.j}, n={self.n}")

    @property
    def as_polynomial(self) -> Polynomial:
        return binomial(self.n, self.i, self.j)


def edge_generators(G: LabeledGraph) -> list[EdgeBinomial]:
    return [EdgeBinomial(i, j, G.n) for i, j in G.sorted_edges()]


def generator_polynomials(G: LabeledGraph) -> list[Polynomial]:
    return [e.as_polynomial for e in edge_generators(G)]


@dataclass(frozen=True)
class AdmissiblePath:
    vertices: tuple[int, ...]
    monomial: Monomial

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]


def path_monomial(n: int, vertices) -> Monomial:
    i, j = vertices[0], vertices[-1]
    m = [0] * (2 * n)
    for v in vertices[1:-1]:
        if v > j:
            m[x_index(n, v)] += 1
        elif v < i:
            m[y_index(n, v)] += 1
    return tuple(m)


def _connects_without(G: LabeledGraph, i: int, j: int, allowed: set[int]) -> bool:
    seen = {i}
    stack = [i]
    while stack:
        v = stack.pop()
        for w in G.neighbors[v]:
            if w == j:
                return True
            if w in allowed and w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def is_minimal_path(G: LabeledGraph, vertices) -> bool:
    """No proper subset of the interior vertices carries a path between the ends.

    It suffices to drop one interior vertex at a time: any shorter connection
    misses at least one of them.  For a path longer than one edge whose ends
    are adjacent, the empty subset already connects them.
    """
    i, j = vertices[0], vertices[-1]
    interior = set(vertices[1:-1])
    for v in interior:
        if _connects_without(G, i, j, interior - {v}):
            return False
    return True


def _simple_paths(G: LabeledGraph, i: int, j: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Simple ``i``-``j`` paths whose interior avoids the label window ``[i, j]``."""
    count = 0
    path = [i]
    on_path = {i}

    def walk(v):
        nonlocal count
        for w in sorted(G.neighbors[v]):
            if w == j:
                count += 1
                if count > cap:
                    raise ResourceError(
                        f"more than {cap} candidate paths from {i} to {j} (BEI_MAX_SIMPLE_PATHS)"
                    )
                yield tuple(path) + (j,)
            elif w not in on_path and (w < i or w > j):
                path.append(w)
                on_path.add(w)
                yield from walk(w)
                path.pop()
                on_path.discard(w)

    yield from walk(i)


def admissible_paths(G: LabeledGraph, i: int, j: int) -> list[AdmissiblePath]:
    if not i < j:
        raise DomainError(f"admissible paths are defined for i < j, got i={i}, j={j}")
    if i < 1 or j > G.n:
        raise DomainError(f"vertices {i}, {j} outside 1..{G.n}")
    if G.n > bounds.get("MAX_PATH_N"):
        raise ResourceError(f"path enumeration is exponential; n={G.n} exceeds BEI_MAX_PATH_N={bounds.get('MAX_PATH_N')}")
    if G.has_edge(i, j):
        return [AdmissiblePath((i, j), (0,) * (2 * G.n))]
    cap = bounds.get("MAX_SIMPLE_PATHS")
    found = [
        AdmissiblePath(p, path_monomial(G.n, p))
        for p in _simple_paths(G, i, j, cap)
        if is_minimal_path(G, p)
    ]
    found.sort(key=lambda p: p.vertices)
    return found


@dataclass(frozen=True)
class TheoreticalBasis:
    """The closed-form basis, one entry per distinct binomial ``u * f_ij``.

    ``elements`` pairs each basis polynomial with the admissible path and
    edge binomial it came from (the first such path when several coincide).
    """

    n: int
    elements: tuple[tuple[AdmissiblePath, EdgeBinomial], ...]
    polynomials: tuple[Polynomial, ...]

    def as_basis(self) -> IdealBasis:
        return IdealBasis(self.polynomials, MonomialOrder.lex(2 * self.n), True)

    def __len__(self):
        return len(self.polynomials)

    def __iter__(self):
        return iter(self.polynomials)


def all_admissible_paths(G: LabeledGraph) -> dict[tuple[int, int], list[AdmissiblePath]]:
    out = {}
    for i in range(1, G.n + 1):
        for j in range(i + 1, G.n + 1):
            paths = admissible_paths(G, i, j)
            if paths:
                out[(i, j)] = paths
    return out


def theoretical_groebner(G: LabeledGraph) -> TheoreticalBasis:
    seen: dict[Polynomial, tuple[AdmissiblePath, EdgeBinomial]] = {}
    for (i, j), paths in all_admissible_paths(G).items():
        edge = EdgeBinomial(i, j, G.n)
        f = edge.as_polynomial
        for path in paths:
            p = f.mul_term(path.monomial)
            if p in seen:
                log.warning("admissible paths %s and %s give the same basis element %s",
                            seen[p][0].vertices, path.vertices, p)
                continue
            seen[p] = (path, edge)
    polys = sorted(seen, key=lambda p: p.leading_monomial())
    return TheoreticalBasis(G.n, tuple(seen[p] for p in polys), tuple(polys))


@dataclass(frozen=True)
class InitialIdeal:
    monomials: tuple[Monomial, ...]
    squarefree: bool


def initial_ideal(G: LabeledGraph) -> InitialIdeal:
    leads = tuple(p.leading_monomial() for p in theoretical_groebner(G).polynomials)
    return InitialIdeal(leads, all(is_squarefree(m) for m in leads))


def has_quadratic_gb(G: LabeledGraph) -> bool:
    basis = theoretical_groebner(G)
    return set(basis.polynomials) == set(generator_polynomials(G))


def monomial_text(n: int, m: Monomial) -> str:
    if not any(m):
        return "1"
    return Polynomial.monomial(m).to_text()
