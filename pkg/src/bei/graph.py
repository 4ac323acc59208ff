"""Labeled simple graphs on ``1..n`` and the structural predicates around closedness.

A graph is *closed* for its labeling when every pair of edges sharing their
lower endpoint, or sharing their upper endpoint, has its two other endpoints
adjacent.  This module houses that test, the closure under it, a search for a
closed relabeling, the associated acyclic digraph and the chordal / claw-free
checks, together with the component bookkeeping used by the prime
decomposition code.

Vertices are 1-based integers throughout.  Vertex subsets are passed as any
iterable of ints and returned as sorted tuples.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from . import bounds
from .errors import DomainError, ParseError, ResourceError

Edge = tuple[int, int]


def _canonical_edge(i, j) -> Edge:
    i, j = int(i), int(j)
    if i == j:
        raise DomainError(f"loop at vertex {i}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class LabeledGraph:
    """A simple graph on the vertex set ``1..n``.

    ``edges`` holds pairs ``(i, j)`` with ``i < j``.  Use :meth:`from_edges`
    to build a graph from unordered or unsorted pairs.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise DomainError(f"vertex count must be a non-negative integer, got {self.n!r}")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        for e in self.edges:
            i, j = e
            if not i < j:
                raise DomainError(f"edge {e} is not stored as (i, j) with i < j")
            if i < 1 or j > self.n:
                raise DomainError(f"edge {e} has an endpoint outside 1..{self.n}")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> "LabeledGraph":
        canon = {_canonical_edge(i, j) for i, j in edges}
        if n is None:
            n = max((j for _, j in canon), default=0)
        return cls(n, frozenset(canon))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return ((i, j) if i < j else (j, i)) in self.edges

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks; vertex ``v`` is bit ``v - 1``, index 0 unused."""
        masks = [0] * (self.n + 1)
        for i, j in self.edges:
            masks[i] |= 1 << (j - 1)
            masks[j] |= 1 << (i - 1)
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def __repr__(self):
        return f"LabeledGraph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class DirectedGraph:
    n: int
    arcs: frozenset[Edge]

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in range(1, self.n + 1)}
        out: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for a, b in self.arcs:
            out[a].append(b)
            indeg[b] += 1
        queue = deque(v for v, d in indeg.items() if d == 0)
        seen = 0
        while queue:
            v = queue.popleft()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen == self.n


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components of an induced subgraph, sorted by smallest member."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.blocks)

    def block_of(self, v: int) -> tuple[int, ...] | None:
        for b in self.blocks:
            if v in b:
                return b
        return None


def _check_subset(G: LabeledGraph, T: Iterable[int]) -> tuple[int, ...]:
    members = sorted(set(int(v) for v in T))
    for v in members:
        if v < 1 or v > G.n:
            raise DomainError(f"vertex {v} outside 1..{G.n}")
    return tuple(members)


def vertex_subset(G: LabeledGraph, T: Iterable[int]) -> tuple[int, ...]:
    """Validate ``T`` against ``G`` and return it as a sorted tuple."""
    return _check_subset(G, T)


def subset_to_mask(T: Iterable[int]) -> int:
    mask = 0
    for v in T:
        mask |= 1 << (v - 1)
    return mask


def mask_to_subset(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def component_masks(adj: tuple[int, ...], mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, as bitmasks.

    ``adj`` is :attr:`LabeledGraph.adjacency_masks`.  Components come out
    ordered by their lowest vertex.
    """
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            new = adj[bit.bit_length()] & rest & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def count_components(adj: tuple[int, ...], mask: int) -> int:
    return len(component_masks(adj, mask))


def induced_subgraph(G: LabeledGraph, T: Iterable[int]) -> LabeledGraph:
    """Restriction of ``G`` to ``T``; the label universe stays ``1..n``."""
    keep = set(_check_subset(G, T))
    return LabeledGraph(G.n, frozenset(e for e in G.edges if e[0] in keep and e[1] in keep))


def connected_components(G: LabeledGraph, T: Iterable[int] | None = None) -> ComponentPartition:
    members = G.vertices if T is None else _check_subset(G, T)
    comps = component_masks(G.adjacency_masks, subset_to_mask(members))
    return ComponentPartition(tuple(mask_to_subset(c) for c in comps))


def is_connected(G: LabeledGraph) -> bool:
    return G.n > 0 and connected_components(G).count == 1


@dataclass(frozen=True)
class ClosedCheck:
    """Result of :func:`is_closed_labeling`.

    On failure ``witness`` is ``(edge1, edge2, missing_edge)``, the
    lexicographically smallest violation.  Truthiness follows ``closed``.
    """

    closed: bool
    witness: tuple[Edge, Edge, Edge] | None = None

    def __bool__(self):
        return self.closed


def _violations(G: LabeledGraph) -> Iterator[tuple[Edge, Edge, Edge]]:
    for v in G.vertices:
        nb = G.neighbors[v]
        above = sorted(w for w in nb if w > v)
        below = sorted(w for w in nb if w < v)
        # shared lower endpoint v
        for a, b in itertools.combinations(above, 2):
            if (a, b) not in G.edges:
                yield ((v, a), (v, b), (a, b))
        # shared upper endpoint v
        for a, b in itertools.combinations(below, 2):
            if (a, b) not in G.edges:
                yield ((a, v), (b, v), (a, b))


def is_closed_labeling(G: LabeledGraph) -> ClosedCheck:
    witness = min(_violations(G), default=None)
    return ClosedCheck(witness is None, witness)


def relabel(G: LabeledGraph, sigma: tuple[int, ...]) -> LabeledGraph:
    """Apply ``sigma`` (one-line notation: vertex ``v`` becomes ``sigma[v-1]``)."""
    if sorted(sigma) != list(G.vertices):
        raise DomainError(f"{sigma} is not a permutation of 1..{G.n}")
    return LabeledGraph.from_edges(((sigma[i - 1], sigma[j - 1]) for i, j in G.edges), n=G.n)


def find_closed_labeling(G: LabeledGraph, max_n: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically smallest permutation making ``G`` closed, or ``None``.

    Backtracking over ``sigma(1), sigma(2), ...``; a partial assignment is
    abandoned as soon as the placed vertices already violate closedness.
    """
    limit = bounds.get("MAX_LABELING_N") if max_n is None else max_n
    if G.n > limit:
        raise ResourceError(
            f"closed-labeling search is exhaustive over n! permutations; "
            f"n={G.n} exceeds the bound {limit} (raise BEI_MAX_LABELING_N to override)"
        )
    n = G.n
    nb = G.neighbors
    sigma = [0] * (n + 1)
    used = [False] * (n + 1)

    def consistent(v):
        # every triple a-b, a-c with v among {a, b, c} and all three placed
        lv = sigma[v]
        placed = [w for w in nb[v] if sigma[w]]
        # v as the shared vertex
        for b, c in itertools.combinations(placed, 2):
            lb, lc = sigma[b], sigma[c]
            if (lv < lb and lv < lc) or (lv > lb and lv > lc):
                if c not in nb[b]:
                    return False
        # v as an outer vertex: shared vertex a adjacent to v and to another placed c
        for a in placed:
            la = sigma[a]
            for c in nb[a]:
                if c == v or not sigma[c]:
                    continue
                lc = sigma[c]
                if (la < lv and la < lc) or (la > lv and la > lc):
                    if c not in nb[v]:
                        return False
        return True

    def extend(v):
        if v > n:
            return True
        for label in range(1, n + 1):
            if used[label]:
                continue
            sigma[v] = label
            used[label] = True
            if consistent(v) and extend(v + 1):
                return True
            used[label] = False
            sigma[v] = 0
        return False

    if extend(1):
        return tuple(sigma[1:])
    return None


def closure(G: LabeledGraph) -> LabeledGraph:
    """Smallest graph containing ``G`` that is closed for the same labeling."""
    edges = set(G.edges)
    while True:
        H = LabeledGraph(G.n, frozenset(edges))
        forced = {missing for _, _, missing in _violations(H)}
        if not forced:
            return H
        edges |= forced


def to_dag(G: LabeledGraph) -> DirectedGraph:
    return DirectedGraph(G.n, frozenset(G.edges))


def bfs_distances(G: LabeledGraph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in G.neighbors[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def all_shortest_paths_directed(G: LabeledGraph, i: int, j: int) -> bool:
    """Whether every shortest ``i``-``j`` path has a monotone label sequence.

    A shortest path fails to be directed exactly when it passes through a
    vertex that is a local label maximum or minimum, and any such two-arc
    segment of the shortest-path DAG extends to a full shortest path.
    """
    if i == j:
        raise DomainError("endpoints must differ")
    _check_subset(G, (i, j))
    from_i = bfs_distances(G, i)
    if j not in from_i:
        raise DomainError(f"vertices {i} and {j} are disconnected; no path exists")
    from_j = bfs_distances(G, j)
    d = from_i[j]
    on_path = {v for v in from_i if v in from_j and from_i[v] + from_j[v] == d}
    for s in on_path:
        if s in (i, j):
            continue
        level = from_i[s]
        preds = [r for r in G.neighbors[s] if r in on_path and from_i[r] == level - 1]
        succs = [t for t in G.neighbors[s] if t in on_path and from_i[t] == level + 1]
        for r in preds:
            for t in succs:
                if (r < s) != (s < t):
                    return False
    return True


def is_chordal(G: LabeledGraph) -> bool:
    """Chordality by greedy simplicial elimination.

    Removing a simplicial vertex keeps a chordal graph chordal, and every
    chordal graph has one, so the greedy search finds a perfect elimination
    ordering exactly when one exists.
    """
    remaining = set(G.vertices)
    nb = {v: set(G.neighbors[v]) for v in remaining}
    while remaining:
        for v in sorted(remaining):
            around = nb[v]
            if all(b in nb[a] for a, b in itertools.combinations(around, 2)):
                break
        else:
            return False
        remaining.discard(v)
        for w in nb[v]:
            nb[w].discard(v)
        del nb[v]
    return True


def find_claw(G: LabeledGraph) -> tuple[int, int, int, int] | None:
    """An induced star ``(centre, a, b, c)``, lexicographically smallest, if any."""
    for v in G.vertices:
        for a, b, c in itertools.combinations(sorted(G.neighbors[v]), 3):
            if not (G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c)):
                return (v, a, b, c)
    return None


def is_claw_free(G: LabeledGraph) -> bool:
    return find_claw(G) is None


def closed_necessary_conditions(G: LabeledGraph) -> tuple[bool, bool]:
    """``(chordal, claw_free)``; both hold for every graph with a closed labeling."""
    return is_chordal(G), is_claw_free(G)


# -- constructors -------------------------------------------------------------

def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, frozenset((v, v + 1) for v in range(1, n)))


def cycle_graph(n: int) -> LabeledGraph:
    if n < 3:
        raise DomainError(f"a cycle needs at least 3 vertices, got {n}")
    return LabeledGraph.from_edges([(v, v + 1) for v in range(1, n)] + [(1, n)], n=n)


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def star_graph(leaves: int) -> LabeledGraph:
    """Centre 1 joined to ``2..leaves+1``; ``star_graph(3)`` is the claw."""
    return LabeledGraph(leaves + 1, frozenset((1, v) for v in range(2, leaves + 2)))


def all_graphs(n: int) -> Iterator[LabeledGraph]:
    """Every labeled simple graph on ``1..n`` (``2**C(n,2)`` of them), in bitmask order."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        yield LabeledGraph(n, frozenset(p for k, p in enumerate(pairs) if bits >> k & 1))


def is_path_graph(G: LabeledGraph) -> bool:
    """Whether ``G`` is isomorphic to a line (a connected graph of max degree 2 without cycles)."""
    if G.n == 0:
        return False
    return is_connected(G) and len(G.edges) == G.n - 1 and all(G.degree(v) <= 2 for v in G.vertices)


def is_bipartite(G: LabeledGraph) -> bool:
    colour: dict[int, int] = {}
    for s in G.vertices:
        if s in colour:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in G.neighbors[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


# -- serialization ------------------------------------------------------------

def graph_to_dict(G: LabeledGraph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}


def graph_from_dict(data: dict) -> LabeledGraph:
    if not isinstance(data, dict) or "edges" not in data:
        raise ParseError('graph JSON must be an object with "edges" (and optionally "n")')
    edges = []
    for k, e in enumerate(data["edges"]):
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise ParseError(f"edges[{k}] is not a pair: {e!r}")
        try:
            edges.append(_canonical_edge(*e))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"edges[{k}]: {exc}") from None
    return LabeledGraph.from_edges(edges, n=data.get("n"))


def graph_to_text(G: LabeledGraph) -> str:
    lines = [f"# n={G.n}"]
    lines += [f"{i} {j}" for i, j in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> LabeledGraph:
    """Parse ``i j`` lines; ``#`` starts a comment and ``# n=<int>`` sets the vertex count."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition("#")
        comment = comment.strip().replace(" ", "")
        if comment.startswith("n="):
            try:
                n = int(comment[2:])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex-count pragma {raw.strip()!r}") from None
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'i j', got {raw.strip()!r}")
        try:
            edges.append(_canonical_edge(int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: bad edge {raw.strip()!r}") from None
    return LabeledGraph.from_edges(edges, n=n)


def parse_graph(text: str) -> LabeledGraph:
    """Accept either the JSON object form or the plain edge-list form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid graph JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return graph_from_dict(data)
    return graph_from_text(text)
