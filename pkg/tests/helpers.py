"""Small constructors and brute-force oracles shared by the test modules."""

import itertools

from bei.graph import LabeledGraph


def graph(*edges, n=None):
    return LabeledGraph.from_edges(edges, n=n)


def brute_closed(G):
    """The closed condition checked over every ordered pair of edges, straight from the definition."""
    for (i, j), (k, l) in itertools.product(G.edges, repeat=2):
        if (i, j) == (k, l):
            continue
        if i == k and not G.has_edge(j, l):
            return False
        if j == l and not G.has_edge(i, k):
            return False
    return True


def brute_components(G, T):
    """Components by repeated neighbourhood closure on plain sets."""
    left = set(T)
    blocks = []
    while left:
        block = {min(left)}
        grew = True
        while grew:
            grew = False
            for v in list(block):
                for w in G.neighbors[v]:
                    if w in left and w not in block:
                        block.add(w)
                        grew = True
        blocks.append(tuple(sorted(block)))
        left -= block
    return sorted(blocks)
