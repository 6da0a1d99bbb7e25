"""Named graphs, graph enumeration and the graph families under study."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Iterator

from . import graphs as gr
from .graphs import Graph

LABELED_CAP = 7
DEDUP_CAP = 7


# --- named graphs --------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 1; ``star_graph(3)`` is the claw."""
    return Graph.from_edges(leaves + 1, [(1, j) for j in range(2, leaves + 2)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def example_graph() -> Graph:
    """Hexagon ``x1..x6`` plus ``x7`` adjacent to ``x2, x3, x5, x6``."""
    hexagon = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]
    hub = [(2, 7), (3, 7), (5, 7), (6, 7)]
    return Graph.from_edges(7, hexagon + hub)


# Edge lists below are read off drawn figures (node coordinates), not prose;
# vertex numbering is ours.

def figure_block_graph() -> Graph:
    """25-vertex block graph: blocks K5, K4, K4, three triangles and edges."""
    k5 = list(itertools.combinations([1, 2, 3, 4, 5], 2))
    tri_top = [(2, 6), (2, 7), (6, 7)]
    k4_left = list(itertools.combinations([3, 8, 9, 10], 2))
    pendant = [(1, 11)]
    tri_right = [(5, 15), (5, 16), (15, 16)]
    hub = [(15, 17), (15, 12), (15, 19)]
    tri_low = [(12, 13), (12, 14), (13, 14)]
    k4_far = list(itertools.combinations([18, 20, 21, 22], 2))
    tail = [(19, 18), (19, 23), (23, 24), (23, 25)]
    edges = k5 + tri_top + k4_left + pendant + tri_right + hub + tri_low + k4_far + tail
    return Graph.from_edges(25, edges)


def figure_condition_c_chordal() -> Graph:
    """9-vertex chordal graph whose complement satisfies condition (c).

    Maximal cliques {1,4,5}, {2,4,5}, {2,3}, {3,6,7}, {6,9}, {7,8}.
    """
    edges = [(1, 4), (4, 2), (2, 3), (3, 6), (6, 7), (7, 3), (1, 5), (5, 2), (6, 9), (7, 8), (4, 5)]
    return Graph.from_edges(9, edges)


# --- enumeration ---------------------------------------------------------

def enumerate_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, or one per isomorphism class.

    Labelled enumeration walks all ``2^C(n,2)`` edge subsets.  Deduplicated
    enumeration grows graphs one vertex at a time (every neighbourhood of
    the new vertex) and keeps one representative per canonical form.
    """
    if n < 0:
        raise ValueError("negative vertex count")
    if dedup:
        if n > DEDUP_CAP:
            raise gr.ResourceLimitError(f"deduplicated enumeration is capped at n={DEDUP_CAP}")
        yield from _unlabeled(n)
        return
    if n > LABELED_CAP:
        raise gr.ResourceLimitError(f"labelled enumeration is capped at n={LABELED_CAP}; supply graph6 input")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


@lru_cache(maxsize=None)
def _unlabeled(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    seen: dict[tuple, Graph] = {}
    for H in _unlabeled(n - 1):
        for nb in range(1 << (n - 1)):
            adj = list(H.adj) + [nb]
            for b in range(n - 1):
                if nb >> b & 1:
                    adj[b] |= 1 << (n - 1)
            G = Graph(n, tuple(adj))
            key = gr.canonical_form(G)
            if key not in seen:
                seen[key] = G
    return tuple(sorted(seen.values(), key=lambda g: (g.num_edges(), g.edges())))


def graphs_up_to(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(n, dedup=True)


# --- families ------------------------------------------------------------

FAMILIES: dict[str, Callable[[Graph], bool]] = {
    "cochordal": gr.is_cochordal,
    "co-block": gr.is_co_block,
    "co-interval": gr.is_co_proper_interval,
    "cond-c": gr.satisfies_condition_c,
    "perfect": gr.is_perfect,
}


def filter_family(stream, family: str) -> Iterator[Graph]:
    try:
        pred = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return (G for G in stream if pred(G))


def trees(n: int) -> list[Graph]:
    return [G for G in enumerate_graphs(n, dedup=True) if G.num_edges() == n - 1 and gr.is_connected(G)]


def connected_block_graphs(n: int) -> list[Graph]:
    return [G for G in enumerate_graphs(n, dedup=True) if gr.is_connected(G) and gr.is_block_graph(G)]


def connected_proper_interval_graphs(n: int) -> list[Graph]:
    return [G for G in enumerate_graphs(n, dedup=True) if gr.is_connected(G) and gr.is_proper_interval(G) is not None]


def chordal_graphs(n: int) -> list[Graph]:
    return [G for G in enumerate_graphs(n, dedup=True) if gr.is_chordal(G)]
