"""Simple graphs on vertices ``1..n`` and the graph classes used downstream.

Adjacency is a tuple of ``n`` Python ints used as bitsets: bit ``j - 1`` of
``adj[i - 1]`` is set iff ``{i, j}`` is an edge.  Vertex sets handed to or
returned from the public functions are frozensets of 1-based labels;
orderings are tuples of labels, ``x_{ord[0]} > x_{ord[1]} > ...``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

PERFECT_SIZE_GUARD = 12


class ResourceLimitError(RuntimeError):
    """An exhaustive routine was called above its documented size guard."""


def _bits(mask: int) -> Iterator[int]:
    """0-based positions of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(b + 1 for b in _bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i + 1} has a neighbour outside 1..{self.n}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i + 1}")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i + 1} and {j + 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge {{{i}, {j}}} outside 1..{n}")
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            adj[i - 1] |= 1 << (j - 1)
            adj[j - 1] |= 1 << (i - 1)
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i in range(self.n) for j in _bits(self.adj[i] >> (i + 1) << (i + 1))]

    def num_edges(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i - 1] >> (j - 1) & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return from_mask(self.adj[v - 1])

    def degree(self, v: int) -> int:
        return bin(self.adj[v - 1]).count("1")

    def is_clique(self, vertices: Iterable[int]) -> bool:
        return _is_clique_mask(self, to_mask(vertices))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        m = to_mask(vertices)
        return all(not (self.adj[b] & m) for b in _bits(m))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _is_clique_mask(G: Graph, m: int) -> bool:
    return all((G.adj[b] | 1 << b) & m == m for b in _bits(m))


# --- constructions -------------------------------------------------------

def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(G.adj)))


def induced_subgraph(G: Graph, A: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``A`` relabelled ``1..|A|``.

    Returns the graph and the label map: new vertex ``i`` is old vertex
    ``labels[i - 1]``.
    """
    labels = tuple(sorted(set(A)))
    if not labels:
        raise ValueError("induced subgraph on the empty set")
    if labels[0] < 1 or labels[-1] > G.n:
        raise ValueError("vertex set not contained in V(G)")
    pos = {v: i + 1 for i, v in enumerate(labels)}
    edges = [(pos[i], pos[j]) for i, j in G.edges() if i in pos and j in pos]
    return Graph.from_edges(len(labels), edges), labels


def delete_vertex(G: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    return induced_subgraph(G, [u for u in G.vertices if u != v])


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    shift = G1.n
    edges = G1.edges() + [(i + shift, j + shift) for i, j in G2.edges()]
    return Graph.from_edges(G1.n + G2.n, edges)


def join(G1: Graph, G2: Graph) -> Graph:
    """``G1 * G2``: disjoint union plus every edge between the two parts."""
    U = disjoint_union(G1, G2)
    cross = [(i, G1.n + j) for i in G1.vertices for j in G2.vertices]
    return Graph.from_edges(U.n, U.edges() + cross)


def relabel_graph(G: Graph, perm: Sequence[int]) -> Graph:
    """New vertex ``i`` is old vertex ``perm[i - 1]``."""
    pos = {v: i + 1 for i, v in enumerate(perm)}
    return Graph.from_edges(G.n, [(pos[i], pos[j]) for i, j in G.edges()])


def connected_components(G: Graph) -> list[frozenset[int]]:
    seen = 0
    comps = []
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for b in _bits(frontier):
                nxt |= G.adj[b]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(from_mask(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(connected_components(G)) == 1


# --- chordality ----------------------------------------------------------

def mcs_order(G: Graph) -> tuple[int, ...]:
    """Maximum cardinality search, returned as an elimination ordering.

    MCS visits vertices greedily by number of already-visited neighbours
    (ties: smallest label); the reverse of the visit order is a perfect
    elimination ordering exactly when ``G`` is chordal.
    """
    weight = [0] * G.n
    visited = 0
    visit = []
    for _ in range(G.n):
        best = max((w, -v) for v, w in enumerate(weight) if not visited >> v & 1)
        v = -best[1]
        visit.append(v + 1)
        visited |= 1 << v
        for u in _bits(G.adj[v] & ~visited):
            weight[u] += 1
    return tuple(reversed(visit))


def verify_peo(G: Graph, order: Sequence[int]) -> bool:
    """Each ``order[i]`` must be simplicial in ``G[order[i:]]``."""
    if sorted(order) != list(G.vertices):
        raise ValueError("ordering is not a permutation of the vertices")
    later = G.full_mask
    for v in order:
        later &= ~(1 << (v - 1))
        if not _is_clique_mask(G, G.adj[v - 1] & later):
            return False
    return True


def peo(G: Graph) -> tuple[int, ...] | None:
    order = mcs_order(G)
    return order if verify_peo(G, order) else None


def is_chordal(G: Graph) -> bool:
    return peo(G) is not None


def is_cochordal(G: Graph) -> bool:
    return is_chordal(complement(G))


def induced_cycles(G: Graph, min_length: int = 4) -> Iterator[tuple[int, ...]]:
    """Every induced cycle of length ``>= min_length``, once each.

    Exhaustive induced-path search rooted at the smallest vertex of the
    cycle; exponential, meant for small graphs.
    """
    adj = G.adj
    for s in range(G.n):
        higher = G.full_mask & ~((1 << (s + 1)) - 1)

        def extend(path: list[int], used: int):
            last = path[-1]
            inner = used & ~(1 << s) & ~(1 << last)
            for v in _bits(adj[last] & higher & ~used):
                if adj[v] & inner:
                    continue
                closes = adj[v] >> s & 1
                if closes:
                    # report each cycle in one direction only
                    if len(path) + 1 >= min_length and len(path) >= 2 and path[1] < v:
                        yield tuple(p + 1 for p in path + [v])
                    continue
                yield from extend(path + [v], used | 1 << v)

        for first in _bits(adj[s] & higher):
            yield from extend([s, first], 1 << s | 1 << first)


def has_odd_hole(G: Graph) -> bool:
    return any(len(c) % 2 == 1 for c in induced_cycles(G, 5))


def is_perfect(G: Graph) -> bool:
    """Berge test by brute force: no odd hole in ``G`` or its complement."""
    if G.n > PERFECT_SIZE_GUARD:
        raise ResourceLimitError(f"is_perfect is exhaustive; n={G.n} exceeds {PERFECT_SIZE_GUARD}")
    return not has_odd_hole(G) and not has_odd_hole(complement(G))


# --- cliques -------------------------------------------------------------

def _bron_kerbosch(adj: Sequence[int], R: int, P: int, X: int, out: list[int]) -> None:
    if not P and not X:
        out.append(R)
        return
    pivot = max(_bits(P | X), key=lambda u: bin(P & adj[u]).count("1"))
    for v in _bits(P & ~adj[pivot]):
        bit = 1 << v
        _bron_kerbosch(adj, R | bit, P & adj[v], X & adj[v], out)
        P &= ~bit
        X |= bit


def _sorted_sets(masks: Iterable[int]) -> list[frozenset[int]]:
    return sorted((from_mask(m) for m in masks), key=lambda s: (len(s), sorted(s)))


def maximal_cliques(G: Graph) -> list[frozenset[int]]:
    """Maximal cliques by Bron–Kerbosch with pivoting."""
    if G.n == 0:
        return []
    out: list[int] = []
    _bron_kerbosch(G.adj, 0, G.full_mask, 0, out)
    return _sorted_sets(out)


def cliques_of_size(G: Graph, r: int) -> list[frozenset[int]]:
    if r < 1:
        raise ValueError("clique size must be positive")
    out: list[int] = []

    def grow(R: int, cand: int, size: int):
        if size == r:
            out.append(R)
            return
        for v in _bits(cand):
            grow(R | 1 << v, cand & G.adj[v] & ~((1 << (v + 1)) - 1), size + 1)

    grow(0, G.full_mask, 0)
    return _sorted_sets(out)


def clique_number(G: Graph) -> int:
    return max((len(c) for c in maximal_cliques(G)), default=0)


def maximal_independent_sets(G: Graph) -> list[frozenset[int]]:
    return maximal_cliques(complement(G))


def minimal_vertex_covers(G: Graph) -> list[frozenset[int]]:
    V = frozenset(G.vertices)
    return sorted((V - A for A in maximal_independent_sets(G)), key=lambda s: (len(s), sorted(s)))


# --- graph classes -------------------------------------------------------

def is_block_graph(G: Graph) -> bool:
    """Chordal with any two maximal cliques sharing at most one vertex."""
    if not is_chordal(G):
        return False
    cl = maximal_cliques(G)
    return all(len(a & b) <= 1 for a, b in itertools.combinations(cl, 2))


def has_induced_claw(G: Graph) -> bool:
    for c in range(G.n):
        nb = list(_bits(G.adj[c]))
        for a, b, d in itertools.combinations(nb, 3):
            if not (G.adj[a] >> b & 1 or G.adj[a] >> d & 1 or G.adj[b] >> d & 1):
                return True
    return False


def verify_proper_interval_order(G: Graph, order: Sequence[int]) -> bool:
    """``i < j < k`` and ``{x_i, x_k}`` an edge force ``{x_i, x_j}`` and ``{x_j, x_k}``."""
    if sorted(order) != list(G.vertices):
        raise ValueError("ordering is not a permutation of the vertices")
    for a, c in itertools.combinations(range(G.n), 2):
        if G.has_edge(order[a], order[c]):
            for b in range(a + 1, c):
                if not (G.has_edge(order[a], order[b]) and G.has_edge(order[b], order[c])):
                    return False
    return True


def _proper_interval_component(G: Graph, comp: frozenset[int]) -> list[int] | None:
    verts = sorted(comp)

    def ok(prefix: list[int], v: int) -> bool:
        p = len(prefix)
        for a in range(p):
            if G.has_edge(prefix[a], v):
                for b in range(a + 1, p):
                    if not (G.has_edge(prefix[a], prefix[b]) and G.has_edge(prefix[b], v)):
                        return False
        return True

    def extend(prefix: list[int], left: set[int]) -> list[int] | None:
        if not left:
            return prefix
        for v in sorted(left):
            # within a connected component the next vertex must touch the prefix
            if prefix and not G.has_edge(prefix[-1], v):
                continue
            if ok(prefix, v):
                found = extend(prefix + [v], left - {v})
                if found is not None:
                    return found
        return None

    return extend([], set(verts))


def is_proper_interval(G: Graph) -> tuple[int, ...] | None:
    """A proper interval ordering of ``G`` or ``None``.

    Backtracking per connected component; the orders of the components are
    concatenated.  Claw-containing graphs are rejected up front (a claw
    admits no such ordering).
    """
    if has_induced_claw(G):
        return None
    order: list[int] = []
    for comp in connected_components(G):
        part = _proper_interval_component(G, comp)
        if part is None:
            return None
        order += part
    return tuple(order)


def satisfies_condition_c(G: Graph) -> bool:
    """Cochordal, and every vertex lies in at most two maximal independent sets."""
    if not is_cochordal(G):
        return False
    sets = maximal_independent_sets(G)
    return all(sum(v in A for A in sets) <= 2 for v in G.vertices)


def is_co_block(G: Graph) -> bool:
    return is_block_graph(complement(G))


def is_co_proper_interval(G: Graph) -> bool:
    return is_proper_interval(complement(G)) is not None


# --- isomorphism ---------------------------------------------------------

def _refined_colours(G: Graph) -> list[int]:
    colours = [0] * G.n
    ncls = 1
    while True:
        sig = [(colours[v], tuple(sorted(colours[u] for u in _bits(G.adj[v])))) for v in range(G.n)]
        names = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [names[s] for s in sig]
        if len(names) == ncls:
            return new
        colours, ncls = new, len(names)


def canonical_form(G: Graph) -> tuple:
    """Isomorphism-invariant key.

    Colour refinement fixes an invariant vertex partition; the key is the
    minimum edge bitmask over all relabellings that respect it (brute force
    over permutations inside each colour class).
    """
    if G.n == 0:
        return (0, (), 0)
    colours = _refined_colours(G)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        classes.setdefault(c, []).append(v)
    groups = [classes[c] for c in sorted(classes)]
    edges = [(i - 1, j - 1) for i, j in G.edges()]
    n = G.n
    best = None
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        pos = [0] * n
        k = 0
        for block in choice:
            for v in block:
                pos[v] = k
                k += 1
        code = 0
        for u, v in edges:
            a, b = (pos[u], pos[v]) if pos[u] < pos[v] else (pos[v], pos[u])
            code |= 1 << (b * (b - 1) // 2 + a)
        if best is None or code < best:
            best = code
    return (n, tuple(sorted(colours)), best)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return canonical_form(G) == canonical_form(H)
