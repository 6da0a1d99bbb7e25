"""Edge ideals, clique ideals and symbolic powers.

Two independent routes to ``I(G)^(m)``:

* :func:`symbolic_power` intersects ``P_C^m`` over the minimal vertex covers
  ``C`` of ``G``;
* :func:`perfect_symbolic_power` sums products of clique ideals
  ``K_{s_1}(G) ... K_{s_j}(G)`` with ``2 <= s_i <= omega`` and
  ``s_1 + ... + s_j = m + j`` (valid for perfect graphs).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import graphs as gr
from . import monomials as mo
from .graphs import Graph
from .monomials import MonomialIdeal


class EdgelessGraphError(ValueError):
    """Symbolic powers of the zero ideal were requested."""


class NotPerfectError(ValueError):
    pass


def edge_ideal(G: Graph) -> MonomialIdeal:
    if not G.num_edges():
        return mo.zero_ideal(G.n)
    return mo.minimalize([mo.squarefree(e, G.n) for e in G.edges()], G.n)


def clique_ideal(G: Graph, r: int) -> MonomialIdeal:
    """``K_r(G)``: squarefree products over the ``r``-cliques."""
    cl = gr.cliques_of_size(G, r)
    if not cl:
        return mo.zero_ideal(G.n)
    return mo.minimalize([mo.squarefree(c, G.n) for c in cl], G.n)


def prime_ideal(A: Iterable[int], n: int) -> MonomialIdeal:
    """``P_A = (x_i : i in A)``."""
    A = sorted(set(A))
    if not A:
        return mo.zero_ideal(n)
    return MonomialIdeal(n, tuple(sorted((mo.variable(i, n) for i in A), key=mo.grlex_key)))


def prime_power(A: Iterable[int], k: int, n: int) -> MonomialIdeal:
    """``P_A^k``: all degree-``k`` monomials in the variables of ``A``."""
    A = sorted(set(A))
    if k < 0:
        raise ValueError("negative exponent")
    if not A:
        return mo.zero_ideal(n) if k else mo.unit_ideal(n)
    gens = []
    for e in mo.monomials_of_degree(len(A), k):
        full = [0] * n
        for i, a in zip(A, e):
            full[i - 1] = a
        gens.append(tuple(full))
    return MonomialIdeal(n, tuple(sorted(gens, key=mo.grlex_key)))


@dataclass(frozen=True)
class CoverPrimeSystem:
    """Minimal vertex covers of a graph with a positive exponent on each.

    Describes ``J = ∩_C P_C^{k_C}``; with all exponents equal to ``k`` this is
    ``I(G)^(k)``.
    """

    n: int
    covers: tuple[frozenset[int], ...]
    exponents: tuple[int, ...]
    graph: Graph | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.covers) != len(self.exponents):
            raise ValueError("one exponent per cover is required")
        if any(k < 1 for k in self.exponents):
            raise ValueError("exponents must be positive")
        if self.graph is not None and list(self.covers) != gr.minimal_vertex_covers(self.graph):
            raise ValueError("covers must be exactly the minimal vertex covers of the graph")

    @classmethod
    def for_graph(cls, G: Graph, k: int | Mapping[frozenset[int], int] | Sequence[int] = 1) -> "CoverPrimeSystem":
        covers = tuple(gr.minimal_vertex_covers(G))
        if not G.num_edges():
            raise EdgelessGraphError("an edgeless graph has no proper vertex-cover primes")
        if isinstance(k, int):
            exps = (k,) * len(covers)
        elif isinstance(k, Mapping):
            exps = tuple(k[frozenset(C)] for C in covers)
        else:
            exps = tuple(k)
        return cls(G.n, covers, exps, G)

    @property
    def independent_sets(self) -> tuple[frozenset[int], ...]:
        V = frozenset(range(1, self.n + 1))
        return tuple(V - C for C in self.covers)

    def to_json(self) -> list[dict]:
        return [{"cover": sorted(C), "k": k} for C, k in zip(self.covers, self.exponents)]

    @classmethod
    def from_json(cls, G: Graph, items: list[dict]) -> "CoverPrimeSystem":
        given = {frozenset(d["cover"]): int(d["k"]) for d in items}
        return cls.for_graph(G, given)


def veronese_intersection(system: CoverPrimeSystem) -> MonomialIdeal:
    """``∩ P_C^{k_C}``, folding pairwise from the smallest factors up."""
    factors = [prime_power(C, k, system.n) for C, k in zip(system.covers, system.exponents)]
    factors.sort(key=len)
    return mo.intersect_all(factors)


def membership_sigma(system: CoverPrimeSystem, u: mo.Monomial) -> bool:
    """Membership in ``∩ P_C^{k_C}`` without building the ideal.

    ``u`` of degree ``d`` belongs iff ``deg(u_A) <= d - k_C`` for each
    independent set ``A = V \\ C``.
    """
    if len(u) != system.n:
        raise mo.AmbientMismatch(f"{u} does not live in {system.n} variables")
    d = mo.degree(u)
    return all(sum(u[i - 1] for i in A) <= d - k for A, k in zip(system.independent_sets, system.exponents))


def _sigma_matrix(system: CoverPrimeSystem) -> tuple[np.ndarray, np.ndarray]:
    M = np.zeros((system.n, len(system.covers)), dtype=np.int64)
    for c, A in enumerate(system.independent_sets):
        for i in A:
            M[i - 1, c] = 1
    return M, np.asarray(system.exponents, dtype=np.int64)


def _sigma_rows(system: CoverPrimeSystem, d: int, chunk: int = 200_000) -> np.ndarray:
    M, k = _sigma_matrix(system)
    rows = mo.monomial_array(system.n, d)
    keep = []
    for start in range(0, len(rows), chunk):
        block = rows[start:start + chunk]
        keep.append(block[((block @ M) <= d - k).all(axis=1)])
    return np.concatenate(keep, axis=0) if keep else rows[:0]


def sigma_component(system: CoverPrimeSystem, d: int) -> MonomialIdeal:
    """Degree-``d`` monomials of ``∩ P_C^{k_C}`` enumerated via the membership test."""
    rows = _sigma_rows(system, d)
    gens = [tuple(r) for r in rows.tolist()]
    return MonomialIdeal(system.n, tuple(sorted(gens, key=mo.grlex_key)))


def sigma_generators(system: CoverPrimeSystem, d: int) -> list[mo.Monomial]:
    """Minimal generators of degree ``d``: members ``u`` with no ``u / x_i`` in the ideal."""
    M, k = _sigma_matrix(system)
    rows = _sigma_rows(system, d)
    if not len(rows):
        return []
    S = rows @ M
    minimal = np.ones(len(rows), dtype=bool)
    for i in range(system.n):
        has = rows[:, i] > 0
        below = ((S - M[i]) <= d - 1 - k).all(axis=1)
        minimal &= ~(has & below)
    return [tuple(r) for r in rows[minimal].tolist()]


def generator_degree_bound(system: CoverPrimeSystem) -> int:
    """Upper bound on the degrees of minimal generators of ``∩ P_C^{k_C}``.

    Each variable of a minimal generator ``u`` lies in a cover ``C`` with
    ``deg(u_C) = k_C``.  Peeling independent sets along a strictly shrinking
    chain of intersections gives ``deg(u) <= K * (1 + chain length)``, with
    ``K`` the largest exponent.
    """
    family = {frozenset(A) for A in system.independent_sets if A}
    frontier = set(family)
    while frontier:
        nxt = set()
        for X in frontier:
            for A in system.independent_sets:
                Y = X & A
                if Y and Y not in family:
                    nxt.add(Y)
        family |= nxt
        frontier = nxt
    depth: dict[frozenset, int] = {}
    for X in sorted(family, key=len):
        depth[X] = 1 + max((depth[Y] for Y in depth if Y < X), default=0)
    return max(system.exponents) * (1 + max(depth.values(), default=0))


def sigma_ideal(system: CoverPrimeSystem) -> MonomialIdeal:
    """``∩ P_C^{k_C}`` built degree by degree from the membership test.

    Independent of :func:`veronese_intersection`; cheaper when there are many
    variables and the degree bound is small.
    """
    gens = []
    for d in range(min(system.exponents), generator_degree_bound(system) + 1):
        gens.extend(sigma_generators(system, d))
    return MonomialIdeal(system.n, tuple(sorted(gens, key=mo.grlex_key)))


def symbolic_power(G: Graph, k: int) -> MonomialIdeal:
    """``I(G)^(k)`` as the intersection of ``P_C^k`` over minimal vertex covers."""
    if k < 1:
        raise ValueError("k must be positive")
    if not G.num_edges():
        raise EdgelessGraphError("I(G) = (0) for an edgeless graph")
    return veronese_intersection(CoverPrimeSystem.for_graph(G, k))


def clique_compositions(omega: int, m: int) -> list[tuple[int, ...]]:
    """Non-decreasing ``(s_1..s_j)`` with ``2 <= s_i <= omega`` and sum ``m + j``."""
    out = []

    def rec(prefix: list[int], lo: int):
        j = len(prefix)
        total = sum(prefix)
        if j and total == m + j:
            out.append(tuple(prefix))
        if j == m:
            return
        for s in range(lo, omega + 1):
            # adding s raises the sum by s and the target by 1
            if total + s - (j + 1) > m:
                break
            rec(prefix + [s], s)

    rec([], 2)
    return out


def perfect_symbolic_power(G: Graph, m: int, check_perfect: bool = True) -> MonomialIdeal:
    """``I(G)^(m)`` as a sum of products of clique ideals (perfect ``G``)."""
    if m < 1:
        raise ValueError("m must be positive")
    if check_perfect and not gr.is_perfect(G):
        raise NotPerfectError("the clique-ideal formula is only valid for perfect graphs")
    omega = gr.clique_number(G)
    if omega < 2:
        raise EdgelessGraphError("I(G) = (0) for an edgeless graph")
    K = {s: clique_ideal(G, s) for s in range(2, omega + 1)}
    summands = []
    for comp in clique_compositions(omega, m):
        P = K[comp[0]]
        for s in comp[1:]:
            P = mo.product(P, K[s])
        summands.append(P)
    return mo.ideal_sum(*summands)


def predicted_gen_degrees(omega: int, m: int) -> set[int]:
    if omega < 2 or m < 1:
        raise ValueError("need omega >= 2 and m >= 1")
    lo = -(-m // (omega - 1))
    return {m + j for j in range(lo, m + 1)}


def alpha_symbolic(G: Graph, m: int) -> int:
    return mo.alpha(symbolic_power(G, m))


def predicted_alpha(omega: int, m: int) -> int:
    return m + -(-m // (omega - 1))


def waldschmidt_formula(omega: int) -> Fraction:
    if omega < 2:
        raise ValueError("omega must be at least 2")
    return Fraction(omega, omega - 1)


def waldschmidt_empirical(G: Graph, m_max: int) -> list[Fraction]:
    """``alpha(I^(m)) / m`` for ``m = 1..m_max``."""
    return [Fraction(alpha_symbolic(G, m), m) for m in range(1, m_max + 1)]


def join_regularity_prediction(part_regs: Sequence[Sequence[int]], k: int) -> int:
    """Regularity of ``I(G1 * ... * Gr)^(k)`` from the parts.

    ``part_regs[j][i - 1]`` is ``reg I(G_j)^(i)`` for ``i = 1..k``; the value
    is ``max(reg_i - i + k)``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    best = None
    for regs in part_regs:
        if len(regs) < k:
            raise ValueError("each part needs regularities for i = 1..k")
        for i in range(1, k + 1):
            val = regs[i - 1] - i + k
            best = val if best is None else max(best, val)
    if best is None:
        raise ValueError("no parts given")
    return best

