"""Explicit linear-quotients orders for ideals built from cochordal graphs.

* :func:`peo_lex_component_order` -- descending lex order, after relabelling
  the variables along a perfect elimination ordering of the complement, on a
  graded component of an intersection of Veronese-type prime powers;
* :func:`property_star_check` / :func:`combined_order` -- gluing linear
  quotients orders of equigenerated ideals of increasing degree;
* :func:`prime_times_ideal_order` -- ``P * I(G)`` via standard presentations;
* :func:`append_under_variable` -- ``x * I1 + I2``;
* :func:`i2_order` -- the recursive order on ``I(G)^(2)``.

Every constructor either returns an order that the caller can replay through
:func:`check_linear_quotients_order`, or raises naming the failed stage.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

from .. import graphs as gr
from .. import monomials as mo
from .. import symbolic as sy
from ..graphs import Graph
from ..monomials import Monomial, MonomialIdeal
from .quotients import (
    CapExceeded,
    QuotientOrder,
    check_linear_quotients_order,
    check_sequence,
    find_linear_quotients_order,
)


class NotCochordalError(ValueError):
    pass


class PreconditionError(ValueError):
    """Hypotheses of a gluing step fail; ``violations`` lists each one."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class ConstructionError(RuntimeError):
    """A stage of the recursive construction failed to verify.

    This would contradict the theorem being exercised, so it is surfaced and
    never patched over.
    """

    def __init__(self, stage: str, detail: str = ""):
        super().__init__(f"stage {stage!r} failed" + (f": {detail}" if detail else ""))
        self.stage = stage
        self.detail = detail


def complement_peo(G: Graph) -> tuple[int, ...]:
    order = gr.peo(gr.complement(G))
    if order is None:
        raise NotCochordalError("graph is not cochordal")
    return order


def lex_sorted(gens, perm: Sequence[int] | None = None) -> tuple[Monomial, ...]:
    """Descending lex order with ``x_{perm[0]} > x_{perm[1]} > ...``."""
    if perm is None:
        return tuple(sorted(gens, key=mo.lex_key))
    return tuple(sorted(gens, key=lambda u: tuple(-u[p - 1] for p in perm)))


def peo_lex_component_order(G: Graph, system: sy.CoverPrimeSystem, d: int,
                            J: MonomialIdeal | None = None) -> tuple[tuple[Monomial, ...], tuple[int, ...]]:
    """Order on ``G(J_<d>)`` for ``J = ∩ P_C^{k_C}``.

    Returns ``(order, perm)`` where ``perm`` is the perfect elimination
    ordering of the complement used as ``x_{perm[0]} > ...``.
    """
    perm = complement_peo(G)
    if J is None:
        J = sy.veronese_intersection(system)
    if d not in mo.gen_degree_set(J):
        raise ValueError(f"{d} is not a generator degree of J")
    comp = mo.graded_component(J, d)
    return lex_sorted(comp.gens, perm), perm


def certify_peo_lex_components(G: Graph, system: sy.CoverPrimeSystem,
                               J: MonomialIdeal | None = None) -> dict[int, QuotientOrder | None]:
    """Check the PEO-lex order on every generator-degree component of ``J``."""
    if J is None:
        J = sy.veronese_intersection(system)
    perm = complement_peo(G)
    out = {}
    for d in sorted(mo.gen_degree_set(J)):
        comp = mo.graded_component(J, d)
        q = check_sequence(lex_sorted(comp.gens, perm))
        out[d] = replace(q, relabeling=perm) if q is not None else None
    return out


# --- gluing lemmas --------------------------------------------------------

Family = Sequence[tuple[MonomialIdeal, Sequence[Monomial]]]


def _validate_family(family: Family) -> list[int]:
    degs = []
    for idx, (I, order) in enumerate(family):
        ds = mo.gen_degree_set(I)
        if len(ds) != 1:
            raise ValueError(f"ideal #{idx + 1} is not equigenerated")
        degs.append(ds.pop())
        if check_linear_quotients_order(I, order) is None:
            raise ValueError(f"order #{idx + 1} is not a linear-quotients order")
    if degs != sorted(degs):
        raise ValueError("ideals must be listed by non-decreasing generator degree")
    return degs


def property_star_violations(family: Family) -> list[tuple[int, Monomial, int, Monomial]]:
    """All cross pairs ``(u in I_h, v in I_l)``, ``h < l``, breaking the gluing property.

    For ``deg(u:v) > 1`` a witness ``w`` is required with ``deg(w:v) = 1`` and
    ``w:v | u:v``, where ``w`` lies in ``I_1 ∪ ... ∪ I_{l-1}`` or precedes ``v``
    in the order of ``I_l``.  A monomial ``w`` of an earlier ideal with
    ``w:v = x_t`` exists iff ``x_t * v`` lies in that ideal, which is what is
    tested.
    """
    _validate_family(family)
    bad = []
    for l, (Il, order_l) in enumerate(family):
        if l == 0:
            continue
        earlier = mo.ideal_sum(*(I for I, _ in family[:l]))
        order_l = [tuple(v) for v in order_l]
        for pos, v in enumerate(order_l):
            W = set()
            for t in range(1, Il.n + 1):
                if mo.contains(earlier, mo.mul(mo.variable(t, Il.n), v)):
                    W.add(t)
            for w in order_l[:pos]:
                c = mo.colon_mono(w, v)
                if mo.degree(c) == 1:
                    W.add(c.index(1) + 1)
            for h in range(l):
                for u in family[h][0].gens:
                    c = mo.colon_mono(u, v)
                    if mo.degree(c) > 1 and not any(c[t - 1] for t in W):
                        bad.append((h, u, l, v))
    return bad


def property_star_check(family: Family) -> bool:
    return not property_star_violations(family)


def combined_order(family: Family) -> tuple[Monomial, ...]:
    """First ideal's order, then each later ideal's new minimal generators in its order."""
    _validate_family(family)
    kept: list[Monomial] = []
    for _, order in family:
        for v in order:
            v = tuple(v)
            if not any(mo.divides(u, v) for u in kept):
                kept.append(v)
    return tuple(kept)


def _is_edge_ideal(I: MonomialIdeal) -> bool:
    return all(mo.degree(g) == 2 and max(g) == 1 for g in I.gens)


def prime_times_ideal_order(P: Sequence[int], I: MonomialIdeal, order_I: Sequence[Monomial]) -> tuple[Monomial, ...]:
    """Order on ``G(P * I)`` induced by standard presentations.

    Products ``x_j * u`` are listed ``u``-major along ``order_I`` and, for each
    ``u``, by increasing variable index in ``P``; each generator is kept at
    its first occurrence.
    """
    if not _is_edge_ideal(I):
        raise ValueError("the ideal must be an edge ideal (squarefree quadrics)")
    if check_linear_quotients_order(I, order_I) is None:
        raise ValueError("order_I is not a linear-quotients order")
    P = sorted(set(P))
    seen: set[Monomial] = set()
    out = []
    for u in order_I:
        for j in P:
            w = mo.mul(mo.variable(j, I.n), tuple(u))
            if w not in seen:
                seen.add(w)
                out.append(w)
    return tuple(out)


def append_under_variable(x: int, first: tuple[MonomialIdeal, Sequence[Monomial]],
                          second: tuple[MonomialIdeal, Sequence[Monomial]]) -> tuple[Monomial, ...]:
    """Order on ``x * I1 + I2``: ``x`` times the order of ``I1``, then that of ``I2``."""
    I1, order1 = first
    I2, order2 = second
    n = I1.n
    problems = []
    if I2.n != n:
        raise mo.AmbientMismatch("ideals live in different rings")
    if any(g[x - 1] for g in I2.gens):
        problems.append(f"second ideal involves x{x}")
    if not mo.contains_ideal(I1, I2):
        problems.append("second ideal is not contained in the first")
    if check_linear_quotients_order(I1, order1) is None:
        problems.append("first order is not a linear-quotients order")
    if check_linear_quotients_order(I2, order2) is None:
        problems.append("second order is not a linear-quotients order")
    xv = mo.variable(x, n)
    lifted = [mo.mul(xv, tuple(u)) for u in order1]
    total = mo.minimalize(lifted + list(I2.gens), n) if lifted or I2.gens else mo.zero_ideal(n)
    gens = set(total.gens)
    if any(w not in gens for w in lifted):
        problems.append(f"G(x{x} * I1) is not contained in G(I)")
    if problems:
        raise PreconditionError(problems)
    return tuple(lifted) + tuple(tuple(v) for v in order2 if tuple(v) in gens)


# --- the second symbolic power --------------------------------------------

@dataclass
class I2Construction:
    order: QuotientOrder
    perm: tuple[int, ...]
    stages: list[str] = field(default_factory=list)
    fallbacks: list[str] = field(default_factory=list)


def _edge_ideal_on(H: Graph, alive: frozenset[int]) -> MonomialIdeal:
    gens = [mo.squarefree(e, H.n) for e in H.edges() if e[0] in alive and e[1] in alive]
    return mo.minimalize(gens, H.n) if gens else mo.zero_ideal(H.n)


def _symbolic_square_on(H: Graph, alive: frozenset[int]) -> MonomialIdeal:
    sub, labels = gr.induced_subgraph(H, alive)
    if not sub.num_edges():
        return mo.zero_ideal(H.n)
    I = sy.symbolic_power(sub, 2)
    lifted = []
    for g in I.gens:
        e = [0] * H.n
        for i, a in enumerate(g):
            e[labels[i] - 1] = a
        lifted.append(tuple(e))
    return mo.minimalize(lifted, H.n)


def _lex_or_search(I: MonomialIdeal, stage: str, log: I2Construction) -> tuple[Monomial, ...]:
    order = lex_sorted(I.gens)
    if check_linear_quotients_order(I, order) is not None:
        return order
    log.fallbacks.append(stage)
    try:
        found = find_linear_quotients_order(I)
    except CapExceeded as exc:
        raise ConstructionError(stage, f"lex order fails and search is out of reach ({exc})") from exc
    if found is None:
        raise ConstructionError(stage, "ideal has no linear-quotients order")
    return found.gens


def _i2_rec(H: Graph, alive: frozenset[int], log: I2Construction) -> tuple[Monomial, ...]:
    n = H.n
    if not any(e[0] in alive and e[1] in alive for e in H.edges()):
        return ()
    x = min(alive)
    rest = alive - {x}
    rec = _i2_rec(H, rest, log)
    rec_ideal = _symbolic_square_on(H, rest)
    if rec and check_linear_quotients_order(rec_ideal, rec) is None:
        raise ConstructionError(f"I(G_1)^(2) at x{x}", "recursive order does not verify")
    P = sorted(v for v in H.neighbors(x) if v in rest)
    if not P:
        log.stages.append(f"x{x}: isolated, recursive order reused")
        return rec

    family = []
    I1 = _edge_ideal_on(H, frozenset(P))
    if not I1.is_zero:
        family.append((I1, _lex_or_search(I1, f"I(G_2) at x{x}", log)))
    xv = mo.variable(x, n)
    I2 = mo.product(mo.MonomialIdeal(n, (xv,)), mo.power(sy.prime_ideal(P, n), 2))
    family.append((I2, lex_sorted(I2.gens)))
    IG1 = _edge_ideal_on(H, rest)
    if not IG1.is_zero:
        order_g1 = _lex_or_search(IG1, f"I(G_1) at x{x}", log)
        I3 = mo.product(sy.prime_ideal(P, n), IG1)
        try:
            family.append((I3, prime_times_ideal_order(P, IG1, order_g1)))
        except ValueError as exc:
            raise ConstructionError(f"P*I(G_1) at x{x}", str(exc)) from exc
    for I, order in family:
        if check_linear_quotients_order(I, order) is None:
            raise ConstructionError(f"summand order at x{x}", mo.format_ideal(I))
    try:
        bad = property_star_violations(family)
    except ValueError as exc:
        raise ConstructionError(f"property (*) at x{x}", str(exc)) from exc
    if bad:
        raise ConstructionError(f"property (*) at x{x}", f"{len(bad)} violating pairs, first {bad[0]}")
    L_order = combined_order(family)
    L = mo.ideal_sum(*(I for I, _ in family))
    if check_linear_quotients_order(L, L_order) is None:
        raise ConstructionError(f"combined order of L at x{x}")
    try:
        out = append_under_variable(x, (L, L_order), (rec_ideal, rec))
    except PreconditionError as exc:
        raise ConstructionError(f"x*L + I(G_1)^(2) preconditions at x{x}", str(exc)) from exc
    log.stages.append(f"x{x}: |L|={len(L)}, |I(G_1)^(2)|={len(rec_ideal)}, total={len(out)}")
    return out


def i2_order(G: Graph) -> I2Construction:
    """Linear-quotients order of ``I(G)^(2)`` for cochordal ``G``.

    Variables are relabelled along a perfect elimination ordering of the
    complement; ``x1`` is peeled off, ``I(G)^(2) = x1*L + I(G \\ x1)^(2)`` with
    ``L = I(G_2) + x1*P^2 + P*I(G \\ x1)`` where ``G_2`` is the graph induced
    on the neighbourhood of ``x1`` and ``P`` the prime on that neighbourhood.
    """
    if not G.num_edges():
        raise sy.EdgelessGraphError("I(G) = (0)")
    perm = complement_peo(G)
    H = gr.relabel_graph(G, perm)
    log = I2Construction(order=QuotientOrder((), ()), perm=perm)
    order_h = _i2_rec(H, frozenset(H.vertices), log)
    order_g = tuple(mo.unrelabel(u, perm) for u in order_h)
    target = sy.symbolic_power(G, 2)
    if set(order_g) != set(target.gens):
        raise ConstructionError("generator set", "constructed generators differ from I(G)^(2)")
    q = check_linear_quotients_order(target, order_g)
    if q is None:
        raise ConstructionError("final order")
    log.order = replace(q, relabeling=perm)
    return log
