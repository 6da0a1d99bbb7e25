"""Linear-quotients orders: replayable checker, exhaustive search, and the
Betti numbers they determine."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import numpy as np

from .. import budget
from .. import monomials as mo
from ..monomials import Monomial, MonomialIdeal

SEARCH_CAP = 64


class OrderError(ValueError):
    """The proposed order is not a permutation of the minimal generators."""


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class QuotientOrder:
    """A verified linear-quotients order with its certificate.

    ``steps[i]`` lists ``(l, k)`` pairs, one per variable ``x_l`` occurring as
    a colon ``gens[k] : gens[i] = x_l`` with ``k < i`` (smallest such ``k``).
    For any ``j < i`` the witness is the generator attached to the smallest
    such ``l`` dividing ``gens[j] : gens[i]``; :meth:`witness` recovers it and
    :meth:`replay` re-verifies everything from scratch.
    """

    gens: tuple[Monomial, ...]
    steps: tuple[tuple[tuple[int, int], ...], ...]
    relabeling: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.gens[0]) if self.gens else 0

    def __len__(self) -> int:
        return len(self.gens)

    def quotient_counts(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.steps)

    def colon_variables(self, i: int) -> tuple[int, ...]:
        return tuple(l for l, _ in self.steps[i])

    def witness(self, i: int, j: int) -> int:
        """Index ``k < i`` with ``gens[k]:gens[i]`` a variable dividing ``gens[j]:gens[i]``."""
        if not 0 <= j < i < len(self.gens):
            raise IndexError("need 0 <= j < i < len(order)")
        c = mo.colon_mono(self.gens[j], self.gens[i])
        for l, k in self.steps[i]:
            if c[l - 1]:
                return k
        raise ValueError(f"no witness for pair ({j}, {i}); certificate is corrupt")

    def replay(self) -> bool:
        """Independent positional re-check of the stored certificate."""
        gens = self.gens
        if len(set(gens)) != len(gens) or len(self.steps) != len(gens):
            return False
        if not gens:
            return True
        if self.steps[0]:
            return False
        U = np.asarray(gens, dtype=np.int64)
        for i in range(1, len(gens)):
            step = self.steps[i]
            if not step:
                return False
            C = np.maximum(U[:i] - U[i], 0)
            for l, k in step:
                if not 0 <= k < i or C[k].sum() != 1 or C[k, l - 1] != 1:
                    return False
            cols = np.array([l - 1 for l, _ in step])
            if not (C[:, cols] > 0).any(axis=1).all():
                return False
        return True

    def ideal(self) -> MonomialIdeal:
        return mo.minimalize(self.gens, self.n)

    def to_json(self) -> dict:
        out = {
            "gens": [list(g) for g in self.gens],
            "steps": [[list(p) for p in s] for s in self.steps],
            "quotient_counts": list(self.quotient_counts()),
        }
        if self.relabeling is not None:
            out["relabeling"] = list(self.relabeling)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "QuotientOrder":
        relab = obj.get("relabeling")
        return cls(
            tuple(tuple(g) for g in obj["gens"]),
            tuple(tuple((int(l), int(k)) for l, k in s) for s in obj["steps"]),
            tuple(relab) if relab is not None else None,
        )


def _require_permutation(I: MonomialIdeal, order: Sequence[Monomial]) -> None:
    order = [tuple(u) for u in order]
    if len(order) != len(I.gens) or set(order) != set(I.gens):
        raise OrderError("order is not a permutation of the minimal generators")


def _step(U: np.ndarray, i: int) -> tuple[tuple[tuple[int, int], ...], bool]:
    C = np.maximum(U[:i] - U[i], 0)
    lin = np.nonzero(C.sum(axis=1) == 1)[0]
    found: dict[int, int] = {}
    for k in lin:
        l = int(np.argmax(C[k])) + 1
        found.setdefault(l, int(k))
    if not found:
        return (), False
    cols = np.array(sorted(found)) - 1
    ok = bool((C[:, cols] > 0).any(axis=1).all())
    return tuple(sorted(found.items())), ok


def check_linear_quotients_order(I: MonomialIdeal, order: Sequence[Monomial]) -> QuotientOrder | None:
    """Certificate for ``order`` if every ``(u_1..u_{i-1}):(u_i)`` is generated by variables."""
    _require_permutation(I, order)
    return check_sequence(order)


def check_sequence(order: Sequence[Monomial]) -> QuotientOrder | None:
    """Same as :func:`check_linear_quotients_order` without the ideal.

    The sequence must consist of distinct monomials none of which divides
    another.
    """
    order = tuple(tuple(int(a) for a in u) for u in order)
    if not order:
        return QuotientOrder((), ())
    U = np.asarray(order, dtype=np.int64)
    if len(set(U.sum(axis=1).tolist())) == 1:
        return _check_equigenerated(order, U)
    steps: list[tuple[tuple[int, int], ...]] = [()]
    for i in range(1, len(order)):
        if i % 256 == 0:
            budget.check()
        step, ok = _step(U, i)
        if not ok:
            return None
        steps.append(step)
    return QuotientOrder(order, tuple(steps))


def _unit_neighbours(U: np.ndarray) -> list[dict[int, int]]:
    """For each row ``i``, map ``l -> smallest k < i`` with ``U[k] = U[i] + e_l - e_m``.

    Candidates are located through an additive random hash and confirmed
    exactly, so hash collisions cannot produce wrong answers.
    """
    s, n = U.shape
    rng = np.random.default_rng(0x5EED)
    weights = rng.integers(1, 2**62, size=n, dtype=np.int64)
    with np.errstate(over="ignore"):
        hashes = U @ weights
    sort_idx = np.argsort(hashes, kind="stable")
    sorted_h = hashes[sort_idx]
    rows, ms = np.nonzero(U)
    ls = np.arange(n)
    I = np.repeat(rows, n)
    M = np.repeat(ms, n)
    L = np.tile(ls, len(rows))
    keep = L != M
    I, M, L = I[keep], M[keep], L[keep]
    with np.errstate(over="ignore"):
        target = hashes[I] + weights[L] - weights[M]
    lo = np.searchsorted(sorted_h, target, side="left")
    hi = np.searchsorted(sorted_h, target, side="right")
    count = hi - lo
    # expand hash ranges (almost always of length 0 or 1)
    sel = count > 0
    I, M, L, lo, count = I[sel], M[sel], L[sel], lo[sel], count[sel]
    rep = np.repeat(np.arange(len(I)), count)
    offs = np.arange(len(rep)) - np.repeat(np.cumsum(count) - count, count)
    I, M, L = I[rep], M[rep], L[rep]
    K = sort_idx[lo[rep] + offs]
    early = K < I
    I, M, L, K = I[early], M[early], L[early], K[early]
    delta = U[K] - U[I]
    delta[np.arange(len(I)), L] -= 1
    delta[np.arange(len(I)), M] += 1
    exact = ~delta.any(axis=1)
    I, L, K = I[exact], L[exact], K[exact]
    order = np.lexsort((K, L, I))
    found: list[dict[int, int]] = [{} for _ in range(s)]
    for i, l, k in zip(I[order].tolist(), L[order].tolist(), K[order].tolist()):
        found[i].setdefault(l + 1, k)
    return found


def _check_equigenerated(order: tuple[Monomial, ...], U: np.ndarray) -> QuotientOrder | None:
    # Same degree: u_k : u_i = x_l  iff  u_k = x_l * u_i / x_m for some m != l.
    neighbours = _unit_neighbours(U)
    UT = np.ascontiguousarray(U.T)
    steps: list[tuple[tuple[int, int], ...]] = [()]
    for i in range(1, len(U)):
        if i % 256 == 0:
            budget.check()
        found = neighbours[i]
        if not found:
            return None
        # an earlier generator with u_l <= v_l on every colon variable is uncovered
        ls = sorted(found)
        uncovered = UT[ls[0] - 1, :i] <= UT[ls[0] - 1, i]
        for l in ls[1:]:
            uncovered &= UT[l - 1, :i] <= UT[l - 1, i]
        if uncovered.any():
            return None
        steps.append(tuple(sorted(found.items())))
    return QuotientOrder(order, tuple(steps))


def first_failure(order: Sequence[Monomial]) -> int | None:
    """Position of the first step whose colon ideal is not linear."""
    U = np.asarray([tuple(u) for u in order], dtype=np.int64)
    for i in range(1, len(U)):
        if not _step(U, i)[1]:
            return i
    return None


def find_linear_quotients_order(I: MonomialIdeal, cap: int = SEARCH_CAP) -> QuotientOrder | None:
    """Exhaustive search for a linear-quotients order.

    Depth-first over prefixes; whether a valid prefix extends depends only on
    its set of generators, so failed sets are memoised.  Candidates with more
    colon-variable witnesses (then lower degree) are tried first.
    """
    gens = I.gens
    s = len(gens)
    if s > cap:
        raise CapExceeded(f"{s} generators exceeds the search cap {cap}")
    if s <= 1:
        return check_sequence(gens)
    U = np.asarray(gens, dtype=np.int64)
    C = np.maximum(U[:, None, :] - U[None, :, :], 0)  # C[j, i] = u_j : u_i
    deg = C.sum(axis=2)
    linvar = np.where(deg == 1, np.argmax(C, axis=2), -1)
    weights = 1 << np.arange(I.n, dtype=object)
    suppmask = [[int(sum(w for w, c in zip(weights, C[j, i]) if c)) for i in range(s)] for j in range(s)]
    linbit = [[(1 << int(linvar[j, i])) if linvar[j, i] >= 0 else 0 for i in range(s)] for j in range(s)]
    degs = [mo.degree(g) for g in gens]
    failed: set[int] = set()

    def admissible(placed: list[int], i: int) -> tuple[bool, int]:
        V = 0
        for j in placed:
            V |= linbit[j][i]
        for j in placed:
            if not suppmask[j][i] & V:
                return False, 0
        return True, bin(V).count("1")

    def dfs(placed: list[int], mask: int) -> list[int] | None:
        if len(placed) == s:
            return placed
        if mask in failed:
            return None
        budget.check()
        options = []
        for i in range(s):
            if mask >> i & 1:
                continue
            ok, w = admissible(placed, i)
            if ok:
                options.append((-w, degs[i], i))
        options.sort()
        for _, _, i in options:
            found = dfs(placed + [i], mask | 1 << i)
            if found is not None:
                return found
        failed.add(mask)
        return None

    found = dfs([], 0)
    if found is None:
        return None
    q = check_sequence([gens[i] for i in found])
    assert q is not None, "search produced an order the checker rejects"
    return q


def ek_betti(order: QuotientOrder):
    """Graded Betti numbers of an equigenerated ideal with linear quotients.

    ``beta_{i, d+i} = sum_k C(q_k, i)`` where ``q_k`` counts the colon
    variables at step ``k``.
    """
    from .betti import BettiTable

    if not order.gens:
        return BettiTable({})
    if not order.replay():
        raise ValueError("order does not replay as a linear-quotients certificate")
    degs = {mo.degree(g) for g in order.gens}
    if len(degs) != 1:
        raise ValueError("closed form requires an equigenerated ideal")
    d = degs.pop()
    entries: dict[tuple[int, int], int] = {}
    for q in order.quotient_counts():
        for i in range(q + 1):
            entries[(i, d + i)] = entries.get((i, d + i), 0) + comb(q, i)
    return BettiTable(entries)
