"""Graded Betti numbers of monomial ideals over the rationals.

For a multidegree ``a`` in the lcm lattice of ``G(I)`` the upper Koszul
simplicial complex is ``K^a = {F ⊆ supp(a) : x^(a - F) ∈ I}`` and
``beta_{i,a}(I) = dim H~_{i-1}(K^a; Q)``.  Ranks of boundary maps come from
fraction-free integer elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .. import budget
from .. import monomials as mo
from ..monomials import MonomialIdeal
from .quotients import CapExceeded

BETTI_CAP = 16


def rank_fraction_free(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix by Bareiss elimination.

    Every intermediate entry is a minor of the input, so each division is
    exact and no fractions appear.
    """
    A = [list(r) for r in rows]
    m = len(A)
    ncols = len(A[0]) if m else 0
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, m):
            a = A[i][c]
            row = A[i]
            prow = A[r]
            for j in range(c + 1, ncols):
                row[j] = (row[j] * p - a * prow[j]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def reduced_homology_ranks(faces: set[int], nverts: int) -> dict[int, int]:
    """``dim H~_p`` for a simplicial complex given by face bitmasks.

    The empty face (mask 0) must be present for a non-void complex; the
    result includes ``p = -1``.
    """
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    for lst in by_dim.values():
        lst.sort()
    index = {p: {f: k for k, f in enumerate(lst)} for p, lst in by_dim.items()}
    ranks: dict[int, int] = {}
    top = max(by_dim, default=-2)
    for p in range(0, top + 1):
        rows_faces = by_dim.get(p, [])
        lower = index.get(p - 1, {})
        if not rows_faces or not lower:
            ranks[p] = 0
            continue
        mat = []
        for f in rows_faces:
            row = [0] * len(lower)
            bits = [b for b in range(nverts) if f >> b & 1]
            for pos, b in enumerate(bits):
                row[lower[f & ~(1 << b)]] = -1 if pos % 2 else 1
            mat.append(row)
        ranks[p] = rank_fraction_free(mat)
    out = {}
    for p in range(-1, top + 1):
        dim_c = len(by_dim.get(p, []))
        out[p] = dim_c - ranks.get(p, 0) - ranks.get(p + 1, 0)
    return out


def _is_cone(faces: set[int], nverts: int) -> bool:
    for b in range(nverts):
        bit = 1 << b
        if all(f | bit in faces for f in faces):
            return True
    return False


@dataclass(frozen=True)
class BettiTable:
    """Sparse graded Betti numbers ``(i, j) -> beta_{i,j}`` over a field of characteristic 0."""

    entries: Mapping[tuple[int, int], int]
    characteristic: int = 0

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in sorted(self.entries.items()) if v})

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return dict(self.entries) == dict(other.entries) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(tuple(self.entries.items()))

    @property
    def regularity(self) -> int:
        if not self.entries:
            raise mo.ZeroIdealError("the zero ideal has no regularity")
        return max(j - i for i, j in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), v in self.entries.items():
            out[i] = out.get(i, 0) + v
        return out

    def triples(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in self.entries.items()]

    def to_json(self) -> dict:
        return {"characteristic": self.characteristic, "entries": [list(t) for t in self.triples()]}

    def pretty(self) -> str:
        if not self.entries:
            return "(zero ideal)"
        rows = sorted({j - i for i, j in self.entries})
        cols = range(self.projective_dimension + 1)
        lines = ["      " + " ".join(f"{i:>5}" for i in cols)]
        for r in rows:
            vals = " ".join(f"{self[(i, i + r)] or '.':>5}" for i in cols)
            lines.append(f"{r:>5}: {vals}")
        return "\n".join(lines)


def lcm_lattice(I: MonomialIdeal) -> set[mo.Monomial]:
    """All lcms of non-empty subsets of ``G(I)``."""
    lattice = set(I.gens)
    frontier = list(I.gens)
    while frontier:
        budget.check()
        nxt = []
        for m in frontier:
            for g in I.gens:
                l = mo.lcm(m, g)
                if l not in lattice:
                    lattice.add(l)
                    nxt.append(l)
        frontier = nxt
    return lattice


def multigraded_betti(I: MonomialIdeal, cap: int = BETTI_CAP, multigraded: bool = False):
    """Graded Betti table of ``I`` (optionally also the multigraded ranks)."""
    if len(I.gens) > cap:
        raise CapExceeded(f"{len(I.gens)} generators exceeds the exact Betti cap {cap}")
    multi: dict[tuple[int, mo.Monomial], int] = {}
    if I.gens:
        G = I.array()
        for a in sorted(lcm_lattice(I), key=mo.grlex_key):
            budget.check()
            supp = [i for i, e in enumerate(a) if e]
            s = len(supp)
            subsets = np.array([[m >> b & 1 for b in range(s)] for m in range(1 << s)], dtype=np.int64)
            shifted = np.tile(np.asarray(a, dtype=np.int64), (1 << s, 1))
            shifted[:, supp] -= subsets
            member = (shifted[:, None, :] >= G[None, :, :]).all(axis=2).any(axis=1)
            faces = {m for m in range(1 << s) if member[m]}
            if _is_cone(faces, s):
                continue
            for p, r in reduced_homology_ranks(faces, s).items():
                if r:
                    multi[(p + 1, a)] = r
    graded: dict[tuple[int, int], int] = {}
    for (i, a), r in multi.items():
        key = (i, mo.degree(a))
        graded[key] = graded.get(key, 0) + r
    table = BettiTable(graded)
    return (table, multi) if multigraded else table


def regularity(I: MonomialIdeal, cap: int = BETTI_CAP) -> int:
    return multigraded_betti(I, cap).regularity


def has_linear_resolution(I: MonomialIdeal, cap: int = BETTI_CAP, table: BettiTable | None = None) -> bool:
    """Equigenerated in degree ``d`` with ``beta_{i,j} = 0`` unless ``j = d + i``."""
    if I.is_zero:
        return True
    degs = mo.gen_degree_set(I)
    if len(degs) != 1:
        return False
    d = degs.pop()
    if table is None:
        table = multigraded_betti(I, cap)
    return all(j == d + i for i, j in table.entries)


def nonlinear_entries(table: BettiTable, d: int) -> list[tuple[int, int, int]]:
    return [(i, j, v) for (i, j), v in table.entries.items() if j != d + i]

