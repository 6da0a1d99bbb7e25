"""Exact monomials and monomial ideals.

A monomial is a tuple of non-negative exponents, ``exps[i - 1]`` being the
exponent of ``x_i``.  A :class:`MonomialIdeal` always stores its minimal
generators, sorted in graded lex order (degree ascending, then
lexicographically descending with ``x1 > ... > xn``).
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

Monomial = tuple  # tuple[int, ...]


# Exponents are bounded so that vectorised sums of exponent rows stay far
# inside int64; exceeding the bound raises instead of wrapping.
MAX_EXPONENT = 2**31 - 1


class ZeroIdealError(ValueError):
    """Raised by invariants that are undefined on the zero ideal."""


class AmbientMismatch(ValueError):
    pass


def degree(u: Monomial) -> int:
    return sum(u)


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def colon_mono(u: Monomial, v: Monomial) -> Monomial:
    """``u : v = u / gcd(u, v)``."""
    if len(u) != len(v):
        raise AmbientMismatch(f"monomials live in {len(u)} and {len(v)} variables")
    return tuple(a - b if a > b else 0 for a, b in zip(u, v))


def support(u: Monomial) -> frozenset[int]:
    """1-based indices of the variables dividing ``u``."""
    return frozenset(i + 1 for i, a in enumerate(u) if a)


def restrict(u: Monomial, A: Iterable[int]) -> Monomial:
    """``u_A``: keep only the exponents of the variables indexed by ``A``."""
    keep = set(A)
    return tuple(a if i + 1 in keep else 0 for i, a in enumerate(u))


def variable(i: int, n: int) -> Monomial:
    e = [0] * n
    e[i - 1] = 1
    return tuple(e)


def squarefree(vertices: Iterable[int], n: int) -> Monomial:
    """``x_F`` for a vertex set ``F``."""
    e = [0] * n
    for v in vertices:
        e[v - 1] = 1
    return tuple(e)


def grlex_key(u: Monomial):
    return (sum(u), tuple(-a for a in u))


def lex_key(u: Monomial):
    """Sort key putting lex-larger monomials first (``x1 > ... > xn``)."""
    return tuple(-a for a in u)


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All weak compositions of ``d`` into ``n`` parts, lex descending."""
    out = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def monomial_array(n: int, d: int) -> np.ndarray:
    """Exponent rows of all degree-``d`` monomials in ``n`` variables, lex descending."""
    return _monomial_array(n, d).copy()


@functools.lru_cache(maxsize=64)
def _monomial_array(n: int, d: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1 if d == 0 else 0, 0), dtype=np.int64)
    if n == 1:
        return np.array([[d]], dtype=np.int64)
    blocks = []
    for a in range(d, -1, -1):
        rest = _monomial_array(n - 1, d - a)
        blocks.append(np.concatenate([np.full((len(rest), 1), a, dtype=np.int64), rest], axis=1))
    out = np.concatenate(blocks, axis=0)
    out.setflags(write=False)
    return out


def _as_array(gens: Sequence[Monomial], n: int) -> np.ndarray:
    if not gens:
        return np.zeros((0, n), dtype=np.int64)
    return np.asarray(gens, dtype=np.int64).reshape(len(gens), n)


def _minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Drop duplicate rows and rows divisible by another row."""
    if len(arr) <= 1:
        return arr
    arr = np.unique(arr, axis=0)
    degs = arr.sum(axis=1)
    kept: list[np.ndarray] = []
    kept_arr = arr[:0]
    for d in np.unique(degs):
        block = arr[degs == d]
        if len(kept_arr):
            bad = np.zeros(len(block), dtype=bool)
            # chunk to bound memory of the (block x kept x n) comparison
            step = max(1, 2_000_000 // max(1, len(kept_arr) * arr.shape[1]))
            for s in range(0, len(block), step):
                sub = block[s:s + step]
                bad[s:s + step] = (kept_arr[None, :, :] <= sub[:, None, :]).all(axis=2).any(axis=1)
            block = block[~bad]
        if len(block):
            kept.append(block)
            kept_arr = np.concatenate(kept, axis=0)
    return kept_arr


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``K[x1..xn]`` given by its minimal generators.

    Build instances with :func:`minimalize` (or the arithmetic helpers) so
    the interreduction invariant holds; the bare constructor trusts its input.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.n:
                raise AmbientMismatch(f"generator {g} does not live in {self.n} variables")
            if any(a < 0 for a in g):
                raise ValueError(f"negative exponent in {g}")
            if any(a > MAX_EXPONENT for a in g):
                raise OverflowError(f"exponent in {g} exceeds {MAX_EXPONENT}")

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def array(self) -> np.ndarray:
        return _as_array(self.gens, self.n)

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def minimalize(gens: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    """Interreduce a set of monomials into a :class:`MonomialIdeal`."""
    gens = [tuple(int(a) for a in g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("cannot infer the number of variables from an empty list")
        n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise AmbientMismatch(f"generator {g} does not live in {n} variables")
        if any(a > MAX_EXPONENT for a in g):
            raise OverflowError(f"exponent in {g} exceeds {MAX_EXPONENT}")
    return _from_array(_minimal_rows(_as_array(gens, n)), n)


def _from_array(arr: np.ndarray, n: int) -> MonomialIdeal:
    gens = sorted((tuple(int(a) for a in row) for row in arr), key=grlex_key)
    return MonomialIdeal(n, tuple(gens))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ((0,) * n,))


def _same_ambient(*ideals: MonomialIdeal) -> int:
    ns = {I.n for I in ideals}
    if len(ns) != 1:
        raise AmbientMismatch(f"ideals live in different rings: {sorted(ns)}")
    return ns.pop()


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    if len(u) != I.n:
        raise AmbientMismatch(f"{u} does not live in {I.n} variables")
    return any(divides(g, u) for g in I.gens)


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """``J ⊆ I``."""
    _same_ambient(I, J)
    return all(contains(I, g) for g in J.gens)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ambient(I, J)
    return I.gens == J.gens


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    n = _same_ambient(*ideals)
    arr = np.concatenate([I.array() for I in ideals], axis=0)
    return _from_array(_minimal_rows(arr), n)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _same_ambient(I, J)
    if I.is_zero or J.is_zero:
        return zero_ideal(n)
    arr = (I.array()[:, None, :] + J.array()[None, :, :]).reshape(-1, n)
    return _from_array(_minimal_rows(arr), n)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return unit_ideal(I.n)
    out = I
    for _ in range(k - 1):
        out = product(out, I)
    return out


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _same_ambient(I, J)
    if I.is_zero or J.is_zero:
        return zero_ideal(n)
    arr = np.maximum(I.array()[:, None, :], J.array()[None, :, :]).reshape(-1, n)
    return _from_array(_minimal_rows(arr), n)


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Left-to-right pairwise fold."""
    if not ideals:
        raise ValueError("empty intersection")
    return reduce(intersect, ideals)


def colon_ideal(I: MonomialIdeal, v: Monomial) -> MonomialIdeal:
    """``I : (v)``, generated by ``u : v`` for ``u`` in ``G(I)``."""
    if len(v) != I.n:
        raise AmbientMismatch(f"{v} does not live in {I.n} variables")
    return minimalize([colon_mono(u, v) for u in I.gens], I.n) if I.gens else zero_ideal(I.n)


def graded_component(I: MonomialIdeal, d: int) -> MonomialIdeal:
    """``I_<d>``: the ideal generated by all degree-``d`` monomials of ``I``."""
    if d < 0:
        raise ValueError("negative degree")
    blocks = []
    for g in I.gens:
        e = degree(g)
        if e > d:
            continue
        fill = monomials_of_degree(I.n, d - e)
        blocks.append(_as_array(fill, I.n) + np.asarray(g, dtype=np.int64))
    if not blocks:
        return zero_ideal(I.n)
    arr = np.unique(np.concatenate(blocks, axis=0), axis=0)
    return _from_array(arr, I.n)


def gen_degree_set(I: MonomialIdeal) -> set[int]:
    return {degree(g) for g in I.gens}


def alpha(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise ZeroIdealError("initial degree of the zero ideal is undefined")
    return min(gen_degree_set(I))


def max_gen_degree(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise ZeroIdealError("zero ideal has no generators")
    return max(gen_degree_set(I))


def is_equigenerated(I: MonomialIdeal) -> bool:
    return len(gen_degree_set(I)) == 1


def relabel(u: Monomial, perm: Sequence[int]) -> Monomial:
    """Rename variables: ``x_{perm[i-1]}`` becomes ``x_i``.

    ``perm`` is a 1-based list; the result has exponent ``u[perm[i-1]-1]`` at
    position ``i``.
    """
    return tuple(u[p - 1] for p in perm)


def unrelabel(u: Monomial, perm: Sequence[int]) -> Monomial:
    """Inverse of :func:`relabel`."""
    out = [0] * len(u)
    for i, p in enumerate(perm):
        out[p - 1] = u[i]
    return tuple(out)


# --- text / JSON formats -------------------------------------------------

_TOKEN = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def format_monomial(u: Monomial) -> str:
    parts = []
    for i, a in enumerate(u, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return " ".join(parts) if parts else "1"


def parse_monomial(text: str, n: int) -> Monomial:
    e = [0] * n
    tokens = text.split()
    if tokens == ["1"]:
        return tuple(e)
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad monomial token {tok!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n}")
        e[i - 1] += int(m.group(2) or 1)
    return tuple(e)


def format_ideal(I: MonomialIdeal) -> str:
    lines = [f"n={I.n}"]
    lines += [format_monomial(g) for g in I.gens] if I.gens else ["0"]
    return "\n".join(lines) + "\n"


def parse_ideal(text: str) -> MonomialIdeal:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("ideal file must start with a line 'n=<int>'")
    n = int(lines[0][2:])
    body = lines[1:]
    if body == ["0"]:
        return zero_ideal(n)
    if not body:
        raise ValueError("no generators; write a line '0' for the zero ideal")
    return minimalize([parse_monomial(ln, n) for ln in body], n)


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"n": I.n, "gens": [list(g) for g in I.gens]}


def ideal_from_json(obj: dict) -> MonomialIdeal:
    n = int(obj["n"])
    gens = [tuple(int(a) for a in g) for g in obj["gens"]]
    return minimalize(gens, n) if gens else zero_ideal(n)
