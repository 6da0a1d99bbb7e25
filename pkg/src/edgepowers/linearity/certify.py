"""Certification of linear and componentwise linear resolutions.

Linear quotients are tried first (cheap and sufficient), exact Betti numbers
second.  A failed search is never a refutation: only a computed Betti entry
off the linear strand refutes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping, Sequence

from .. import budget
from .. import monomials as mo
from ..monomials import Monomial, MonomialIdeal
from .betti import BETTI_CAP, BettiTable, multigraded_betti, nonlinear_entries
from .quotients import SEARCH_CAP, CapExceeded, QuotientOrder, check_sequence, find_linear_quotients_order

STRATEGIES = ("quotients", "betti", "both")


class Status(str, Enum):
    CERTIFIED_LQ = "CertifiedLinearQuotients"
    CERTIFIED_BETTI = "CertifiedByBetti"
    REFUTED_BETTI = "RefutedByBetti"
    UNKNOWN = "Unknown"

    @property
    def certified(self) -> bool:
        return self in (Status.CERTIFIED_LQ, Status.CERTIFIED_BETTI)


@dataclass(frozen=True)
class CertificationResult:
    status: Status
    evidence: QuotientOrder | BettiTable | None = None
    note: str = ""

    @property
    def certified(self) -> bool:
        return self.status.certified

    @property
    def refuted(self) -> bool:
        return self.status is Status.REFUTED_BETTI

    def to_json(self) -> dict:
        out: dict = {"status": self.status.value}
        if isinstance(self.evidence, QuotientOrder):
            out["order"] = self.evidence.to_json()
        elif isinstance(self.evidence, BettiTable):
            out["betti"] = self.evidence.to_json()
        if self.note:
            out["note"] = self.note
        return out


def _check_strategy(strategy: str) -> None:
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}")


def certify_linear(I: MonomialIdeal, strategy: str = "both", candidates: Sequence[Sequence[Monomial]] = (),
                   search_cap: int = SEARCH_CAP, betti_cap: int = BETTI_CAP) -> CertificationResult:
    """Decide whether an equigenerated ideal has a linear resolution."""
    _check_strategy(strategy)
    degs = mo.gen_degree_set(I)
    if len(degs) > 1:
        raise ValueError("certify_linear expects an equigenerated ideal")
    notes = []
    if strategy in ("quotients", "both"):
        for cand in candidates:
            cand = [tuple(u) for u in cand]
            if len(cand) == len(I.gens) and set(cand) == set(I.gens):
                q = check_sequence(cand)
                if q is not None:
                    return CertificationResult(Status.CERTIFIED_LQ, q)
                notes.append("candidate order rejected")
        try:
            q = find_linear_quotients_order(I, search_cap)
        except CapExceeded as exc:
            notes.append(str(exc))
        else:
            if q is not None:
                return CertificationResult(Status.CERTIFIED_LQ, q)
            notes.append("no linear-quotients order exists")
    if strategy in ("betti", "both"):
        try:
            table = multigraded_betti(I, betti_cap)
        except CapExceeded as exc:
            notes.append(str(exc))
        else:
            if I.is_zero or not nonlinear_entries(table, degs.pop()):
                return CertificationResult(Status.CERTIFIED_BETTI, table, "; ".join(notes))
            return CertificationResult(Status.REFUTED_BETTI, table, "; ".join(notes))
    return CertificationResult(Status.UNKNOWN, None, "; ".join(notes))


Candidates = Mapping[int, Sequence[Sequence[Monomial]]] | Callable[[int, MonomialIdeal], Sequence[Sequence[Monomial]]]


def componentwise_linear_quotients(I: MonomialIdeal, candidates: Candidates | None = None,
                                   strategy: str = "quotients", search_cap: int = SEARCH_CAP,
                                   betti_cap: int = BETTI_CAP) -> dict[int, CertificationResult]:
    """Certify ``I_<d>`` for every generator degree ``d`` of ``I``.

    Components in higher degrees are multiples of the top one and inherit a
    linear resolution, so only generator degrees are examined.
    """
    _check_strategy(strategy)
    out = {}
    for d in sorted(mo.gen_degree_set(I)):
        budget.check()
        comp = mo.graded_component(I, d)
        if candidates is None:
            cands = ()
        elif callable(candidates):
            cands = candidates(d, comp)
        else:
            cands = candidates.get(d, ())
        out[d] = certify_linear(comp, strategy, cands, search_cap, betti_cap)
    return out


def summarize(results: Mapping[int, CertificationResult]) -> Status:
    """Whole-ideal status: refuted if any component is, certified if all are."""
    statuses = [r.status for r in results.values()]
    if any(s is Status.REFUTED_BETTI for s in statuses):
        return Status.REFUTED_BETTI
    if statuses and all(s.certified for s in statuses):
        return Status.CERTIFIED_LQ if all(s is Status.CERTIFIED_LQ for s in statuses) else Status.CERTIFIED_BETTI
    if not statuses:
        return Status.CERTIFIED_LQ
    return Status.UNKNOWN


def is_componentwise_linear_exact(I: MonomialIdeal, cap: int = BETTI_CAP) -> CertificationResult:
    """Exact Betti check of every generator-degree component.

    The evidence is the first component table with an entry off the linear
    strand, or the last table computed when all are linear.
    """
    last = None
    for d in sorted(mo.gen_degree_set(I)):
        comp = mo.graded_component(I, d)
        try:
            table = multigraded_betti(comp, cap)
        except CapExceeded as exc:
            return CertificationResult(Status.UNKNOWN, None, f"degree {d}: {exc}")
        if nonlinear_entries(table, d):
            return CertificationResult(Status.REFUTED_BETTI, table, f"degree {d} component is not linear")
        last = table
    return CertificationResult(Status.CERTIFIED_BETTI, last)


def verify_refutation(I: MonomialIdeal, result: CertificationResult) -> bool:
    """Independent re-check that a refutation's Betti evidence is genuine."""
    if not result.refuted or not isinstance(result.evidence, BettiTable):
        return False
    degs = mo.gen_degree_set(I)
    if len(degs) != 1:
        return False
    fresh = multigraded_betti(I, max(BETTI_CAP, len(I.gens)))
    return fresh == result.evidence and bool(nonlinear_entries(fresh, degs.pop()))


def next_degree_check(I: MonomialIdeal, strategy: str = "both") -> CertificationResult:
    """Certify the component one degree above the top generator degree."""
    return certify_linear(mo.graded_component(I, mo.max_gen_degree(I) + 1), strategy)
