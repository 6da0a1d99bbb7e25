"""Conjecture checks over graph corpora, with deterministic JSON reports.

Conjectures, for a graph whose edge ideal has a linear resolution
(equivalently a cochordal graph) and ``k >= 1``:

* A: ``reg I(G)^(k) = reg I(G)^k``;
* B: ``I(G)^(k)`` is componentwise linear;
* C: ``I(G)^(k)`` has linear quotients.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import budget
from . import corpus
from . import graphs as gr
from . import monomials as mo
from . import symbolic as sy
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .graphs import Graph
from .linearity import betti as bt
from .linearity import certify as ce
from .linearity import constructions as co
from .linearity import quotients as qu

SCHEMA = "1"
DEFAULT_TIMEOUT = 60.0

HOLDS = "holds"
REFUTED = "refuted"
UNKNOWN = "unknown"
UNMET = "hypothesis-not-met"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_REFUTED = 3


def family_flags(G: Graph) -> dict[str, bool | None]:
    flags: dict[str, bool | None] = {}
    for name, pred in corpus.FAMILIES.items():
        try:
            flags[name] = bool(pred(G))
        except gr.ResourceLimitError:
            flags[name] = None
    return flags


@dataclass
class ConjectureReport:
    graph: str
    n: int
    conjecture: str
    k: int
    status: str
    families: dict[str, bool | None] = field(default_factory=dict)
    gen_degrees: list[int] = field(default_factory=list)
    predicted_degrees: list[int] | None = None
    evidence: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "graph": self.graph,
            "n": self.n,
            "conjecture": self.conjecture,
            "k": self.k,
            "status": self.status,
            "families": self.families,
            "gen_degrees": self.gen_degrees,
            "predicted_degrees": self.predicted_degrees,
            "evidence": self.evidence,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 4)
        return out


def _base_report(G: Graph, conjecture: str, k: int) -> ConjectureReport:
    if k < 1:
        raise ValueError("k must be positive")
    return ConjectureReport(emit_graph6(G), G.n, conjecture, k, UNKNOWN, family_flags(G))


def _hypothesis(G: Graph, report: ConjectureReport) -> bool:
    if not report.families["cochordal"]:
        report.status = UNMET
        report.evidence = {"reason": "graph is not cochordal"}
        return False
    if not G.num_edges():
        report.status = UNMET
        report.evidence = {"reason": "edgeless graph, I(G) = 0"}
        return False
    return True


def _fill_degrees(G: Graph, I: mo.MonomialIdeal, k: int, report: ConjectureReport) -> None:
    report.gen_degrees = sorted(mo.gen_degree_set(I))
    if report.families.get("perfect"):
        report.predicted_degrees = sorted(sy.predicted_gen_degrees(gr.clique_number(G), k))


def _peo_lex_candidates(perm: Sequence[int]):
    return lambda d, comp: [co.lex_sorted(comp.gens, perm)]


def certify_symbolic_components(G: Graph, k: int, strategy: str = "both",
                                I: mo.MonomialIdeal | None = None) -> dict[int, ce.CertificationResult]:
    """Componentwise certification of ``I(G)^(k)`` with PEO-lex candidates."""
    if I is None:
        I = sy.symbolic_power(G, k)
    perm = co.complement_peo(G)
    cands = _peo_lex_candidates(perm) if strategy != "betti" else None
    return ce.componentwise_linear_quotients(I, cands, strategy)


def _components_json(results: dict[int, ce.CertificationResult]) -> dict:
    return {str(d): r.to_json() for d, r in results.items()}


def check_conjecture_B(G: Graph, k: int, strategy: str = "both") -> ConjectureReport:
    t0 = time.perf_counter()
    report = _base_report(G, "B", k)
    if _hypothesis(G, report):
        I = sy.symbolic_power(G, k)
        _fill_degrees(G, I, k, report)
        results = certify_symbolic_components(G, k, strategy, I)
        status = ce.summarize(results)
        report.evidence = {"components": _components_json(results)}
        if status is ce.Status.REFUTED_BETTI:
            bad = next(d for d, r in results.items() if r.refuted)
            confirmed = ce.verify_refutation(mo.graded_component(I, bad), results[bad])
            report.status = REFUTED if confirmed else UNKNOWN
            report.evidence["refuting_degree"] = bad
        else:
            report.status = HOLDS if status.certified else UNKNOWN
    report.wall_time = time.perf_counter() - t0
    return report


def _whole_ideal_candidate(G: Graph, I: mo.MonomialIdeal, k: int, log: dict) -> qu.QuotientOrder | None:
    perm = co.complement_peo(G)
    if k == 2:
        try:
            con = co.i2_order(G)
        except co.ConstructionError as exc:
            log["construction_error"] = str(exc)
        else:
            log["construction"] = "i2"
            log["fallbacks"] = con.fallbacks
            return con.order
    # degree blocks, each in PEO-lex order
    cand = []
    for d in sorted(mo.gen_degree_set(I)):
        cand.extend(co.lex_sorted([g for g in I.gens if mo.degree(g) == d], perm))
    log["construction"] = "peo-lex by degree"
    q = qu.check_sequence(cand)
    return q


def check_conjecture_C(G: Graph, k: int, search_cap: int = qu.SEARCH_CAP) -> ConjectureReport:
    t0 = time.perf_counter()
    report = _base_report(G, "C", k)
    if _hypothesis(G, report):
        I = sy.symbolic_power(G, k)
        _fill_degrees(G, I, k, report)
        log: dict = {}
        q = _whole_ideal_candidate(G, I, k, log)
        if q is None:
            try:
                q = qu.find_linear_quotients_order(I, search_cap)
            except qu.CapExceeded as exc:
                log["search"] = str(exc)
            else:
                if q is None:
                    # exhaustive search over all orders: no linear-quotients order exists
                    report.status = REFUTED
                    log["search"] = "exhaustive, no order"
                    log["generators"] = [list(g) for g in I.gens]
                else:
                    log["construction"] = "search"
        if q is not None:
            report.status = HOLDS
            log["order"] = q.to_json()
        report.evidence = log
    report.wall_time = time.perf_counter() - t0
    return report


def certify_ordinary_power(G: Graph, k: int) -> ce.CertificationResult:
    """Linear quotients of ``I(G)^k`` (lex under the complement PEO, else search)."""
    P = mo.power(sy.edge_ideal(G), k)
    perm = co.complement_peo(G)
    return ce.certify_linear(P, "quotients", [co.lex_sorted(P.gens, perm)])


def check_conjecture_A_cochordal(G: Graph, k: int, strategy: str = "both") -> ConjectureReport:
    t0 = time.perf_counter()
    report = _base_report(G, "A", k)
    if _hypothesis(G, report):
        I = sy.symbolic_power(G, k)
        _fill_degrees(G, I, k, report)
        results = certify_symbolic_components(G, k, strategy, I)
        status = ce.summarize(results)
        top = mo.max_gen_degree(I)
        power = certify_ordinary_power(G, k)
        report.evidence = {
            "components": _components_json(results),
            "max_gen_degree": top,
            "ordinary_power": power.status.value,
        }
        if status.certified:
            # componentwise linear: reg equals the top generator degree; reg I^k = 2k
            report.status = HOLDS if top == 2 * k else REFUTED
            report.evidence["regularity"] = top
        else:
            try:
                reg = bt.regularity(I)
            except qu.CapExceeded:
                report.status = UNKNOWN
            else:
                report.evidence["regularity"] = reg
                report.status = HOLDS if reg == 2 * k else REFUTED
    report.wall_time = time.perf_counter() - t0
    return report


CHECKS = {"A": check_conjecture_A_cochordal, "B": check_conjecture_B, "C": check_conjecture_C}


def join_regularity_check(parts: Sequence[Graph], k: int) -> tuple[int, int]:
    """``(predicted, certified)`` regularity of ``I(G1 * ... * Gr)^(k)``.

    The prediction combines certified regularities of the parts' symbolic
    powers; the certified value comes from the joined graph directly.
    """
    regs = []
    for P in parts:
        row = []
        for i in range(1, k + 1):
            I = sy.symbolic_power(P, i)
            if not ce.summarize(certify_symbolic_components(P, i, "both", I)).certified:
                raise ValueError("a part could not be certified componentwise linear")
            row.append(mo.max_gen_degree(I))
        regs.append(row)
    J = parts[0]
    for P in parts[1:]:
        J = gr.join(J, P)
    I = sy.symbolic_power(J, k)
    if not ce.summarize(certify_symbolic_components(J, k, "both", I)).certified:
        raise ValueError("the join could not be certified componentwise linear")
    return sy.join_regularity_prediction(regs, k), mo.max_gen_degree(I)


# --- corpus runs ---------------------------------------------------------

@dataclass(frozen=True)
class SurveyConfig:
    conjectures: tuple[str, ...] = ("A", "B", "C")
    ks: tuple[int, ...] = (2,)
    family: str | None = "cochordal"
    timeout: float | None = DEFAULT_TIMEOUT
    strategy: str = "both"
    jobs: int = 1

    def to_json(self) -> dict:
        return {
            "conjectures": list(self.conjectures),
            "k": list(self.ks),
            "family": self.family,
            "timeout": self.timeout,
            "strategy": self.strategy,
        }


def _run_one(args) -> dict:
    index, line_no, text, config = args
    rec: dict = {"index": index, "line": line_no, "graph": text}
    G = parse_graph6(text)
    flags = family_flags(G)
    if config.family is not None and not flags.get(config.family):
        rec["skipped"] = f"not in family {config.family}"
        return rec
    reports = []
    for conj in config.conjectures:
        for k in config.ks:
            t0 = time.perf_counter()
            try:
                with budget.deadline(config.timeout):
                    if conj == "C":
                        r = check_conjecture_C(G, k)
                    else:
                        r = CHECKS[conj](G, k, config.strategy)
            except budget.DeadlineExceeded:
                r = _base_report(G, conj, k)
                r.evidence = {"reason": "timeout"}
                r.wall_time = time.perf_counter() - t0
            reports.append(r.to_json())
    rec["reports"] = reports
    return rec


def _parse_lines(lines: Iterable[str]):
    tasks, errors = [], []
    for line_no, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text == ">>graph6<<":
            continue
        try:
            parse_graph6(text)
        except Graph6Error as exc:
            errors.append({"line": line_no, "error": str(exc)})
            continue
        tasks.append((line_no, text))
    return tasks, errors


def survey(lines: Iterable[str], config: SurveyConfig = SurveyConfig()) -> tuple[dict, int]:
    """Run the configured checks on every graph6 line; returns ``(report, exit_code)``."""
    tasks, errors = _parse_lines(lines)
    work = [(i, ln, text, config) for i, (ln, text) in enumerate(tasks)]
    if config.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_one, work))
    else:
        results = [_run_one(w) for w in work]
    counts: dict[str, int] = {}
    for rec in results:
        for r in rec.get("reports", []):
            key = f"{r['conjecture']}:{r['status']}"
            counts[key] = counts.get(key, 0) + 1
    refuted = sum(v for key, v in counts.items() if key.endswith(":" + REFUTED))
    report = {
        "schema": SCHEMA,
        "config": config.to_json(),
        "results": results,
        "errors": errors,
        "summary": {
            "graphs": len(tasks),
            "checked": sum(1 for r in results if "reports" in r),
            "skipped": sum(1 for r in results if "skipped" in r),
            "input_errors": len(errors),
            "counts": dict(sorted(counts.items())),
            "refutations": refuted,
        },
    }
    code = EXIT_REFUTED if refuted else EXIT_INPUT if errors else EXIT_OK
    return report, code


def strip_timing(report: dict) -> dict:
    """Copy of a survey report without wall-clock fields."""
    out = dict(report)
    out["results"] = [
        {**rec, "reports": [{k: v for k, v in r.items() if k != "wall_time"} for r in rec["reports"]]}
        if "reports" in rec else rec
        for rec in report["results"]
    ]
    return out
