"""Command-line interface: ``edgepowers <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import budget
from . import corpus
from . import explorer as ex
from . import graphs as gr
from . import monomials as mo
from . import symbolic as sy
from .graph6 import Graph6Error, emit_graph6, read_graph_arg
from .linearity import betti as bt
from .linearity import certify as ce
from .linearity import constructions as co
from .linearity import quotients as qu


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def cmd_symbolic(args) -> int:
    G = read_graph_arg(args.graph)
    ideals = {}
    if args.method in ("intersect", "both"):
        ideals["intersect"] = sy.symbolic_power(G, args.k)
    if args.method in ("clique", "both"):
        ideals["clique"] = sy.perfect_symbolic_power(G, args.k)
    out = {"graph": emit_graph6(G), "k": args.k}
    for name, I in ideals.items():
        out[name] = {"gen_degrees": sorted(mo.gen_degree_set(I)), "ideal": mo.ideal_to_json(I)}
    if len(ideals) == 2:
        out["agree"] = mo.equals(ideals["intersect"], ideals["clique"])
    if args.text:
        print(mo.format_ideal(next(iter(ideals.values()))))
    else:
        print(_dump(out))
    return 0 if out.get("agree", True) else 1


def cmd_betti(args) -> int:
    with open(args.ideal) as fh:
        I = mo.parse_ideal(fh.read())
    table = bt.multigraded_betti(I, args.cap)
    out = {"betti": table.to_json(), "linear": bt.has_linear_resolution(I, args.cap, table)}
    if not I.is_zero:
        out["regularity"] = table.regularity
    print(_dump(out))
    if args.pretty:
        print(table.pretty(), file=sys.stderr)
    return 0


def cmd_order(args) -> int:
    G = read_graph_arg(args.graph)
    I = sy.symbolic_power(G, args.power)
    extra = {}
    if args.construct == "i2":
        if args.power != 2:
            raise SystemExit("--construct i2 requires --power 2")
        con = co.i2_order(G)
        q = con.order
        extra = {"stages": con.stages, "fallbacks": con.fallbacks}
    elif args.construct == "peo-lex":
        system = sy.CoverPrimeSystem.for_graph(G, args.power)
        comps = co.certify_peo_lex_components(G, system, I)
        out = {str(d): (c.to_json() if c is not None else None) for d, c in comps.items()}
        ok = all(c is not None for c in comps.values())
        print(_dump({"graph": emit_graph6(G), "power": args.power, "components": out, "verified": ok}))
        return 0 if ok else 1
    else:
        q = qu.find_linear_quotients_order(I, args.cap)
    out = {"graph": emit_graph6(G), "power": args.power, "construct": args.construct, **extra}
    if q is None:
        out["order"] = None
        print(_dump(out))
        return 1
    out["order"] = q.to_json()
    if args.verify:
        out["verified"] = qu.check_linear_quotients_order(I, q.gens) is not None and q.replay()
    print(_dump(out))
    return 0 if out.get("verified", True) else 1


def _read_lines(path: str | None) -> list[str]:
    if path in (None, "-"):
        return sys.stdin.read().splitlines()
    with open(path) as fh:
        return fh.read().splitlines()


def cmd_check(args) -> int:
    if args.input:
        lines = _read_lines(args.input)
    else:
        lines = [emit_graph6(G) for G in corpus.enumerate_graphs(args.n, dedup=True)]
    config = ex.SurveyConfig((args.conjecture,), (args.k,), args.family, args.timeout, args.certify, args.jobs)
    report, code = ex.survey(lines, config)
    print(_dump(report))
    return code


def cmd_survey(args) -> int:
    config = ex.SurveyConfig(tuple(args.conjectures), tuple(args.k), args.family, args.timeout,
                             args.certify, args.jobs)
    report, code = ex.survey(_read_lines(args.input), config)
    text = json.dumps(report, sort_keys=True, indent=1)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


def cmd_selfcheck(args) -> int:
    """Randomised agreement checks between independent routes."""
    rng = random.Random(args.seed)
    failures = []
    for trial in range(args.trials):
        n = rng.randint(2, 6)
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < 0.5]
        G = gr.Graph.from_edges(n, edges)
        if not edges:
            continue
        k = rng.randint(1, 3)
        system = sy.CoverPrimeSystem.for_graph(G, [rng.randint(1, 3) for _ in gr.minimal_vertex_covers(G)])
        if not mo.equals(sy.veronese_intersection(system), sy.sigma_ideal(system)):
            failures.append(f"trial {trial}: intersection and sigma differ on {emit_graph6(G)}")
        if n <= 6 and gr.is_perfect(G):
            if not mo.equals(sy.symbolic_power(G, k), sy.perfect_symbolic_power(G, k)):
                failures.append(f"trial {trial}: clique formula differs on {emit_graph6(G)}, k={k}")
        if gr.is_cochordal(G):
            comps = co.certify_peo_lex_components(G, system)
            if any(c is None for c in comps.values()):
                failures.append(f"trial {trial}: PEO-lex order rejected on {emit_graph6(G)}")
    print(_dump({"seed": args.seed, "trials": args.trials, "failures": failures}))
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgepowers", description="Symbolic powers of edge ideals.")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for corpus runs")
    p.add_argument("--timeout", type=float, default=ex.DEFAULT_TIMEOUT, help="seconds per graph")
    p.add_argument("--seed", type=int, default=0, help="seed for randomised checks")
    p.add_argument("--certify", choices=ce.STRATEGIES, default="both", help="certification strategy")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("symbolic", help="compute I(G)^(k)")
    s.add_argument("--graph", required=True, help="graph6 string or @edge-list-file")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--method", choices=["intersect", "clique", "both"], default="intersect")
    s.add_argument("--text", action="store_true", help="print the ideal in text format")
    s.set_defaults(func=cmd_symbolic)

    s = sub.add_parser("betti", help="graded Betti numbers of a monomial ideal file")
    s.add_argument("--ideal", required=True)
    s.add_argument("--cap", type=int, default=bt.BETTI_CAP)
    s.add_argument("--pretty", action="store_true")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("order", help="linear-quotients order of I(G)^(k)")
    s.add_argument("--graph", required=True)
    s.add_argument("--power", type=int, required=True)
    s.add_argument("--construct", choices=["i2", "peo-lex", "search"], default="search")
    s.add_argument("--verify", action="store_true")
    s.add_argument("--cap", type=int, default=qu.SEARCH_CAP)
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("check", help="check one conjecture on a family")
    s.add_argument("--conjecture", choices=["A", "B", "C"], required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--family", choices=sorted(corpus.FAMILIES), default="cochordal")
    s.add_argument("--input", help="graph6 file ('-' for stdin); default enumerates --n")
    s.add_argument("--n", type=int, default=5)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("survey", help="run conjecture checks over a graph6 corpus")
    s.add_argument("--input", required=True)
    s.add_argument("--out")
    s.add_argument("--conjectures", nargs="+", choices=["A", "B", "C"], default=["A", "B", "C"])
    s.add_argument("--k", type=int, nargs="+", default=[2])
    s.add_argument("--family", choices=sorted(corpus.FAMILIES), default="cochordal")
    s.set_defaults(func=cmd_survey)

    s = sub.add_parser("selfcheck", help="randomised cross-checks of independent routes")
    s.add_argument("--trials", type=int, default=50)
    s.set_defaults(func=cmd_selfcheck)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with budget.deadline(None):
            return args.func(args)
    except (Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ex.EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
