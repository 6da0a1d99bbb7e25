import json

import pytest

from edgepowers import cli
from edgepowers import corpus
from edgepowers import explorer as ex
from edgepowers import graphs as gr
from edgepowers import monomials as mo
from edgepowers.graph6 import emit_graph6, emit_edge_list


def all_graph6(n):
    return [emit_graph6(G) for G in corpus.enumerate_graphs(n, dedup=True)]


# --- conjecture checks ----------------------------------------------------

def test_complements_of_trees_hold():
    for T in corpus.trees(5):
        G = gr.complement(T)
        if not G.num_edges():
            continue
        for k in (1, 2, 3):
            assert ex.check_conjecture_B(G, k).status == ex.HOLDS
            assert ex.check_conjecture_A_cochordal(G, k).status == ex.HOLDS
        assert ex.check_conjecture_C(G, 2).status == ex.HOLDS


def test_triangle_square_report():
    r = ex.check_conjecture_B(corpus.complete_graph(3), 2)
    assert r.status == ex.HOLDS and r.gen_degrees == [3, 4] and r.predicted_degrees == [3, 4]
    assert sorted(r.evidence["components"]) == ["3", "4"]
    c = ex.check_conjecture_C(corpus.complete_graph(3), 2)
    assert c.evidence["construction"] == "i2" and len(c.evidence["order"]["gens"]) == 4


def test_hypothesis_not_met():
    for f in ex.CHECKS.values():
        r = f(corpus.cycle_graph(5), 2)
        assert r.status == ex.UNMET
    assert ex.check_conjecture_B(corpus.empty_graph(3), 1).status == ex.UNMET


def test_conjecture_a_reports_ordinary_power():
    r = ex.check_conjecture_A_cochordal(corpus.complete_graph(4), 2)
    assert r.status == ex.HOLDS
    assert r.evidence["max_gen_degree"] == 4 and r.evidence["ordinary_power"] == "CertifiedLinearQuotients"


def test_join_check():
    assert ex.join_regularity_check([corpus.complete_graph(2), corpus.path_graph(3)], 2) == (4, 4)
    assert ex.join_regularity_check([corpus.complete_graph(2), corpus.complete_graph(2)], 1) == (2, 2)


# --- survey ---------------------------------------------------------------

def test_survey_four_vertices_no_refutation():
    report, code = ex.survey(all_graph6(4), ex.SurveyConfig(("C",), (2,)))
    assert code == ex.EXIT_OK and report["summary"]["refutations"] == 0
    assert report["schema"] == "1"


def test_survey_empty_input():
    report, code = ex.survey([])
    assert code == 0 and report["results"] == [] and report["summary"]["graphs"] == 0


def test_survey_filters_c5():
    report, code = ex.survey([emit_graph6(corpus.cycle_graph(5))])
    assert code == 0 and report["results"][0]["skipped"]


def test_survey_bad_line_reported():
    lines = ["Bw", "C5?bad", "", ">>graph6<<Bw"]
    report, code = ex.survey(lines, ex.SurveyConfig(("B",), (1,)))
    assert code == ex.EXIT_INPUT
    assert [e["line"] for e in report["errors"]] == [2]
    assert report["summary"]["checked"] == 2


def test_survey_deterministic_and_parallel():
    lines = all_graph6(4) + all_graph6(5)[:10]
    cfg = ex.SurveyConfig(("A", "B", "C"), (1, 2))
    a, _ = ex.survey(lines, cfg)
    b, _ = ex.survey(lines, cfg)
    c, _ = ex.survey(lines, ex.SurveyConfig(("A", "B", "C"), (1, 2), jobs=2))
    dump = lambda r: json.dumps(ex.strip_timing(r), sort_keys=True)
    assert dump(a) == dump(b) == dump(c)


def test_survey_timeout_gives_unknown():
    report, _ = ex.survey(["Bw"], ex.SurveyConfig(("B",), (2,), timeout=0))
    rep = report["results"][0]["reports"][0]
    assert rep["status"] == ex.UNKNOWN and rep["evidence"]["reason"] == "timeout"


def test_refutation_exit_code(monkeypatch):
    def fake(G, k, strategy="both"):
        r = ex._base_report(G, "B", k)
        r.status = ex.REFUTED
        return r

    monkeypatch.setitem(ex.CHECKS, "B", fake)
    _, code = ex.survey(["Bw"], ex.SurveyConfig(("B",), (1,)))
    assert code == ex.EXIT_REFUTED


# --- command line ---------------------------------------------------------

def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


def test_cli_symbolic(capsys):
    code, out = run(capsys, "symbolic", "--graph", "Bw", "--k", "2", "--method", "both")
    data = json.loads(out.out)
    assert code == 0 and data["agree"] and data["intersect"]["gen_degrees"] == [3, 4]


def test_cli_symbolic_edge_file(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(emit_edge_list(corpus.path_graph(3)))
    code, out = run(capsys, "symbolic", "--graph", f"@{path}", "--k", "2", "--text")
    assert code == 0 and mo.parse_ideal(out.out).gens == ((2, 2, 0), (1, 2, 1), (0, 2, 2))


def test_cli_betti(capsys, tmp_path):
    path = tmp_path / "i.txt"
    path.write_text("n=4\nx1 x2\nx3 x4\n")
    code, out = run(capsys, "betti", "--ideal", str(path))
    data = json.loads(out.out)
    assert code == 0 and not data["linear"] and data["regularity"] == 3
    assert [1, 4, 1] in data["betti"]["entries"]


@pytest.mark.parametrize("construct", ["i2", "peo-lex", "search"])
def test_cli_order(capsys, construct):
    code, out = run(capsys, "order", "--graph", emit_graph6(gr.complement(corpus.path_graph(4))),
                    "--power", "2", "--construct", construct, "--verify")
    data = json.loads(out.out)
    assert code == 0 and data.get("verified", True)


def test_cli_check_and_survey(capsys, tmp_path):
    code, out = run(capsys, "check", "--conjecture", "C", "--k", "2", "--n", "4")
    assert code == 0 and json.loads(out.out)["summary"]["refutations"] == 0
    src = tmp_path / "in.g6"
    src.write_text("\n".join(all_graph6(4)) + "\n")
    dst = tmp_path / "out.json"
    code, _ = run(capsys, "--jobs", "2", "survey", "--input", str(src), "--out", str(dst), "--k", "1", "2")
    assert code == 0 and json.loads(dst.read_text())["schema"] == "1"


def test_cli_input_errors(capsys):
    code, out = run(capsys, "symbolic", "--graph", "C~~", "--k", "2")
    assert code == ex.EXIT_INPUT and "byte offset" in out.err


def test_cli_selfcheck(capsys):
    code, out = run(capsys, "--seed", "7", "selfcheck", "--trials", "15")
    assert code == 0 and json.loads(out.out)["failures"] == []
