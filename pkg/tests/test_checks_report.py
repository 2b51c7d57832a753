"""Check battery semantics, fault injection, and report serialization."""

from fractions import Fraction

import pytest

from graphcurvature.checks import (
    ALL_CHECKS,
    checks_passed,
    gather_facts,
    run_checks,
)
from graphcurvature.corpus import CorpusItem, build_item
from graphcurvature.families import complete_graph
from graphcurvature.graphs import GraphError
from graphcurvature.report import (
    CurvatureReport,
    format_fraction,
    from_csv,
    from_json,
    parse_fraction,
    to_csv,
    to_json,
    to_table,
)

CHECK_NAMES = [
    "cd-class",
    "ollivier-class",
    "cd-vs-ollivier",
    "linkage-positive-cd",
    "bipartite-transport",
    "transport-upper-bound",
    "test-vector-certificates",
    "witness-bounds",
    "duality",
    "quantization",
    "diameter-bounds",
]


def by_name(results):
    return {r.name: r for r in results}


class TestCheckBattery:
    def test_all_checks_named_and_ordered(self):
        facts = gather_facts(build_item("hypercube:3"))
        results = run_checks(facts)
        assert [r.name for r in results] == CHECK_NAMES
        assert len(ALL_CHECKS) == len(CHECK_NAMES)

    def test_hypercube_applicability(self):
        facts = gather_facts(build_item("hypercube:3"))
        res = by_name(run_checks(facts))
        assert checks_passed(res.values())
        for name in ("cd-class", "ollivier-class", "cd-vs-ollivier",
                     "linkage-positive-cd", "bipartite-transport",
                     "transport-upper-bound", "witness-bounds", "duality",
                     "quantization", "diameter-bounds"):
            assert res[name].applicable, name
        # no flat or negative class vertices exist here
        assert not res["test-vector-certificates"].applicable

    def test_biclique_graph_classification_sits_out(self):
        # 2x3 bicliques: the class machinery must step aside while the
        # linkage and decomposition statements still apply and pass
        facts = gather_facts(build_item("complete-bipartite:4"))
        res = by_name(run_checks(facts))
        assert checks_passed(res.values())
        assert not res["cd-class"].applicable
        assert not res["ollivier-class"].applicable
        assert not res["cd-vs-ollivier"].applicable
        assert res["linkage-positive-cd"].applicable
        assert res["bipartite-transport"].applicable
        assert res["linkage-positive-cd"].passed
        assert res["bipartite-transport"].passed

    def test_triangle_graph_sidelines_triangle_free_checks(self):
        g = complete_graph(4)
        item = CorpusItem("complete:4", g, (0,), ((0, 1),))
        facts = gather_facts(item)
        res = by_name(run_checks(facts))
        assert checks_passed(res.values())
        for name in ("linkage-positive-cd", "bipartite-transport",
                     "transport-upper-bound", "cd-class"):
            assert not res[name].applicable, name
        assert res["duality"].applicable
        assert res["quantization"].applicable

    def test_flat_and_negative_vertices_get_vectors(self):
        for spec in ("cycle:6", "tree:3:4"):
            facts = gather_facts(build_item(spec))
            res = by_name(run_checks(facts))
            assert res["test-vector-certificates"].applicable, spec
            assert res["test-vector-certificates"].passed, spec

    def test_diameter_check_vacuous_without_positive_curvature(self):
        facts = gather_facts(build_item("petersen"))
        res = by_name(run_checks(facts))
        assert not res["diameter-bounds"].applicable
        assert "vacuous" in res["diameter-bounds"].details[0]

    def test_diameter_check_active_on_positive_graphs(self):
        facts = gather_facts(build_item("hypercube:4"))
        res = by_name(run_checks(facts))
        assert res["diameter-bounds"].applicable
        assert res["diameter-bounds"].passed


class TestFaultInjection:
    def test_kappa_fault_caught(self):
        facts = gather_facts(build_item("hypercube:3"), inject_fault="kappa")
        res = by_name(run_checks(facts))
        failing = {n for n, r in res.items() if not r.passed}
        assert failing == {"ollivier-class", "bipartite-transport",
                          "transport-upper-bound", "quantization"}

    def test_rho_fault_caught(self):
        facts = gather_facts(build_item("hypercube:3"), inject_fault="rho")
        res = by_name(run_checks(facts))
        failing = {n for n, r in res.items() if not r.passed}
        assert failing == {"cd-class", "linkage-positive-cd"}

    def test_unknown_fault_rejected(self):
        with pytest.raises(GraphError, match="unknown fault"):
            gather_facts(build_item("hypercube:2"), inject_fault="typo")


class TestFractions:
    def test_format_and_parse(self):
        assert format_fraction(Fraction(1, 4)) == "1/4"
        assert format_fraction(Fraction(-3, 7)) == "-3/7"
        assert format_fraction(Fraction(2)) == "2"
        assert parse_fraction("1/4") == Fraction(1, 4)
        assert parse_fraction("-2") == Fraction(-2)
        with pytest.raises(GraphError):
            parse_fraction("one half")


def build_report(*specs, tolerance=1e-9, inject=None):
    rep = CurvatureReport(tolerance=tolerance)
    for spec in specs:
        facts = gather_facts(build_item(spec), tolerance, inject_fault=inject)
        rep.add_facts(facts, run_checks(facts, tolerance))
    return rep


class TestReportSerialization:
    def test_json_round_trip(self):
        rep = build_report("cycle:5", "star:3")
        back = from_json(to_json(rep))
        assert [r.kappa for r in back.edges] == [r.kappa for r in rep.edges]
        assert [r.structure_class for r in back.vertices] == \
               [r.structure_class for r in rep.vertices]
        assert [(r.name, r.applicable, r.passed) for r in back.checks] == \
               [(r.name, r.applicable, r.passed) for r in rep.checks]
        for a, b in zip(back.vertices, rep.vertices):
            if b.rho is None:
                assert a.rho is None
            else:
                assert a.rho == pytest.approx(b.rho, abs=1e-12)
        # a second serialization of the parsed report is byte-identical
        assert to_json(back) == to_json(rep)

    def test_csv_round_trip(self):
        rep = build_report("cycle:5", "tree:3:4")
        back = from_csv(to_csv(rep))
        assert [r.kappa for r in back.edges] == [r.kappa for r in rep.edges]
        assert [(r.graph, r.vertex, r.safe) for r in back.vertices] == \
               [(r.graph, r.vertex, r.safe) for r in rep.vertices]
        assert to_csv(back) == to_csv(rep)

    def test_csv_rejects_foreign_header(self):
        with pytest.raises(GraphError, match="header"):
            from_csv("a,b,c\n1,2,3\n")

    def test_table_markers(self):
        good = to_table(build_report("hypercube:2"))
        assert "[ok  ]" in good
        assert "[FAIL]" not in good
        bad = to_table(build_report("hypercube:3", inject="kappa"))
        assert "[FAIL]" in bad

    def test_exact_fractions_survive(self):
        rep = build_report("transpositions:4")
        back = from_json(to_json(rep))
        kappas = {r.kappa for r in back.edges}
        assert kappas == {Fraction(1, 6)}

    def test_determinism_across_runs(self):
        a = build_report("petersen", "cycle:5")
        b = build_report("petersen", "cycle:5")
        assert to_json(a) == to_json(b)
        assert to_csv(a) == to_csv(b)
        assert to_table(a) == to_table(b)

    def test_all_passed_flag(self):
        assert build_report("hypercube:2").all_passed()
        assert not build_report("hypercube:3", inject="rho").all_passed()
