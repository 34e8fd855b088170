import json

import pytest

import cprel.lawcheck as lc
from cprel.graphcat import Graph, graph_compose, graph_join
from cprel.relcore import standard_set
from cprel.report import LawReport, merge_reports


def lossy_compose(g2, g1):
    """Composition that forgets every non-loop edge."""
    g = graph_compose(g2, g1)
    return Graph(g.dom, g.cod, g.vertices)


def test_registry_has_the_core_laws():
    for name in ("associativity", "interchange", "snake-left", "snake-right",
                 "compose-join-left", "tensor-join-right", "roundtrip-CG", "purity"):
        assert name in lc.LAWS


def test_category_laws_pass_small():
    report = lc.check_category_laws(1)
    assert report.passed and not report.sampled
    assert report.instances_checked > 0


def test_broken_composition_is_caught_and_replayable(monkeypatch):
    monkeypatch.setattr(lc, "graph_compose", lossy_compose)
    report = lc.check_law("left-identity", lc.homs(lc.objects(2)))
    assert not report.passed
    cx = report.counterexample
    assert cx["law"] == "left-identity"
    assert json.loads(json.dumps(cx)) == cx
    assert lc.replay(cx) is False
    monkeypatch.undo()
    assert lc.replay(cx) is True


def test_counterexample_is_a_smallest_shape(monkeypatch):
    monkeypatch.setattr(lc, "graph_compose", lossy_compose)
    report = lc.check_law("left-identity", lc.homs(lc.objects(2)))
    (arg,) = report.counterexample["args"]
    assert len(arg["graph"]["vertices"]) == 2 and arg["graph"]["edges"] == [[0, 1]]


def test_sampling_is_seeded():
    shapes = lc.homs(lc.objects(2))
    a = lc.check_law("dagger-involution", shapes, seed=3, samples=50, limit=10)
    b = lc.check_law("dagger-involution", shapes, seed=3, samples=50, limit=10)
    assert a == b
    assert a.sampled and a.seed == 3
    assert "sampled seed=3" in a.line()


def test_exhaustive_run_has_no_seed():
    report = lc.check_law("dagger-involution", lc.homs(lc.objects(1)))
    assert not report.sampled and report.seed is None
    assert report.line() == f"PASS dagger-involution ({report.instances_checked} instances)"


def test_report_invariants():
    with pytest.raises(ValueError):
        LawReport("x", 1, True, counterexample={"law": "x", "args": []})
    with pytest.raises(ValueError):
        LawReport("x", 1, False)


def test_merge_is_order_independent():
    ok = LawReport("a", 3, True)
    bad1 = LawReport("b", 2, False, counterexample={"law": "b", "args": [1]})
    bad2 = LawReport("c", 5, False, counterexample={"law": "c", "args": []})
    forward = merge_reports("m", [ok, bad1, bad2])
    backward = merge_reports("m", [bad2, bad1, ok])
    assert forward == backward
    assert forward.instances_checked == 10 and not forward.passed
    assert merge_reports("m", [ok]).passed


def test_failing_report_lines_include_parts():
    bad = LawReport("b", 2, False, counterexample={"law": "b", "args": []})
    merged = merge_reports("m", [LawReport("a", 1, True), bad])
    assert merged.lines() == ["FAIL m (3 instances)", "  PASS a (1 instances)", "  FAIL b (2 instances)"]


def test_table_and_direct_associativity_agree():
    # The numpy tables and the plain predicate must reach the same verdict.
    objs = lc.objects(1)
    tables = lc._table_law("associativity", objs, 4, lc._associativity_tables)
    direct = lc.check_law("associativity", lc.chains(objs, 3))
    assert tables.passed and direct.passed
    assert tables.instances_checked == direct.instances_checked


def test_enriched_compact_small():
    report = lc.check_enriched_compact(1, snake_bound=2)
    assert report.passed
    assert [p.law_name for p in report.parts] == ["dagger", "monoidal", "compact", "enrichment"]


def test_iso_and_closure_small():
    assert lc.check_iso(1).passed
    assert lc.check_cp_axioms_closure(1).passed


def test_purity_stats():
    report = lc.check_purity_equivalence(3)
    assert report.passed
    assert report.stats["pure@2"] == "4/5"
    assert report.stats["pure@3"] == "8/18"


def test_pure_by_subsets_matches_completeness():
    from cprel.census import enumerate_state_graphs
    from cprel.graphcat import State, is_pure

    for g in enumerate_state_graphs(standard_set(3)):
        assert lc.pure_by_subsets(g) == is_pure(State.of(g))


def test_mixing_instance():
    from cprel.graphcat import State, is_pure

    g1, g2 = lc.mixing_instance()
    assert not is_pure(State.of(g1)) and not is_pure(State.of(g2))
    assert is_pure(State.of(graph_join([g1, g2])))
    report = lc.demo_mixing()
    assert report.passed and report.stats["anomalous-pairs@3"] == 12


def test_census_law():
    assert lc.check_census(5).passed


def test_run_all_is_deterministic():
    kw = dict(size_bound=1, snake_bound=2, census_max=3, purity_bound=2, samples=20)
    first = [r.lines() for r in lc.run_all(**kw)]
    assert first == [r.lines() for r in lc.run_all(**kw)]
    assert all(line.lstrip().startswith("PASS") for lines in first for line in lines)
