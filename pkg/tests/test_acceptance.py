"""Acceptance criteria, one test each.

Every test prints a ``PASS``/``FAIL`` line (visible with ``-s``); the same
lines are repeated in the terminal summary.
"""
import time
from itertools import combinations

from cprel import lawcheck
from cprel.census import census, count_states, enumerate_positive_relations, enumerate_relations, enumerate_state_graphs
from cprel.graphcat import Graph, State, graph_compose, graph_join, graph_tensor, is_pure
from cprel.relcore import FiniteSet, bar, is_cp, is_positive, positive_witness, product_set, standard_set

from conftest import ACCEPTANCE_LINES


def record(number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} [{number}] {title}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def test_1_census_reproduction():
    rows, secs = timed(lambda: census(5))
    counts = [r.cp_rel_states for r in rows]
    ok = counts == [1, 2, 5, 18, 113, 1450] and secs < 1.0
    record(1, "census", ok, f"counts={counts} in {secs:.3f}s (limit 1s)")


def test_2_brute_force_agreement():
    def run():
        return [sum(1 for _ in enumerate_positive_relations(standard_set(n))) for n in range(5)]

    counts, secs = timed(run)
    expected = [count_states(n) for n in range(5)]
    ok = counts == expected and secs < 5.0
    record(2, "brute force", ok, f"positive relations {counts} vs formula {expected} in {secs:.2f}s (limit 5s)")


def test_3_isomorphism():
    report, secs = timed(lambda: lawcheck.check_iso(2))
    roundtrip, functoriality = report.parts
    exhaustive = not report.sampled
    ok = report.passed and exhaustive and secs < 60.0
    record(3, "isomorphism", ok,
           f"roundtrip {roundtrip.instances_checked} and functoriality {functoriality.instances_checked} "
           f"instances, exhaustive={exhaustive}, {secs:.1f}s (limit 60s)")


def test_4_cp_characterization():
    a = standard_set(2)
    aa = product_set(a, a)

    def run():
        total = disagreements = cps = 0
        for m in enumerate_relations(aa, aa):
            cp = is_cp(m)
            total += 1
            cps += cp
            disagreements += cp != is_positive(bar(m))
        return total, disagreements, cps

    (total, disagreements, cps), secs = timed(run)
    ok = total == 2 ** 16 and disagreements == 0 and secs < 10.0
    record(4, "CP characterization", ok,
           f"{total} relations, {cps} CP, {disagreements} disagreements, {secs:.2f}s (limit 10s)")


def test_5_positivity_witness():
    checked = failures = 0
    for n in range(5):
        for r in enumerate_positive_relations(standard_set(n)):
            checked += 1
            failures += positive_witness(r).recompose() != r
    ok = failures == 0 and checked == sum(count_states(n) for n in range(5))
    record(5, "positivity witness", ok, f"{checked} positive relations, {failures} failed to recompose")


def test_6_enriched_dagger_compact_laws():
    report = lawcheck.check_enriched_compact(2, snake_bound=3)
    sampled = sorted(p.law_name for part in report.parts for p in part.parts if p.sampled)
    ok = report.passed
    record(6, "enriched dagger-compact laws", ok,
           f"{report.instances_checked} instances across {sum(len(p.parts) for p in report.parts)} laws"
           + (f", sampled beyond the exhaustive budget: {', '.join(sampled)}" if sampled else ""))


def test_7_purity():
    two = [is_pure(State.of(g)) for g in enumerate_state_graphs(standard_set(2))]
    report = lawcheck.check_purity_equivalence(3)
    ok = len(two) == 5 and sum(two) == 4 and report.passed
    record(7, "purity", ok, f"{sum(two)}/{len(two)} pure at n=2; subset-image agreement for n<=3: {report.passed}")


def test_8_mixing_anomaly():
    g1, g2 = lawcheck.mixing_instance()
    both_mixed = not is_pure(State.of(g1)) and not is_pure(State.of(g2))
    join_pure = is_pure(State.of(graph_join([g1, g2])))
    found = lawcheck.find_mixing_triples(standard_set(3))
    ok = both_mixed and join_pure and len(found) >= 1
    record(8, "mixing anomaly", ok,
           f"components mixed={both_mixed}, join pure={join_pure}, {len(found)} anomalous pairs at n=3")


def _edges(g):
    return {frozenset(e) for e in g.non_loop_edges()}


def test_9_worked_examples():
    a = FiniteSet("A", ("a", "a'"))
    b = FiniteSet("B", ("b", "b'", "b''"))
    c = FiniteSet("C", ("c", "c'", "c''"))
    g1 = Graph(a, b, [("a", "b"), ("a'", "b'")], [(("a", "b"), ("a'", "b'"))])
    g2 = Graph(b, c, [("b", "c"), ("b''", "c"), ("b", "c'"), ("b'", "c''")],
               [(("b", "c"), ("b", "c'")), (("b", "c"), ("b'", "c''"))])
    composite = graph_compose(g2, g1)
    compose_ok = composite.vertices == {("a", "c"), ("a", "c'"), ("a'", "c''")} and _edges(composite) == {
        frozenset({("a", "c"), ("a", "c'")}), frozenset({("a", "c"), ("a'", "c''")})}

    ac, bd = FiniteSet("C", ("c", "c'")), FiniteSet("D", ("d", "d'", "d''"))
    h1 = Graph(a, ac, [("a", "c"), ("a'", "c'")], [(("a", "c"), ("a'", "c'"))])
    h2 = Graph(b, bd, [("b", "d"), ("b'", "d'"), ("b''", "d''")],
               [(("b", "d"), ("b'", "d'")), (("b", "d"), ("b''", "d''"))])
    tensor = graph_tensor(h1, h2)

    def n(x, y, z, w):
        return ((x, y), (z, w))

    tl, ml, bl = n("a", "b''", "c", "d''"), n("a", "b", "c", "d"), n("a", "b'", "c", "d'")
    tr, mr, br = n("a'", "b''", "c'", "d''"), n("a'", "b", "c'", "d"), n("a'", "b'", "c'", "d'")
    drawn = [(tl, tr), (ml, mr), (bl, br), (tl, mr), (ml, tr), (ml, br),
             (bl, mr), (tl, ml), (ml, bl), (tr, mr), (mr, br)]
    tensor_ok = tensor.vertices == {tl, ml, bl, tr, mr, br} and _edges(tensor) == {frozenset(e) for e in drawn}

    ok = compose_ok and tensor_ok
    record(9, "worked examples", ok,
           f"composition {len(composite.vertices)} vertices/{len(_edges(composite))} edges match={compose_ok}; "
           f"tensor {len(tensor.vertices)} vertices/{len(_edges(tensor))} edges match={tensor_ok}")


def test_triangle_completion_is_the_only_mixing_shape():
    # Every anomalous pair at n = 3 joins to the full triangle on all three points.
    triangle_edges = set(combinations(sorted(standard_set(3)), 2))
    for g, h in lawcheck.find_mixing_triples(standard_set(3)):
        j = graph_join([g, h])
        assert {(u[1], w[1]) for u, w in j.non_loop_edges()} == triangle_edges
