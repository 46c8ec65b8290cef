import json

import pytest

from status_lab.enumeration import canonical_code, canonical_graph_form, enumerate_connected_graphs, enumerate_trees
from status_lab.errors import InvalidParams
from status_lab.families import (
    bound_domination_upper_large,
    extremal_domination_large,
    extremal_domination_small,
    extremal_matching_upper,
    make_A,
    make_caterpillar,
    make_cycle,
    make_dumbbell,
    make_path,
)
from status_lab.graph import branch_profile, diameter, min_status, status_profile
from status_lab.verifier import (
    DOMINATION,
    MATCHING,
    TheoremId,
    VerifyConfig,
    census,
    format_reports,
    report_to_dict,
    run_verification,
    verify_domination_theorems,
    verify_matching_theorems,
    verify_order_bound,
    verify_structural_lemmas,
)


def record(n, kind, value):
    return next(r for r in census(n) if r.kind == kind and r.value == value)


def test_census_examples():
    r = record(6, MATCHING, 3)
    assert (r.min_s, r.max_s) == (7, 9)
    r = record(6, MATCHING, 1)
    assert r.population == 1 and r.min_s == r.max_s == 5
    r = record(9, DOMINATION, 4)
    assert r.max_s == bound_domination_upper_large(9, 4) == 18
    assert min_status(make_caterpillar(9, 2, 1)) == 18
    assert r.argmax_codes == [canonical_code(make_caterpillar(9, 2, 1))]


@pytest.mark.parametrize("n", range(2, 11))
def test_census_partitions_trees(n):
    records = census(n)
    total = sum(1 for _ in enumerate_trees(n))
    for kind in (MATCHING, DOMINATION):
        recs = [r for r in records if r.kind == kind]
        assert sum(r.population for r in recs) == total
        for r in recs:
            assert r.min_s <= r.max_s and r.argmin_codes and r.argmax_codes


@pytest.mark.parametrize("n", range(4, 11))
def test_extremal_constructors_live_in_their_classes(n):
    for m in range(1, n // 2 + 1):
        rec = record(n, MATCHING, m)
        assert canonical_code(make_A(n, m)) in rec.graphs
        assert canonical_code(extremal_matching_upper(n, m)) in rec.graphs
    ceil3 = -(-n // 3)
    for g in range(1, n // 2 + 1):
        rec = record(n, DOMINATION, g)
        assert canonical_code(make_A(n, g)) in rec.graphs
        if g < ceil3:
            assert canonical_code(extremal_domination_small(n, g)) in rec.graphs
        if g > ceil3:
            assert canonical_code(extremal_domination_large(n, g)) in rec.graphs


def test_matching_theorems_pass():
    low, up = verify_matching_theorems(4, 10)
    assert low.passed and up.passed
    assert low.theorem_id is TheoremId.MATCH_LOWER and up.theorem_id is TheoremId.MATCH_UPPER
    assert record(12, MATCHING, 3).min_s == 13 and record(12, MATCHING, 3).max_s == 27


def test_matching_upper_not_applicable_below_four():
    _, up = verify_matching_theorems(2, 4)
    assert up.passed
    assert any(s.startswith("n=3 m=1") for s in up.not_applicable)


def test_mutated_bound_is_detected():
    low, _ = verify_matching_theorems(4, 8, lower=lambda n, m: n + m - 1)
    assert not low.passed
    assert len(low.failures) == sum(n // 2 for n in range(4, 9))
    f = low.failures[0]
    assert (f.n, f.class_label, f.expected, f.observed) == (4, "m=1", 4, 3)
    for f in low.failures:
        m = int(f.class_label.split("=")[1])
        assert [canonical_code(w) for w in f.witnesses] == [canonical_code(make_A(f.n, m))]


def test_mutated_upper_bounds_are_detected():
    _, small, large = verify_domination_theorems(
        6, 9, upper_small=lambda n, g: 0, upper_large=lambda n, g: 10**6
    )
    assert not small.passed and not large.passed


def test_domination_theorems_pass():
    low, small, large = verify_domination_theorems(4, 10)
    assert low.passed and small.passed and large.passed
    # n=8, gamma=4 and n=10, gamma=3 extremal trees
    rec = record(8, DOMINATION, 4)
    assert rec.max_s == 12 and rec.argmax_codes == [canonical_code(make_caterpillar(8, 2, 2))]
    rec = record(10, DOMINATION, 3)
    assert rec.max_s == 24 == min_status(make_dumbbell(10, 2, 1))
    assert rec.argmax_codes == [canonical_code(make_dumbbell(10, 2, 1))]
    assert any("boundary band" in s for s in small.not_applicable)


def test_order_bound_examples():
    r = verify_order_bound(3, 6)
    assert r.passed and r.checked == 2 + 6 + 21 + 112
    for n, expected in [(3, 2), (5, 6)]:
        values = [status_profile(g).min_status for g in enumerate_connected_graphs(n)]
        assert max(values) == expected
        top = sorted(canonical_graph_form(g) for g in enumerate_connected_graphs(n) if status_profile(g).min_status == expected)
        assert top == sorted({canonical_graph_form(make_path(n)), canonical_graph_form(make_cycle(n))})
    with pytest.raises(InvalidParams):
        verify_order_bound(2, 5)


def test_structural_lemmas():
    diam, med = verify_structural_lemmas(10)
    assert diam.passed and med.passed
    assert branch_profile(make_path(6)).centroid == status_profile(make_path(6)).median == (2, 3)
    c = make_caterpillar(8, 2, 2)
    assert diameter(c) == 5 == 2 * 8 - 3 * 4 + 1


def test_reports_are_deterministic_and_serialisable():
    cfg = VerifyConfig(n_lo=4, n_hi=8)
    a = format_reports(run_verification(cfg), "json")
    b = format_reports(run_verification(cfg), "json")
    assert a == b
    data = json.loads(a)
    assert [d["theorem_id"] for d in data] == [t.value for t in TheoremId]
    for d in data:
        assert set(d) >= {"theorem_id", "n_range", "verdict", "failures"}
        assert d["verdict"] == "PASS"
    assert format_reports(run_verification(cfg), "csv").splitlines()[0].startswith("theorem_id,")


def test_failure_json_carries_edge_lists():
    low, _ = verify_matching_theorems(4, 4, lower=lambda n, m: 0)
    d = report_to_dict(low)
    assert d["verdict"] == "FAIL"
    f = d["failures"][0]
    assert f["expected"] == 0 and f["observed"] == 3
    assert f["witnesses"][0].startswith("4 3\n")


def test_parallel_census_matches_serial():
    serial = [(r.kind, r.value, r.population, r.min_s, r.max_s) for r in census(11, jobs=1)]
    par = [(r.kind, r.value, r.population, r.min_s, r.max_s) for r in census(11, jobs=2)]
    assert serial == par
