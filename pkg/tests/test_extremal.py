import math

import pytest

from oracles import subset_count
from rmatch.asymptotics import upper_bound
from rmatch.counting import brute_force_count, count_r_matchings
from rmatch.extremal import (NotApplicable, PROBE_RADII, SearchReport, merge_reports,
                             minimal_branching_subtree, pendant_paths, probe_problem_4_4,
                             search_extremal, spider_counts, spider_growth_estimate,
                             spider_vs_path, transform_leaf_reduction)
from rmatch.paths import path_count
from rmatch.trees import (EnumerationLimitError, build_tree, canonical_code, count_free_trees,
                          diameter, enumerate_trees, format_code, path, spider, star)


def code(t):
    return format_code(canonical_code(t))


def test_search_r2_n4_ties_path_and_claw():
    rep = search_extremal(2, 4)
    assert rep.max_count == 4
    assert rep.argmax_codes == sorted([code(path(4)), code(star(4))])
    assert rep.path_is_max


def test_search_r2_n7_unique_path():
    rep = search_extremal(2, 7)
    assert rep.max_count == 13 and rep.argmax_codes == [code(path(7))]
    assert rep.trees_examined == 11 and rep.min_count == 7


def test_search_r3_n5_all_equal():
    rep = search_extremal(3, 5)
    assert rep.max_count == rep.min_count == 5
    assert len(rep.argmax_codes) == len(rep.argmin_codes) == 3


@pytest.mark.parametrize("n", range(1, 12))
def test_search_report_invariants(n):
    for r in (1, 2, 4):
        rep = search_extremal(r, n, keep_counts=True)
        assert rep.trees_examined == count_free_trees(n) == len(rep.counts)
        assert rep.min_count >= n
        assert rep.path_count == path_count(r, n) <= rep.max_count
        assert rep.argmax_codes and rep.argmin_codes
        assert max(rep.counts.values()) == rep.max_count
        assert sorted(k for k, v in rep.counts.items() if v == rep.max_count) == rep.argmax_codes


def test_search_parallel_matches_serial():
    serial = search_extremal(3, 11, keep_counts=True)
    par = search_extremal(3, 11, threads=3, keep_counts=True)
    assert par.as_dict(True) == serial.as_dict(True)


def test_merge_reports_associative_and_commutative():
    from rmatch.extremal import _scan
    parts = [_scan(10, 2, (i, 4), 18, False) for i in range(4)]
    a, b, c, d = parts
    left = merge_reports(merge_reports(merge_reports(a, b), c), d)
    right = merge_reports(a, merge_reports(b, merge_reports(c, d)))
    swapped = merge_reports(merge_reports(d, c), merge_reports(b, a))
    whole = search_extremal(2, 10)
    for m in (left, right, swapped):
        assert m.as_dict() == whole.as_dict()


def test_merge_reports_rejects_mismatch():
    with pytest.raises(ValueError):
        merge_reports(search_extremal(2, 4), search_extremal(2, 5))


def test_search_errors():
    with pytest.raises(EnumerationLimitError):
        search_extremal(2, 19)
    with pytest.raises(EnumerationLimitError):
        search_extremal(2, 10, limit=8)
    with pytest.raises(ValueError):
        search_extremal(0, 5)
    with pytest.raises(ValueError):
        search_extremal(2, 0)


def test_search_counts_within_upper_bound():
    for r in (2, 5, 8):
        for n in range(1, 11):
            rep = search_extremal(r, n)
            assert rep.max_count <= math.nextafter(upper_bound(r, n), math.inf)


def test_probe_examples():
    reports = probe_problem_4_4(3, 8)
    assert [rep.n for rep in reports] == list(range(1, 9))
    assert reports[4].path_is_max and reports[4].max_count == 5
    r9 = probe_problem_4_4(9, 10)[-1]
    assert r9.path_is_max and r9.max_count == r9.min_count == 10
    assert r9.trees_examined == 106


@pytest.mark.parametrize("r", [1, 2, 6, 8])
def test_probe_rejects_radius(r):
    assert r not in PROBE_RADII
    with pytest.raises(ValueError):
        probe_problem_4_4(r, 5)


def test_probe_rejects_limit():
    with pytest.raises(EnumerationLimitError):
        probe_problem_4_4(3, 19)


def test_spider_counts_match_full_dp():
    for r in (1, 2, 3, 6):
        for a in (1, 2, 4):
            got = spider_counts(r, a, 6)
            assert got == [count_r_matchings(spider(a, b), r) for b in range(1, 7)]


def test_spider_counts_small_brute_force():
    assert spider_counts(2, 3, 3) == [brute_force_count(spider(3, b), 2) for b in (1, 2, 3)]
    assert spider_counts(2, 3, 3) == [4, 13, 39]


def test_spider_vs_path_examples():
    assert spider_vs_path(2, 3, 200) is None
    assert spider_vs_path(1, 1, 10) is None
    assert [count_r_matchings(star(b + 1), 1) for b in range(1, 11)] == list(range(2, 12))
    witness = spider_vs_path(6, 6, 300)
    assert witness == 3
    assert count_r_matchings(spider(6, 3), 6) == 106 > path_count(6, 19) == 105
    t = spider(6, 3)
    assert subset_count(t.n, t.edges, 6) == 106


def test_spider_vs_path_rejects_bad_input():
    with pytest.raises(ValueError):
        spider_vs_path(2, 0, 5)


def test_spider_growth_estimates():
    assert spider_growth_estimate(2, 3, 2) == pytest.approx(13 ** (1 / 6))
    assert round(spider_growth_estimate(2, 3, 2), 4) == 1.5334
    assert spider_growth_estimate(2, 3, 3) == pytest.approx(39 ** (1 / 9))
    # 39^(1/9) = 1.50239..., not 1.5027
    assert round(spider_growth_estimate(2, 3, 3), 4) == 1.5024
    gaps = [spider_growth_estimate(2, 3, b) - 3 ** (1 / 3) for b in (2, 3, 10, 400)]
    assert gaps[0] > gaps[1] > gaps[2] >= 0 and gaps[3] < 1e-12


def test_transform_spider_211():
    t = build_tree(5, [(0, 1), (1, 2), (0, 3), (0, 4)])
    out = transform_leaf_reduction(t, 2)
    assert out
    assert out.output_code == code(path(5))
    assert (out.input_count, out.output_count) == (5, 6)
    assert out.strict
    assert out.as_dict()["applicable"] is True


def test_transform_not_applicable_cases():
    res = transform_leaf_reduction(path(6), 2)
    assert isinstance(res, NotApplicable) and not res
    assert "path" in res.reason
    res = transform_leaf_reduction(spider(3, 3), 2)
    assert not res and ">= r+1" in res.reason
    assert res.as_dict() == {"applicable": False, "reason": res.reason}
    with pytest.raises(ValueError):
        transform_leaf_reduction(star(4), 0)


def test_transform_case_two():
    # legs of length 2 and 2 at r=2: p1 <= r but p1 + p2 = 4 > r + 1
    res = transform_leaf_reduction(spider(2, 3), 2)
    assert not res and "exceeds r+1" in res.reason


def test_minimal_branching_subtree():
    assert minimal_branching_subtree(path(5)) == set()
    assert minimal_branching_subtree(spider(2, 3)) == {0}
    # two claws joined by a path 0-1-2
    t = build_tree(7, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)])
    assert minimal_branching_subtree(t) == {0, 1, 2}
    assert pendant_paths(t, 0, {0, 1, 2}) == [[3], [4]]
    assert pendant_paths(spider(3, 2), 0, {0}) == [[1, 2, 3], [4, 5, 6]]


def test_transform_invariant_exhaustive():
    applicable = strict = 0
    for n in range(4, 11):
        for t in enumerate_trees(n):
            for r in range(1, 6):
                out = transform_leaf_reduction(t, r)
                if not out:
                    continue
                applicable += 1
                assert out.output_count >= out.input_count
                assert out.output_count == count_r_matchings(out.tree, r)
                assert len(out.tree.leaves()) == len(t.leaves()) - 1
                if out.strict:
                    strict += 1
                    assert out.output_count > out.input_count
    assert applicable > 0 and strict > 0


def test_argmin_is_shallow_trees():
    for n in range(1, 10):
        trees = list(enumerate_trees(n))
        for r in (1, 3):
            rep = search_extremal(r, n)
            assert rep.min_count == n
            assert rep.argmin_codes == sorted(code(t) for t in trees if diameter(t) <= r + 1)


def test_report_as_dict_roundtrip():
    rep = search_extremal(2, 6, keep_counts=True)
    d = rep.as_dict(with_counts=True)
    assert SearchReport(**{k: v for k, v in d.items() if k != "counts"}).as_dict() == rep.as_dict()
    assert list(d["counts"]) == sorted(d["counts"])
