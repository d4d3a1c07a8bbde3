"""Acceptance criteria 1-11, each at its stated scale and tolerance.

Every test prints one ``PASS``/``FAIL`` line (visible under ``pytest -v`` or
``-s``) and then asserts the same condition.
"""

import math
import time

import pytest

from oracles import matching_spectrum, subset_count
from rmatch.asymptotics import (alpha, beta, best_leg_length, construction_leg_length,
                                growth_constant, leg_growth, log_lower_bound, solve_s,
                                truncate4, upper_bound)
from rmatch.counting import count_r_matchings
from rmatch.extremal import probe_problem_4_4, search_extremal, spider_counts, spider_vs_path
from rmatch.paths import path_count, verify_doubling
from rmatch.trees import (canonical_code, diameter, enumerate_trees, format_code, path,
                          spider, star)

# unlabelled trees on n vertices, n = 1..16
FREE_TREES = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]

# s, alpha, beta, a, (a - ceil(r/2) + 1)^(1/a), all truncated to 4 decimals
TABLE = {
    2: ("1.7182", "1.4446", "1.4655", 3, "1.4422"),
    3: ("2.1809", "1.3693", "1.3802", 5, "1.3195"),
    4: ("2.5911", "1.3210", "1.3247", 5, "1.3195"),
    5: ("2.9673", "1.2866", "1.2851", 6, "1.2599"),
    6: ("3.3191", "1.2605", "1.2554", 6, "1.2599"),
    7: ("3.6523", "1.2397", "1.2320", 8, "1.2228"),
    8: ("3.9706", "1.2228", "1.2131", 8, "1.2228"),
    9: ("4.2766", "1.2086", "1.1974", 10, "1.1962"),
    10: ("4.5723", "1.1965", "1.1842", 10, "1.1962"),
    11: ("4.8592", "1.1861", "1.1729", 11, "1.1769"),
}


@pytest.fixture
def report(capsys):
    def emit(k, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {k}: {detail}")
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def searches():
    """search_extremal for r = 1..8 and n = 1..14, shared by criteria 2, 3 and 7."""
    return {(r, n): search_extremal(r, n) for r in range(1, 9) for n in range(1, 15)}


def code(t):
    return format_code(canonical_code(t))


def test_criterion_01_oracle(report):
    pairs = bad = 0
    for n in range(1, 11):
        for t in enumerate_trees(n):
            for r in range(1, 9):
                pairs += 1
                bad += count_r_matchings(t, r) != subset_count(t.n, t.edges, r)
    report(1, bad == 0, f"DP equals subset count on {pairs - bad}/{pairs} (tree, r) pairs, n<=10, r<=8")


def test_criterion_02_minimum(report, searches):
    bad = []
    for n in range(1, 13):
        trees = list(enumerate_trees(n))
        for r in range(1, 7):
            rep = searches[(r, n)]
            shallow = sorted(code(t) for t in trees if diameter(t) <= r + 1)
            if rep.min_count != n or rep.argmin_codes != shallow:
                bad.append((n, r))
    report(2, not bad, f"min = n with argmin = diameter<=r+1 for all n<=12, r<=6; failures {bad}")


def test_criterion_03_r2_maximum(report, searches):
    start = time.perf_counter()
    bad = []
    for n in range(2, 17):
        rep = searches[(2, n)] if n <= 14 else search_extremal(2, n)
        want = {code(path(n))} | ({code(star(4))} if n == 4 else set())
        if not (rep.max_count == path_count(2, n) and set(rep.argmax_codes) == want
                and rep.trees_examined == FREE_TREES[n - 1]):
            bad.append(n)
    elapsed = time.perf_counter() - start
    report(3, not bad and elapsed < 600,
           f"max s_2 = s_2(P_n), argmax {{P_n}} ({{P_4, K_1,3}} at n=4) for 2<=n<=16 "
           f"in {elapsed:.1f}s; failures {bad}")


def test_criterion_04_table(report):
    bad = {}
    for r, want in TABLE.items():
        s = solve_s(r)
        a = best_leg_length(r)
        got = (truncate4(s), truncate4(alpha(r)), truncate4(beta(r)), a,
               truncate4(leg_growth(r, a)))
        if got != want:
            bad[r] = got
    report(4, not bad, f"10 rows r=2..11 match to 4 decimals; mismatches {bad}")


def test_criterion_05_doubling(report):
    bad = [(r, n) for r in range(1, 11) for n in range(2 * r, 101) if not verify_doubling(r, n)]
    report(5, not bad, f"doubling identity exact for r<=10, 2r<=n<=100; failures {bad[:5]}")


def test_criterion_06_growth_constant(report):
    gc = growth_constant(2, 300)
    b = beta(2)
    ratios = [path_count(2, n) / b ** (n - 1) for n in (298, 299, 300)]
    deltas = [abs(y - x) for x, y in zip(ratios, ratios[1:])]
    ok = (max(deltas) < 1e-8 and gc.last_step < 1e-8
          and truncate4(gc.empirical) == "1.3134"
          and abs(gc.closed_alt - gc.empirical) < 1e-6
          and abs(gc.closed_paper - gc.empirical) > 1e-6
          and abs(gc.closed_paper - 0.8962) < 5e-5
          and gc.matches == "closed_alt")
    report(6, ok, gc.report())


def test_criterion_07_upper_bound(report, searches):
    worst = math.inf
    bad = []
    for r in range(2, 9):
        for n in range(1, 15):
            cap = math.nextafter(upper_bound(r, n), math.inf)
            mx = searches[(r, n)].max_count
            worst = min(worst, cap / mx)
            if not mx <= cap:
                bad.append((r, n))
    report(7, not bad, f"every count <= (s+1)(e^(1/r) alpha)^(n-1) (+1 ulp) for r=2..8, n<=14; "
                       f"tightest bound/max ratio {worst:.4f}; failures {bad}")


def test_criterion_08_spider_lower_bound(report):
    lines = []
    ok = True
    for r in (20, 40, 60):
        a = construction_leg_length(r)
        counts = spider_counts(r, a, 10)
        for b in (2, 5, 10):
            lhs = math.log(counts[b - 1])
            rhs = log_lower_bound(r, a * b + 1)
            ok &= lhs >= rhs
            if b == 2:
                ok &= counts[1] == count_r_matchings(spider(a, 2), r)
            lines.append(f"r={r},a={a},b={b}:{lhs - rhs:.2f}")
    report(8, ok, "log s_r(T_a,b) - log bound >= 0: " + " ".join(lines))


def test_criterion_09_spider_witness(report):
    start = time.perf_counter()
    b = spider_vs_path(6, 6, 300)
    elapsed = time.perf_counter() - start
    ok = b is not None and elapsed < 60
    if ok:
        spider_c = count_r_matchings(spider(6, b), 6)
        ok = spider_c > path_count(6, 6 * b + 1)
        detail = (f"b={b}: s_6(T_6,{b}) = {spider_c} > s_6(P_{6 * b + 1}) = "
                  f"{path_count(6, 6 * b + 1)} ({elapsed:.2f}s)")
    else:
        detail = f"no witness up to b=300 ({elapsed:.2f}s)"
    report(9, ok, detail)


def test_criterion_10_beta_window(report):
    parts = []
    ok = True
    for r in (100, 1000):
        lr = math.log(r)
        low = math.log(r / lr)
        high = math.log((1 + 1 / math.sqrt(lr)) * r / lr)
        mid = r * math.log(beta(r))
        ok &= low < mid < high
        parts.append(f"r={r}: {low:.6f} < {mid:.6f} < {high:.6f}")
    report(10, ok, "; ".join(parts))


def test_criterion_11_probe(report):
    radii = (3, 4, 5, 7, 9)
    spectra = {}
    for n in range(1, 15):
        for t in enumerate_trees(n):
            spectra[code(t)] = matching_spectrum(t.n, t.edges, min(radii), max(radii))
    summary = []
    ok = True
    for r in radii:
        reports = probe_problem_4_4(r, 14)
        ok &= [rep.n for rep in reports] == list(range(1, 15))
        for rep in reports:
            ok &= rep.trees_examined == FREE_TREES[rep.n - 1]
            ok &= bool(rep.argmax_codes) and bool(rep.argmin_codes)
            scan = search_extremal(r, rep.n, keep_counts=True).counts
            ok &= len(scan) == rep.trees_examined
            ok &= all(spectra[c][r] == v for c, v in scan.items())
            ok &= rep.max_count == max(scan.values()) and rep.min_count == min(scan.values())
            ok &= rep.path_count == spectra[code(path(rep.n))][r]
        beaten = [rep.n for rep in reports if not rep.path_is_max]
        summary.append(f"r={r} path not maximal at n={beaten or 'none'}")
    report(11, ok, "14 complete reports per r, all counts match an independent oracle; "
                   + ", ".join(summary))
