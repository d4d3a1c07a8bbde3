"""Named invariant suites, each run at a fixed desk scale.

Every suite returns a list of :class:`Check`; a suite passes when all of its
checks do. The CLI ``verify`` subcommand and the acceptance tests both use
these.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .asymptotics import (alpha, beta, best_leg_length, construction_leg_length,
                          growth_constant, leg_growth, log_lower_bound, solve_s,
                          truncate4, upper_bound)
from .counting import brute_force_count, count_r_matchings
from .extremal import search_extremal, spider_counts
from .paths import PathSeries, doubling_sides
from .trees import canonical_code, diameter, enumerate_trees, format_code, path, star

__all__ = ["Check", "SUITES", "REFERENCE_TABLE", "run_suite"]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (
            f": {self.detail}" if self.detail else "")


# published constants for r = 2..11: s, alpha_r, beta_r, best leg a, leg growth
REFERENCE_TABLE = {
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


def oracle(n_max: int = 10, r_max: int = 8) -> list[Check]:
    checks = []
    for n in range(1, n_max + 1):
        mismatches = 0
        total = 0
        for t in enumerate_trees(n):
            for r in range(1, r_max + 1):
                total += 1
                if count_r_matchings(t, r) != brute_force_count(t, r):
                    mismatches += 1
        checks.append(Check(f"oracle n={n}", mismatches == 0,
                            f"{total - mismatches}/{total} (tree, r) pairs agree"))
    return checks


def minimum_is_n(n_max: int = 12, r_max: int = 6) -> list[Check]:
    checks = []
    for n in range(1, n_max + 1):
        trees = list(enumerate_trees(n))
        for r in range(1, r_max + 1):
            rep = search_extremal(r, n)
            shallow = sorted(format_code(canonical_code(t)) for t in trees
                             if diameter(t) <= r + 1)
            ok = rep.min_count == n and rep.argmin_codes == shallow
            checks.append(Check(
                f"min n={n} r={r}", ok,
                f"min={rep.min_count}, argmin={len(rep.argmin_codes)}, "
                f"diameter<=r+1: {len(shallow)}"))
    return checks


def _expected_argmax_r2(n: int) -> list[str]:
    codes = {format_code(canonical_code(path(n)))}
    if n == 4:
        codes.add(format_code(canonical_code(star(4))))
    return sorted(codes)


def induced_path_maximum(n_max: int = 16) -> list[Check]:
    checks = []
    for n in range(2, n_max + 1):
        rep = search_extremal(2, n)
        ok = (rep.path_is_max and rep.max_count == rep.path_count
              and rep.argmax_codes == _expected_argmax_r2(n))
        checks.append(Check(f"induced n={n}", ok,
                            f"max={rep.max_count}, path={rep.path_count}, "
                            f"argmax={rep.argmax_codes}"))
    return checks


def doubling(r_max: int = 10, n_max: int = 100) -> list[Check]:
    checks = []
    for r in range(1, r_max + 1):
        series = PathSeries(r)
        bad = []
        for n in range(2 * r, n_max + 1):
            lhs, rhs = doubling_sides(r, n, series)
            if lhs != rhs:
                bad.append(n)
        checks.append(Check(f"doubling r={r}", not bad,
                            f"n in [{2 * r}, {n_max}]" + (f", fails at {bad[:5]}" if bad else "")))
    return checks


def table(r_min: int = 2, r_max: int = 11) -> list[Check]:
    checks = []
    for r in range(r_min, r_max + 1):
        s = solve_s(r)
        a = best_leg_length(r)
        got = (truncate4(s), truncate4(alpha(r, s)), truncate4(beta(r)), a,
               truncate4(leg_growth(r, a)))
        want = REFERENCE_TABLE[r]
        checks.append(Check(f"table r={r}", got == want, f"got {got}, want {want}"))
    return checks


def bounds(r_values=range(2, 9), n_max: int = 14,
           construction_r=(20, 40, 60), legs=(2, 5, 10)) -> list[Check]:
    checks = []
    for r in r_values:
        worst = None
        ok = True
        for n in range(1, n_max + 1):
            rep = search_extremal(r, n)
            cap = math.nextafter(upper_bound(r, n), math.inf)
            if not rep.max_count <= cap:
                ok = False
            slack = cap / rep.max_count
            worst = slack if worst is None else min(worst, slack)
        checks.append(Check(f"upper bound r={r}", ok, f"n<={n_max}, min bound/max ratio {worst:.3f}"))
    for r in construction_r:
        a = construction_leg_length(r)
        counts = spider_counts(r, a, max(legs))
        for b in legs:
            n = a * b + 1
            lhs = math.log(counts[b - 1])
            rhs = log_lower_bound(r, n)
            checks.append(Check(f"lower bound r={r} a={a} b={b}", lhs >= rhs,
                                f"log count {lhs:.4f} >= log bound {rhs:.4f}"))
    return checks


def growth(r_values=range(1, 7), n_probe: int = 300) -> list[Check]:
    checks = []
    for r in r_values:
        gc = growth_constant(r, n_probe)
        checks.append(Check(f"ratio converges r={r}", gc.last_step < 1e-8,
                            f"|ratio({n_probe}) - ratio({n_probe - 1})| = {gc.last_step:.2e}"))
    gc = growth_constant(2, n_probe)
    checks.append(Check("limit r=2 is 1.3134", truncate4(gc.empirical) == "1.3134",
                        f"{gc.empirical:.10f}"))
    checks.append(Check("closed form adjudication r=2", gc.matches is not None, gc.report()))
    return checks


SUITES: dict[str, Callable[[], list[Check]]] = {
    "oracle": oracle,
    "observation-1-1": minimum_is_n,
    "theorem-3-3": induced_path_maximum,
    "doubling": doubling,
    "table": table,
    "bounds": bounds,
    "growth-constant": growth,
}


def run_suite(name: str) -> list[Check]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return suite()
