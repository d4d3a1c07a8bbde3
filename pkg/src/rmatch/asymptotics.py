"""Growth constants and bounds for r-matching counts.

``beta(r)`` is the root in (1, 2) of ``x^(r+1) - x^r - 1``, the per-vertex
growth rate of path counts. ``solve_s(r)`` solves
``r/2 + s = (s+1) log(s+1)`` and ``alpha(r) = exp(1/(s+1))``; together they
give the tree-wide upper and lower bounds. Spider growth rates and the
table of constants for small r live here as well.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from decimal import ROUND_DOWN, Decimal

from .paths import PathSeries

__all__ = [
    "DEFAULT_TOL",
    "char_poly_sign",
    "beta",
    "solve_s",
    "alpha",
    "alpha_power_form",
    "GrowthConstant",
    "growth_constant",
    "log_upper_bound",
    "upper_bound",
    "log_lower_bound",
    "lower_bound",
    "construction_leg_length",
    "best_leg_length",
    "leg_growth",
    "ConstantsRecord",
    "TABLE_COLUMNS",
    "table_row",
    "table",
    "truncate4",
    "table_to_csv",
    "table_to_json",
    "table_to_text",
]

DEFAULT_TOL = 1e-13
_LOG_DOMAIN_FROM = 60


def char_poly_sign(r: int, x: float) -> int:
    """Sign of ``x^(r+1) - x^r - 1`` for ``x > 1``.

    For large r the sign is read from ``r log x + log(x - 1)``, which has the
    same sign and does not overflow.
    """
    if x <= 1.0:
        return -1
    if r > _LOG_DOMAIN_FROM:
        v = r * math.log(x) + math.log(x - 1.0)
    else:
        v = x ** (r + 1) - x ** r - 1.0
    return (v > 0) - (v < 0)


def _beta_newton(r: int, x: float) -> float:
    if r > _LOG_DOMAIN_FROM:
        h = r * math.log(x) + math.log(x - 1.0)
        dh = r / x + 1.0 / (x - 1.0)
    else:
        h = x ** (r + 1) - x ** r - 1.0
        dh = x ** (r - 1) * ((r + 1) * x - r)
    return x - h / dh


def beta(r: int, tol: float = DEFAULT_TOL) -> float:
    """Unique real root of ``x^(r+1) - x^r - 1`` in (1, 2).

    Bisection on [1, 2] down to width ``tol``, then two Newton steps that are
    kept only while they stay inside the final bracket.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi = 1.0, 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if char_poly_sign(r, mid) > 0:
            hi = mid
        else:
            lo = mid
    x = 0.5 * (lo + hi)
    for _ in range(2):
        y = _beta_newton(r, x)
        if not lo <= y <= hi:
            break
        x = y
    return x


def _s_gap(r: int, s: float) -> float:
    return (s + 1.0) * math.log(s + 1.0) - s - r / 2.0


def solve_s(r: int, tol: float = DEFAULT_TOL) -> float:
    """Positive solution of ``r/2 + s = (s+1) log(s+1)``.

    ``(s+1) log(s+1) - s - r/2`` is increasing in s and negative at 0, and the
    root lies below r, so bisection on [0, r] brackets it.
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    lo, hi = 0.0, float(r)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if _s_gap(r, mid) > 0:
            hi = mid
        else:
            lo = mid
    s = 0.5 * (lo + hi)
    for _ in range(2):
        y = s - _s_gap(r, s) / math.log(s + 1.0)
        if not lo <= y <= hi:
            break
        s = y
    return s


def alpha(r: int, s: float | None = None) -> float:
    if s is None:
        s = solve_s(r)
    return math.exp(1.0 / (s + 1.0))


def alpha_power_form(r: int, s: float | None = None) -> float:
    """``(s+1)^(1/(r/2+s))``, equal to :func:`alpha` at the solution s."""
    if s is None:
        s = solve_s(r)
    return (s + 1.0) ** (1.0 / (r / 2.0 + s))


# --------------------------------------------------------------------------
# path growth constant
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthConstant:
    """Empirical ``s_r(P_n) / beta^(n-1)`` next to the two closed forms.

    ``matches`` names the closed form within ``match_tol`` of the empirical
    value: ``"closed_paper"`` for ``beta^(2r)/(beta^r + r + 1)``,
    ``"closed_alt"`` for ``beta^(2r+1)/(beta^r + r + 1)``, ``"both"`` or ``None``.
    """

    r: int
    n_probe: int
    beta: float
    empirical: float
    closed_paper: float
    closed_alt: float
    last_step: float
    matches: str | None

    @property
    def gaps(self) -> tuple[float, float]:
        """``(closed_paper - empirical, closed_alt - empirical)``."""
        return self.closed_paper - self.empirical, self.closed_alt - self.empirical

    def report(self) -> str:
        verdict = {
            "closed_alt": "beta^(2r+1)/(beta^r+r+1) matches; beta^(2r)/(beta^r+r+1) does not",
            "closed_paper": "beta^(2r)/(beta^r+r+1) matches; beta^(2r+1)/(beta^r+r+1) does not",
            "both": "both closed forms match",
            None: "neither closed form matches",
        }[self.matches]
        return (f"r={self.r} n={self.n_probe}: empirical={self.empirical:.10f} "
                f"beta^(2r)/(beta^r+r+1)={self.closed_paper:.10f} "
                f"beta^(2r+1)/(beta^r+r+1)={self.closed_alt:.10f} "
                f"(last step {self.last_step:.2e}); {verdict}")


def _ratio(series: PathSeries, n: int, log_beta: float) -> float:
    return math.exp(math.log(series[n]) - (n - 1) * log_beta)


def growth_constant(r: int, n_probe: int = 300, *, match_tol: float = 1e-6,
                    series: PathSeries | None = None) -> GrowthConstant:
    if n_probe < 50:
        raise ValueError("n_probe must be >= 50")
    b = beta(r)
    lb = math.log(b)
    s = series if series is not None else PathSeries(r)
    s.extend(n_probe)
    emp = _ratio(s, n_probe, lb)
    prev = _ratio(s, n_probe - 1, lb)
    denom_log = math.log(math.exp(r * lb) + r + 1)
    even = math.exp(2 * r * lb - denom_log)
    odd = math.exp((2 * r + 1) * lb - denom_log)
    hit_even = abs(even - emp) <= match_tol
    hit_odd = abs(odd - emp) <= match_tol
    matches = ("both" if hit_even and hit_odd else "closed_paper" if hit_even
               else "closed_alt" if hit_odd else None)
    return GrowthConstant(r, n_probe, b, emp, even, odd, abs(emp - prev), matches)


# --------------------------------------------------------------------------
# bounds on the maximum over all trees
# --------------------------------------------------------------------------

def _exp_or_inf(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def log_upper_bound(r: int, n: int) -> float:
    s = solve_s(r)
    return math.log(s + 1.0) + (n - 1) * (1.0 / r + 1.0 / (s + 1.0))


def upper_bound(r: int, n: int) -> float:
    """``(s+1) (e^(1/r) alpha_r)^(n-1)``; ``inf`` if it overflows a double."""
    if r < 2 or n < 1:
        raise ValueError("upper_bound needs r >= 2 and n >= 1")
    return _exp_or_inf(log_upper_bound(r, n))


def log_lower_bound(r: int, n: int) -> float:
    s = solve_s(r)
    return (n - 1) * (1.0 / (s + 1.0) - 6.0 / r ** 2)


def lower_bound(r: int, n: int) -> float:
    """``(e^(-6/r^2) alpha_r)^(n-1)``."""
    if r < 2 or n < 1:
        raise ValueError("lower_bound needs r >= 2 and n >= 1")
    return _exp_or_inf(log_lower_bound(r, n))


# --------------------------------------------------------------------------
# spider legs
# --------------------------------------------------------------------------

def construction_leg_length(r: int, s: float | None = None) -> int:
    """Leg length ``ceil(r/2 + s + 1/2)`` of the lower-bound spider."""
    if s is None:
        s = solve_s(r)
    return math.ceil(r / 2 + s + 0.5)


def leg_growth(r: int, a: int) -> float:
    """``(a - ceil(r/2) + 1)^(1/a)``, the per-edge growth of long spiders."""
    return (a - math.ceil(r / 2) + 1) ** (1.0 / a)


def best_leg_length(r: int) -> int:
    """Leg length a >= ceil(r/2) maximising ``(a - ceil(r/2) + 1)^(1/a)``.

    Candidates are compared exactly (``x^(1/a) < y^(1/b)`` iff
    ``x^b < y^a``); ties go to the shorter leg.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    c = math.ceil(r / 2)
    best = c
    best_k = 1
    # log(k)/a decreases once a is past e*k, so 4r + 8 is a safe horizon
    for a in range(c + 1, c + 4 * r + 8):
        k = a - c + 1
        if k ** best > best_k ** a:
            best, best_k = a, k
    return best


# --------------------------------------------------------------------------
# table of constants
# --------------------------------------------------------------------------

TABLE_COLUMNS = ("r", "s", "alpha", "beta", "a", "spider_growth",
                 "c_empirical", "c_paper", "c_alt")


@dataclass(frozen=True)
class ConstantsRecord:
    r: int
    s: float
    alpha: float
    beta: float
    a: int
    spider_growth: float
    c_empirical: float
    c_paper: float
    c_alt: float

    @property
    def best_a(self) -> int:
        return self.a

    @property
    def alpha_r(self) -> float:
        return self.alpha

    @property
    def beta_r(self) -> float:
        return self.beta

    def as_dict(self) -> dict:
        d = asdict(self)
        return {k: d[k] for k in TABLE_COLUMNS}


def table_row(r: int, n_probe: int = 300, tol: float = DEFAULT_TOL) -> ConstantsRecord:
    s = solve_s(r, tol)
    a = best_leg_length(r)
    gc = growth_constant(r, n_probe)
    return ConstantsRecord(
        r=r, s=s, alpha=alpha(r, s), beta=beta(r, tol), a=a,
        spider_growth=leg_growth(r, a), c_empirical=gc.empirical,
        c_paper=gc.closed_paper, c_alt=gc.closed_alt,
    )


def table(r_min: int = 2, r_max: int = 11, tol: float = DEFAULT_TOL) -> list[ConstantsRecord]:
    if not 2 <= r_min <= r_max:
        raise ValueError("need 2 <= r_min <= r_max")
    return [table_row(r, tol=tol) for r in range(r_min, r_max + 1)]


def truncate4(x: float) -> str:
    """First four decimals of ``x``, cut rather than rounded (1.71828 -> 1.7182)."""
    return str(Decimal(repr(x)).quantize(Decimal("0.0001"), rounding=ROUND_DOWN))


def _sig10(x: float) -> float:
    return float(f"{x:.10g}")


def table_to_csv(rows: list[ConstantsRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for row in rows:
        d = row.as_dict()
        w.writerow([d["r"], truncate4(d["s"]), truncate4(d["alpha"]), truncate4(d["beta"]),
                    d["a"], truncate4(d["spider_growth"]), truncate4(d["c_empirical"]),
                    truncate4(d["c_paper"]), truncate4(d["c_alt"])])
    return buf.getvalue()


def table_to_json(rows: list[ConstantsRecord]) -> str:
    out = []
    for row in rows:
        d = row.as_dict()
        out.append({k: (v if isinstance(v, int) else _sig10(v)) for k, v in d.items()})
    return json.dumps(out, indent=2)


def table_to_text(rows: list[ConstantsRecord]) -> str:
    head = f"{'r':>3} {'s':>8} {'alpha':>8} {'beta':>8} {'a':>3} {'growth':>8}"
    lines = [head]
    for row in rows:
        lines.append(f"{row.r:>3} {truncate4(row.s):>8} {truncate4(row.alpha):>8} "
                     f"{truncate4(row.beta):>8} {row.a:>3} {truncate4(row.spider_growth):>8}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# inequalities used inside the upper-bound induction, as numeric checks
# --------------------------------------------------------------------------

def _step_inequalities(r: int) -> dict[str, tuple[float, float]]:
    """Left and right sides of the two growth-step inequalities.

    With ``g = e^(1/r) alpha_r``: ``g^(r/2+s/2+1) >= g^(r/2+s/2) + 1`` and,
    for integer ``w`` in ``{0, floor(s)}``, ``g^(r+w+1) >= g^(r+w) + w``.
    """
    s = solve_s(r)
    g = math.exp(1.0 / r) * alpha(r, s)
    out = {"short": (g ** (r / 2 + s / 2 + 1), g ** (r / 2 + s / 2) + 1)}
    for w in sorted({0, math.floor(s)}):
        out[f"w={w}"] = (g ** (r + w + 1), g ** (r + w) + w)
    return out
