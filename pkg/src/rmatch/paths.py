"""Exact r-matching counts of paths.

``s_r(P_0) = 1``, ``s_r(P_n) = n`` for ``1 <= n <= r`` and
``s_r(P_n) = s_r(P_{n-1}) + s_r(P_{n-r-1})`` beyond that.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

__all__ = [
    "PathSeries",
    "path_count_series",
    "path_count",
    "doubling_sides",
    "verify_doubling",
    "series_to_csv",
]


@dataclass
class PathSeries:
    """Memoized table ``values[n] = s_r(P_n)``; grows on demand."""

    r: int
    values: list[int] = field(default_factory=lambda: [1])

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if not self.values:
            self.values = [1]

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def extend(self, n_max: int) -> "PathSeries":
        vals, r = self.values, self.r
        for n in range(len(vals), n_max + 1):
            vals.append(n if n <= r else vals[n - 1] + vals[n - r - 1])
        return self

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError("path length must be non-negative")
        if n > self.n_max:
            self.extend(n)
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def path_count_series(r: int, n_max: int) -> PathSeries:
    return PathSeries(r).extend(n_max)


def path_count(r: int, n: int) -> int:
    return path_count_series(r, n)[n]


def doubling_sides(r: int, n: int, series: PathSeries | None = None) -> tuple[int, int]:
    """Both sides of the split of P_{2n} around its middle r+1 edges.

    Left: ``s(P_{2n})``. Right: ``s(P_{n-r}) s(P_n) + sum_{i=0..r}
    s(P_{n-2r+i}) s(P_{n-i})``.
    """
    if n < 2 * r:
        raise ValueError(f"doubling identity needs n >= 2r, got n={n}, r={r}")
    s = series if series is not None else PathSeries(r)
    s.extend(2 * n)
    rhs = s[n - r] * s[n] + sum(s[n - 2 * r + i] * s[n - i] for i in range(r + 1))
    return s[2 * n], rhs


def verify_doubling(r: int, n: int) -> bool:
    lhs, rhs = doubling_sides(r, n)
    return lhs == rhs


def series_to_csv(series: PathSeries) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", f"s_{series.r}(P_n)"])
    for n, v in enumerate(series.values):
        w.writerow([n, v])
    return buf.getvalue()
