import pytest

from rmatch.counting import brute_force_count
from rmatch.paths import (PathSeries, doubling_sides, path_count, path_count_series,
                          series_to_csv, verify_doubling)
from rmatch.trees import path


def test_r2_series_prefix():
    values = path_count_series(2, 7).values
    assert values == [1, 1, 2, 3, 4, 6, 9, 13]
    # cross-check against exhaustive subset counting
    assert values[1:] == [brute_force_count(path(n), 2) for n in range(1, 8)]


def test_r3_table():
    assert path_count_series(3, 8).values == [1, 1, 2, 3, 4, 5, 7, 10, 14]
    assert path_count(3, 8) == 14


def test_initial_segment_is_n():
    assert path_count(5, 5) == 5
    for r in range(1, 12):
        s = path_count_series(r, r)
        assert s.values == [1] + list(range(1, r + 1))


@pytest.mark.parametrize("r", range(1, 13))
def test_recurrence_and_growth(r):
    s = path_count_series(r, 150)
    for n in range(r + 1, 151):
        assert s[n] == s[n - 1] + s[n - r - 1]
    if r >= 2:
        assert all(s[n] < s[n + 1] for n in range(r, 150))


def test_series_extends_on_demand():
    s = PathSeries(2)
    assert s.n_max == 0 and s[0] == 1
    assert s[10] == path_count(2, 10)
    assert len(s) == 11
    with pytest.raises(IndexError):
        s[-1]
    with pytest.raises(ValueError):
        PathSeries(0)


@pytest.mark.parametrize("r, n, lhs, rhs", [
    (2, 5, 41, 3 * 6 + (1 * 6 + 2 * 4 + 3 * 3)),
    (2, 4, 19, 2 * 4 + (1 * 4 + 1 * 3 + 2 * 2)),
])
def test_doubling_worked_examples(r, n, lhs, rhs):
    assert doubling_sides(r, n) == (lhs, rhs)
    assert verify_doubling(r, n)


def test_doubling_r3():
    s = path_count_series(3, 12)
    rhs = s[3] * s[6] + sum(s[i] * s[6 - i] for i in range(4))
    assert s[12] == rhs
    assert verify_doubling(3, 6)


def test_doubling_needs_n_at_least_2r():
    with pytest.raises(ValueError):
        verify_doubling(3, 5)


def test_doubling_range():
    for r in range(1, 11):
        for n in range(2 * r, 101):
            assert verify_doubling(r, n)


def test_induced_halving_inequality():
    s = path_count_series(2, 300)
    assert all(s[n] >= 2 * s[n - 2] for n in range(2, 301))
    # s(P_3) = 3 > 2 s(P_1) while s(P_5) = 6 = 2 s(P_3), so equality sits at n = 2, 4, 5
    tight = [n for n in range(2, 301) if s[n] == 2 * s[n - 2]]
    assert tight == [2, 4, 5]
    assert [brute_force_count(path(n), 2) for n in (1, 3, 5)] == [1, 3, 6]


def test_csv_export():
    text = series_to_csv(path_count_series(2, 4))
    assert text.splitlines() == ["n,s_2(P_n)", "0,1", "1,1", "2,2", "3,3", "4,4"]


def test_big_values_are_exact():
    v = path_count(1, 500)
    # s_1(P_n) is the Fibonacci number F(n+1)
    a, b = 0, 1
    for _ in range(501):
        a, b = b, a + b
    assert v == a
