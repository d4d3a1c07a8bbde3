"""Exhaustive extremal search over free trees and spider constructions.

:func:`search_extremal` scans every isomorphism class on n vertices and
reports the largest and smallest r-matching counts together with the
classes attaining them. The scan can be split into ``k`` interleaved chunks
whose partial reports are combined with :func:`merge_reports`.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce

from .counting import count_r_matchings, leaf_profile, merge_profiles, root_profile
from .paths import PathSeries, path_count
from .trees import (DEFAULT_ENUMERATION_LIMIT, EnumerationLimitError, Tree,
                    build_tree, enumerate_trees, format_code, path, spider)

__all__ = [
    "SearchReport",
    "search_extremal",
    "merge_reports",
    "default_threads",
    "PROBE_RADII",
    "probe_problem_4_4",
    "spider_counts",
    "spider_vs_path",
    "spider_growth_estimate",
    "TransformOutcome",
    "NotApplicable",
    "minimal_branching_subtree",
    "pendant_paths",
    "transform_leaf_reduction",
]

PROBE_RADII = (3, 4, 5, 7, 9)


@dataclass
class SearchReport:
    """Extremes of ``s_r`` over all free trees on ``n`` vertices.

    ``counts`` maps canonical code strings to counts and is only filled when
    the search was asked to keep them.
    """

    n: int
    r: int
    max_count: int
    min_count: int
    argmax_codes: list[str]
    argmin_codes: list[str]
    path_count: int
    path_is_max: bool
    trees_examined: int
    counts: dict[str, int] | None = field(default=None, repr=False)

    def as_dict(self, with_counts: bool = False) -> dict:
        d = {
            "n": self.n,
            "r": self.r,
            "max_count": self.max_count,
            "min_count": self.min_count,
            "argmax_codes": list(self.argmax_codes),
            "argmin_codes": list(self.argmin_codes),
            "path_count": self.path_count,
            "path_is_max": self.path_is_max,
            "trees_examined": self.trees_examined,
        }
        if with_counts and self.counts is not None:
            d["counts"] = dict(sorted(self.counts.items()))
        return d


def _merge_extreme(best: int, codes: list[str], other: int, other_codes: list[str],
                   larger: bool) -> tuple[int, list[str]]:
    if other == best:
        return best, sorted(set(codes) | set(other_codes))
    if (other > best) == larger:
        return other, list(other_codes)
    return best, codes


def merge_reports(a: SearchReport, b: SearchReport) -> SearchReport:
    """Combine partial reports for the same ``(n, r)`` from disjoint chunks."""
    if (a.n, a.r) != (b.n, b.r):
        raise ValueError("cannot merge reports for different (n, r)")
    if a.trees_examined == 0:
        return b
    if b.trees_examined == 0:
        return a
    mx, mx_codes = _merge_extreme(a.max_count, a.argmax_codes, b.max_count, b.argmax_codes, True)
    mn, mn_codes = _merge_extreme(a.min_count, a.argmin_codes, b.min_count, b.argmin_codes, False)
    counts = None
    if a.counts is not None or b.counts is not None:
        counts = {**(a.counts or {}), **(b.counts or {})}
    return SearchReport(
        n=a.n, r=a.r, max_count=mx, min_count=mn,
        argmax_codes=mx_codes, argmin_codes=mn_codes,
        path_count=a.path_count, path_is_max=a.path_count == mx,
        trees_examined=a.trees_examined + b.trees_examined, counts=counts,
    )


def _scan(n: int, r: int, chunk: tuple[int, int], limit: int,
          keep_counts: bool) -> SearchReport:
    pc = path_count(r, n)
    mx, mn = -1, math.inf
    mx_codes: list[str] = []
    mn_codes: list[str] = []
    counts: dict[str, int] | None = {} if keep_counts else None
    seen = 0
    for t in enumerate_trees(n, chunk=chunk, limit=limit):
        seen += 1
        c = count_r_matchings(t, r)
        code = format_code(t.code) if keep_counts or c >= mx or c <= mn else None
        if counts is not None:
            counts[code] = c
        if c > mx:
            mx, mx_codes = c, [code]
        elif c == mx:
            mx_codes.append(code)
        if c < mn:
            mn, mn_codes = c, [code]
        elif c == mn:
            mn_codes.append(code)
    if seen == 0:
        mx = mn = 0
    return SearchReport(n, r, mx, int(mn), sorted(mx_codes), sorted(mn_codes),
                        pc, pc == mx, seen, counts)


def default_threads() -> int:
    env = os.environ.get("RMATCH_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def search_extremal(r: int, n: int, *, threads: int | None = 1,
                    limit: int = DEFAULT_ENUMERATION_LIMIT,
                    keep_counts: bool = False) -> SearchReport:
    """Exact max/min of ``s_r`` over all trees on ``n`` vertices.

    ``threads > 1`` splits the enumeration into that many interleaved chunks
    run in worker processes; the merged report does not depend on it.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > limit:
        raise EnumerationLimitError(f"n={n} exceeds the enumeration limit {limit}")
    k = default_threads() if threads is None else max(1, threads)
    if k == 1:
        return _scan(n, r, (0, 1), limit, keep_counts)
    with ProcessPoolExecutor(max_workers=k) as pool:
        futures = [pool.submit(_scan, n, r, (i, k), limit, keep_counts) for i in range(k)]
        parts = [f.result() for f in futures]
    return reduce(merge_reports, parts)


def probe_problem_4_4(r: int, n_max: int, *, threads: int | None = 1,
                      limit: int = DEFAULT_ENUMERATION_LIMIT) -> list[SearchReport]:
    """Evidence on whether paths maximise ``s_r`` for r in {3, 4, 5, 7, 9}.

    One report per n = 1..n_max; nothing about the outcome is presumed.
    """
    if r not in PROBE_RADII:
        raise ValueError(f"r must be one of {PROBE_RADII}, got {r}")
    if n_max > limit:
        raise EnumerationLimitError(f"n_max={n_max} exceeds the enumeration limit {limit}")
    return [search_extremal(r, n, threads=threads, limit=limit) for n in range(1, n_max + 1)]


# --------------------------------------------------------------------------
# spiders
# --------------------------------------------------------------------------

def spider_counts(r: int, a: int, b_max: int) -> list[int]:
    """``[s_r(T_{a,1}), ..., s_r(T_{a,b_max})]``.

    The centre's DP profile is built one leg at a time, so the whole list
    costs ``b_max`` profile merges.
    """
    if a < 1 or b_max < 1:
        raise ValueError("need a >= 1 and b_max >= 1")
    leg = root_profile(path(a), r)   # leg rooted at its centre-side vertex
    acc = leaf_profile(r)
    out = []
    for _ in range(b_max):
        acc = merge_profiles(acc, leg, r)
        out.append(sum(acc))
    return out


def spider_vs_path(r: int, a: int, b_max: int) -> int | None:
    """Smallest ``b <= b_max`` with ``s_r(T_{a,b}) > s_r(P_{ab+1})``, else None."""
    counts = spider_counts(r, a, b_max)
    paths = PathSeries(r).extend(a * b_max + 1)
    for b, c in enumerate(counts, start=1):
        if c > paths[a * b + 1]:
            return b
    return None


def spider_growth_estimate(r: int, a: int, b: int) -> float:
    """``s_r(T_{a,b})^(1/(ab))``."""
    c = count_r_matchings(spider(a, b), r)
    return math.exp(math.log(c) / (a * b))


# --------------------------------------------------------------------------
# leaf-reduction rewiring
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TransformOutcome:
    input_code: str
    output_code: str
    input_count: int
    output_count: int
    strict: bool
    tree: Tree
    pivot: int
    moved: tuple[int, int]
    new_edge: tuple[int, int]

    def as_dict(self) -> dict:
        return {
            "applicable": True,
            "input_code": self.input_code,
            "output_code": self.output_code,
            "input_count": self.input_count,
            "output_count": self.output_count,
            "strict": self.strict,
            "pivot": self.pivot,
            "removed_edge": list(self.moved),
            "added_edge": list(self.new_edge),
        }


@dataclass(frozen=True)
class NotApplicable:
    reason: str

    def __bool__(self) -> bool:
        return False

    def as_dict(self) -> dict:
        return {"applicable": False, "reason": self.reason}


def minimal_branching_subtree(t: Tree) -> set[int]:
    """Vertices of the smallest subtree holding every vertex of degree >= 3."""
    deg = [t.degree(v) for v in range(t.n)]
    keep = set(range(t.n))
    if not any(d >= 3 for d in deg):
        return set()
    stack = [v for v in range(t.n) if deg[v] <= 1 and t.degree(v) < 3]
    while stack:
        v = stack.pop()
        if v not in keep:
            continue
        keep.discard(v)
        for w in t.adjacency[v]:
            if w in keep:
                deg[w] -= 1
                if deg[w] == 1 and t.degree(w) < 3:
                    stack.append(w)
    return keep


def pendant_paths(t: Tree, v: int, core: set[int]) -> list[list[int]]:
    """Paths hanging off ``v`` outside ``core``, each listed from ``v`` outward.

    Sorted longest first; equal lengths by the label next to ``v``.
    """
    out = []
    for w in t.adjacency[v]:
        if w in core:
            continue
        route = [w]
        prev = v
        while True:
            nxt = [x for x in t.adjacency[route[-1]] if x != prev]
            if not nxt:
                break
            prev = route[-1]
            route.append(nxt[0])
        out.append(route)
    out.sort(key=lambda p: (-len(p), p[0]))
    return out


def transform_leaf_reduction(t: Tree, r: int) -> TransformOutcome | NotApplicable:
    """Move one short pendant path onto the end of the longest one.

    At the lowest-labelled leaf ``v`` of the minimal branching subtree where
    the longest pendant path has at most r vertices and can be paired with
    another pendant path of combined length at most r + 1, the edge from
    ``v`` to that partner path is replaced by an edge from the partner's
    first vertex to the far end of the longest path. The result has one leaf
    fewer and no fewer r-matchings.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if t.is_path():
        return NotApplicable("input is a path")
    core = minimal_branching_subtree(t)
    if len(core) == 1:
        tips = sorted(core)
    else:
        tips = sorted(v for v in core if sum(w in core for w in t.adjacency[v]) == 1)
    reasons = []
    for v in tips:
        legs = pendant_paths(t, v, core)
        if len(legs) < 2:
            reasons.append(f"vertex {v}: fewer than two pendant paths")
            continue
        p1 = len(legs[0])
        if p1 >= r + 1:
            reasons.append(f"vertex {v}: longest pendant path has {p1} >= r+1 vertices")
            continue
        partner = next((leg for leg in legs[1:] if p1 + len(leg) <= r + 1), None)
        if partner is None:
            reasons.append(f"vertex {v}: every pair with the longest path exceeds r+1 vertices")
            continue
        removed = (v, partner[0])
        added = (partner[0], legs[0][-1])
        edges = [added if {x, y} == set(removed) else (x, y) for x, y in t.edges]
        new = build_tree(t.n, edges)
        before = count_r_matchings(t, r)
        after = count_r_matchings(new, r)
        strict = len(t.leaves()) == 3 and t.n >= r + 3
        return TransformOutcome(
            input_code=format_code(t.code), output_code=format_code(new.code),
            input_count=before, output_count=after, strict=strict, tree=new,
            pivot=v, moved=removed, new_edge=added,
        )
    return NotApplicable("; ".join(reasons) or "no branching leaf qualifies")
