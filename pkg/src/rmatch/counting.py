"""Exact counts of r-matchings in trees.

An r-matching is a set of edges whose pairwise edge distance is at least r;
the empty set and every single edge count. :func:`count_r_matchings` is a
rooted subtree DP over saturated distance states, and
:func:`brute_force_count` is the exhaustive subset scan used to check it.
"""

from __future__ import annotations

import random

from .trees import Tree, edge_distance

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "TreeTooLargeError",
    "count_r_matchings",
    "root_profile",
    "brute_force_count",
    "merge_profiles",
    "leaf_profile",
]

BRUTE_FORCE_LIMIT = 26


class TreeTooLargeError(ValueError):
    pass


def _check_r(r: int) -> None:
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")


def _merge(acc: list[int], child: list[int], r: int) -> list[int]:
    """Attach a child subtree (profile ``child``) to the running profile.

    ``acc[a]`` counts partial configurations whose nearest selected endpoint
    is at distance ``a`` from the current vertex (``a == r`` meaning none or
    at least r). Across the new edge the child's state becomes
    ``e = min(d + 1, r)``; leaving the edge out is feasible iff ``a + e >= r``
    and yields state ``min(a, e)``. Selecting the edge needs ``a == d == r``.
    """
    shifted = [0] * (r + 1)
    for d in range(r):
        shifted[min(d + 1, r)] += child[d]
    shifted[r] += child[r]

    suf_a = [0] * (r + 2)
    suf_e = [0] * (r + 2)
    for k in range(r, -1, -1):
        suf_a[k] = suf_a[k + 1] + acc[k]
        suf_e[k] = suf_e[k + 1] + shifted[k]

    out = [0] * (r + 1)
    for k in range(r + 1):
        # min(a, e) == k: either a == k and e >= k, or e == k and a > k
        lo = max(k, r - k)
        total = acc[k] * suf_e[lo] if acc[k] else 0
        if shifted[k]:
            total += shifted[k] * suf_a[max(k + 1, r - k)]
        out[k] = total
    out[0] += acc[r] * child[r]
    return out


def root_profile(t: Tree, r: int, root: int = 0) -> list[int]:
    """DP profile at ``root``: entry d counts r-matchings of the whole tree
    whose nearest selected endpoint is at distance d (saturated at r)."""
    _check_r(r)
    n = t.n
    parent = [-1] * n
    parent[root] = root
    order = [root]
    for u in order:
        for w in t.adjacency[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)

    profiles: list[list[int] | None] = [None] * n
    for u in reversed(order):
        acc = [0] * (r + 1)
        acc[r] = 1
        for w in t.adjacency[u]:
            if parent[w] == u:
                acc = _merge(acc, profiles[w], r)
                profiles[w] = None
        profiles[u] = acc
    return profiles[root]


def count_r_matchings(t: Tree, r: int, *, check_root: bool = False) -> int:
    """Number of r-matchings of ``t`` (the empty set included).

    With ``check_root`` the count is recomputed from a random root and the
    two results are compared; a mismatch raises :class:`AssertionError`.
    """
    total = sum(root_profile(t, r))
    if check_root and t.n > 1:
        other = random.randrange(t.n)
        again = sum(root_profile(t, r, other))
        if again != total:
            raise AssertionError(f"root 0 gives {total}, root {other} gives {again}")
    return total


def brute_force_count(t: Tree, r: int) -> int:
    """Count r-matchings by scanning every edge subset.

    Only for trees with at most :data:`BRUTE_FORCE_LIMIT` vertices.
    """
    _check_r(r)
    if t.n > BRUTE_FORCE_LIMIT:
        raise TreeTooLargeError(
            f"brute force is limited to n <= {BRUTE_FORCE_LIMIT}, got n={t.n}")
    m = t.num_edges
    # conflict[i] = bitmask of edges j that may not share a matching with i
    conflict = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if edge_distance(t, i, j) < r:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i

    count = 0
    for mask in range(1 << m):
        ok = True
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if conflict[i] & mask:
                ok = False
                break
            rest ^= low
        if ok:
            count += 1
    return count


def merge_profiles(acc: list[int], child: list[int], r: int) -> list[int]:
    """Profile of a vertex after hanging one more child subtree below it.

    ``acc`` is the vertex's current profile and ``child`` the profile of the
    new child's subtree; start from :func:`leaf_profile` for a bare vertex.
    """
    _check_r(r)
    if len(acc) != r + 1 or len(child) != r + 1:
        raise ValueError(f"profiles must have length r+1 = {r + 1}")
    return _merge(acc, child, r)


def leaf_profile(r: int) -> list[int]:
    _check_r(r)
    out = [0] * (r + 1)
    out[r] = 1
    return out
