"""Tree representation, named families, metrics and free-tree enumeration.

Vertices are the dense integers ``0..n-1``. Edges are identified by their
position in :attr:`Tree.edges`; every generator below documents the order it
emits edges in, so edge indices are stable across runs.

Isomorphism is handled only through :func:`canonical_code`, a centre-rooted
canonical level sequence.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from itertools import islice
from pathlib import Path
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Tree",
    "TreeError",
    "EdgeCountError",
    "LabelOutOfRangeError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "CycleError",
    "DisconnectedError",
    "EnumerationLimitError",
    "DEFAULT_ENUMERATION_LIMIT",
    "build_tree",
    "path",
    "star",
    "spider",
    "from_level_sequence",
    "edge_distance",
    "diameter",
    "center",
    "canonical_code",
    "format_code",
    "parse_code",
    "is_isomorphic",
    "enumerate_trees",
    "count_free_trees",
    "read_tree",
    "parse_tree",
    "format_tree",
    "write_tree",
]

DEFAULT_ENUMERATION_LIMIT = 18


class TreeError(ValueError):
    """Base class for malformed tree input."""


class EdgeCountError(TreeError):
    pass


class LabelOutOfRangeError(TreeError):
    pass


class SelfLoopError(TreeError):
    pass


class DuplicateEdgeError(TreeError):
    pass


class CycleError(TreeError):
    pass


class DisconnectedError(TreeError):
    pass


class EnumerationLimitError(ValueError):
    pass


class Tree:
    """Immutable labelled tree on vertices ``0..n-1``.

    Use :func:`build_tree` (or one of the generators) rather than calling the
    constructor with unchecked data.
    """

    _frozen = frozenset({"n", "edges", "adjacency"})

    def __init__(self, n: int, edges: tuple[tuple[int, int], ...],
                 adjacency: tuple[tuple[int, ...], ...]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", adjacency)

    def __setattr__(self, name, value):
        if name in Tree._frozen:
            raise AttributeError("Tree is immutable")
        object.__setattr__(self, name, value)

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={list(self.edges)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> list[int]:
        if self.n == 1:
            return [0]
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def is_path(self) -> bool:
        return all(len(nb) <= 2 for nb in self.adjacency)

    def distances_from(self, source: int) -> list[int]:
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    @cached_property
    def distance_matrix(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs vertex distances; O(n^2) memory, meant for small trees."""
        return tuple(tuple(self.distances_from(v)) for v in range(self.n))

    @cached_property
    def code(self) -> tuple[int, ...]:
        return canonical_code(self)


def build_tree(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Validate ``edges`` and return the tree they describe.

    Raises a :class:`TreeError` subclass naming the first defect found:
    too many edges, a label outside ``0..n-1``, a self-loop, a repeated
    edge, a cycle, or (too few edges) a disconnected graph.
    """
    if n < 1:
        raise EdgeCountError(f"a tree needs at least one vertex, got n={n}")
    pairs = [tuple(int(x) for x in e) for e in edges]
    if len(pairs) > n - 1:
        raise EdgeCountError(f"a tree on {n} vertices has {n - 1} edges, got {len(pairs)}")

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    seen: set[tuple[int, int]] = set()
    for e in pairs:
        if len(e) != 2:
            raise TreeError(f"edge {e!r} is not a vertex pair")
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise LabelOutOfRangeError(f"edge ({u}, {v}) uses a label outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"edge ({u}, {v}) listed twice")
        seen.add(key)
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CycleError(f"edge ({u}, {v}) closes a cycle")
        parent[ru] = rv

    if len(pairs) < n - 1:
        raise DisconnectedError(
            f"{len(pairs)} edges cannot connect {n} vertices ({n - 1} needed)")

    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Tree(n, tuple(pairs), tuple(tuple(nb) for nb in adjacency))


# --------------------------------------------------------------------------
# named families
# --------------------------------------------------------------------------

def path(n: int) -> Tree:
    """P_n with edges ``(i, i+1)`` in order of i."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return build_tree(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    """K_{1,n-1} centred at 0, edges ``(0, i)`` for i = 1..n-1."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return build_tree(n, [(0, i) for i in range(1, n)])


def spider(a: int, b: int) -> Tree:
    """Subdivided star T_{a,b}: ``b`` legs of ``a`` edges around centre 0.

    Leg ``j`` (0-based) holds vertices ``j*a+1 .. (j+1)*a`` ordered outward;
    its edges are emitted consecutively, starting with the one at the centre.
    """
    if a < 1 or b < 1:
        raise ValueError("spider needs a >= 1 and b >= 1")
    edges = []
    for j in range(b):
        prev = 0
        for k in range(1, a + 1):
            v = j * a + k
            edges.append((prev, v))
            prev = v
    return build_tree(a * b + 1, edges)


def from_level_sequence(levels: Sequence[int]) -> Tree:
    """Tree of a preorder level sequence (root at level 0).

    Vertex ``i`` is the i-th entry; edge ``i-1`` joins it to its parent.
    """
    if not levels or levels[0] != 0:
        raise ValueError("level sequence must start with the root at level 0")
    stack = [0]
    edges = []
    for i in range(1, len(levels)):
        lv = levels[i]
        if lv < 1 or lv > len(stack):
            raise ValueError(f"invalid level {lv} at position {i}")
        del stack[lv:]
        edges.append((stack[-1], i))
        stack.append(i)
    return build_tree(len(levels), edges)


# --------------------------------------------------------------------------
# metrics
# --------------------------------------------------------------------------

def _check_edge(t: Tree, e: int) -> None:
    if not (0 <= e < t.num_edges):
        raise IndexError(f"edge index {e} out of range 0..{t.num_edges - 1}")


def edge_distance(t: Tree, e: int, f: int) -> int:
    """Minimum vertex distance between an endpoint of ``e`` and one of ``f``.

    Incident edges are at distance 0.
    """
    _check_edge(t, e)
    _check_edge(t, f)
    d = t.distance_matrix
    (a, b), (c, x) = t.edges[e], t.edges[f]
    return min(d[a][c], d[a][x], d[b][c], d[b][x])


def _farthest(t: Tree, source: int) -> tuple[int, list[int]]:
    dist = t.distances_from(source)
    far = max(range(t.n), key=lambda v: (dist[v], -v))
    return far, dist


def diameter(t: Tree) -> int:
    u, _ = _farthest(t, 0)
    _, dist = _farthest(t, u)
    return max(dist)


def center(t: Tree) -> list[int]:
    """The one or two central vertices (midpoints of a longest path)."""
    u, _ = _farthest(t, 0)
    w, dist_u = _farthest(t, u)
    # walk back from w towards u along strictly decreasing distance
    route = [w]
    while route[-1] != u:
        x = route[-1]
        route.append(next(y for y in t.adjacency[x] if dist_u[y] == dist_u[x] - 1))
    length = len(route) - 1
    if length % 2 == 0:
        return [route[length // 2]]
    return sorted((route[length // 2], route[length // 2 + 1]))


# --------------------------------------------------------------------------
# canonical codes
# --------------------------------------------------------------------------

def _rooted_code(t: Tree, root: int) -> tuple[int, ...]:
    parent = [-1] * t.n
    order = [root]
    parent[root] = root
    for u in order:
        for w in t.adjacency[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
    codes: list[tuple[int, ...] | None] = [None] * t.n
    children: list[list[tuple[int, ...]]] = [[] for _ in range(t.n)]
    for u in reversed(order):
        parts = sorted(children[u], reverse=True)
        seq = [0]
        for part in parts:
            seq.extend(x + 1 for x in part)
        codes[u] = tuple(seq)
        children[u] = []
        if u != root:
            children[parent[u]].append(codes[u])
    return codes[root]


def canonical_code(t: Tree) -> tuple[int, ...]:
    """Level sequence of ``t`` rooted at its centre with children sorted.

    For bicentral trees the larger of the two centre rootings is used, so two
    trees share a code exactly when they are isomorphic.
    """
    return max(_rooted_code(t, c) for c in center(t))


def format_code(code: Sequence[int]) -> str:
    return ",".join(str(x) for x in code)


def parse_code(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def is_isomorphic(t1: Tree, t2: Tree) -> bool:
    return t1.n == t2.n and t1.code == t2.code


# --------------------------------------------------------------------------
# free-tree enumeration (Wright, Richmond, Odlyzko and McKay)
# --------------------------------------------------------------------------
#
# Every free tree is produced once, as a level sequence rooted at its centre,
# by walking rooted-tree successors and skipping sequences that are not the
# canonical representative of their free tree.

def _rooted_successor(levels: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    # first principal subtree vs. root with the remaining subtrees
    m = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            m = i
            break
    left = [x - 1 for x in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _next_free_candidate(levels: list[int]) -> list[int] | None:
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return levels
    p = len(left)
    nxt = _rooted_successor(levels, p)
    if nxt is not None and levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def _free_level_sequences(n: int) -> Iterator[list[int]]:
    if n == 1:
        yield [0]
        return
    if n == 2:
        yield [0, 1]
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free_candidate(levels)
        if levels is None:
            return
        yield levels
        levels = _rooted_successor(levels)


def enumerate_trees(n: int, *, chunk: tuple[int, int] | None = None,
                    limit: int = DEFAULT_ENUMERATION_LIMIT) -> Iterator[Tree]:
    """Yield one tree per isomorphism class on ``n`` vertices.

    The order is deterministic and starts with P_n. ``chunk=(i, k)`` yields
    only the trees whose stream index is congruent to ``i`` mod ``k``, so
    ``k`` consumers can split the stream without coordination.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise EnumerationLimitError(f"n={n} exceeds the enumeration limit {limit}")
    stream: Iterable[list[int]] = _free_level_sequences(n)
    if chunk is not None:
        i, k = chunk
        if not (k >= 1 and 0 <= i < k):
            raise ValueError(f"invalid chunk {chunk!r}")
        stream = islice(stream, i, None, k)
    for levels in stream:
        yield from_level_sequence(levels)


def count_free_trees(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    if n > limit:
        raise EnumerationLimitError(f"n={n} exceeds the enumeration limit {limit}")
    return sum(1 for _ in _free_level_sequences(n))


# --------------------------------------------------------------------------
# text format
# --------------------------------------------------------------------------

def parse_tree(text: str) -> Tree:
    """Parse the ``n`` / ``u v`` line format; ``#`` starts a comment."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise TreeError("empty tree description")
    if len(rows[0]) != 1:
        raise TreeError("first line must hold the vertex count only")
    try:
        n = int(rows[0][0])
        edges = []
        for row in rows[1:]:
            if len(row) != 2:
                raise TreeError(f"expected 'u v', got {' '.join(row)!r}")
            edges.append((int(row[0]), int(row[1])))
    except ValueError as exc:
        if isinstance(exc, TreeError):
            raise
        raise TreeError(f"non-integer token in tree description: {exc}") from None
    return build_tree(n, edges)


def read_tree(filename: str | Path) -> Tree:
    return parse_tree(Path(filename).read_text())


def format_tree(t: Tree) -> str:
    lines = [str(t.n)] + [f"{u} {v}" for u, v in t.edges]
    return "\n".join(lines) + "\n"


def write_tree(t: Tree, filename: str | Path) -> None:
    Path(filename).write_text(format_tree(t))
