"""Simple undirected graphs on vertices 0..n-1, distances, odd-girth and cycle queries.

Vertex sets are Python ints used as bit-sets: bit ``v`` is set iff ``v`` is a member.
Everything here is immutable after construction.
"""
from __future__ import annotations

import math
import os
import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, GraphFormatError

INF = math.inf

DEFAULT_CYCLE_BUDGET = 10**7
DEFAULT_ISO_BUDGET = 10**7


def env_budget(default: int) -> int:
    """Search budget, overridable through ``GIRTHBOUND_BUDGET``."""
    raw = os.environ.get("GIRTHBOUND_BUDGET")
    if raw:
        try:
            return int(float(raw))
        except ValueError:
            pass
    return default


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the members of a bit-set in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple loopless undirected graph.

    ``edges`` is the lexicographically sorted tuple of pairs ``(u, v)`` with ``u < v``.
    Use :meth:`from_edges` to build one; it validates and sorts.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    nbr: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "nbr", tuple(to_mask(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], merge: bool = False) -> "Graph":
        """Validated constructor.

        Loops are always rejected; parallel edges are rejected unless ``merge`` is set.
        """
        if n < 0:
            raise GraphFormatError(f"negative vertex count {n}")
        seen: set[tuple[int, int]] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in seen and not merge:
                raise GraphFormatError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr[u] >> v & 1)

    def without_edge(self, u: int, v: int) -> "Graph":
        key = (u, v) if u < v else (v, u)
        return Graph(self.n, tuple(e for e in self.edges if e != key))

    def without_vertex(self, x: int) -> "Graph":
        """Delete ``x`` and shift the higher labels down by one."""
        def f(a):
            return a if a < x else a - 1
        return Graph.from_edges(self.n - 1, [(f(u), f(v)) for u, v in self.edges if x not in (u, v)])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        es = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(vertices), es)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of this graph under the vertex bijection ``v -> perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = [s]
            seen |= 1 << s
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen >> y & 1:
                        seen |= 1 << y
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


# ---------------------------------------------------------------- text format

def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"graph {g.n}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "graph":
                raise GraphFormatError(f"line {lineno}: expected 'graph <n>'")
            n = _int(parts[1], lineno)
            continue
        if len(parts) != 3 or parts[0] != "e":
            raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
        u, v = _int(parts[1], lineno), _int(parts[2], lineno)
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError("missing 'graph <n>' header")
    return Graph.from_edges(n, edges)


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: not an integer: {tok!r}") from None


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def read_graph(path: str) -> Graph:
    return parse_graph(read_text(path))


# ------------------------------------------------------------------ distances

def bfs(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in g.adj[x]:
            if dist[y] == INF:
                dist[y] = dx
                queue.append(y)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple[tuple[float, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> float:
        u, v = uv
        return self.d[u][v]

    def row(self, u: int) -> tuple[float, ...]:
        return self.d[u]

    def diameter(self) -> float:
        return max((max(r) for r in self.d), default=0)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(bfs(g, s)) for s in range(g.n)))


@dataclass(frozen=True)
class DistanceLevels:
    """``level[v][d]`` is the bit-set of vertices at distance exactly ``d`` from ``v``."""

    n: int
    level: tuple[tuple[int, ...], ...]

    def at(self, v: int, d: int) -> int:
        row = self.level[v]
        return row[d] if 0 <= d < len(row) else 0

    def members(self, v: int, d: int) -> list[int]:
        return list(iter_bits(self.at(v, d)))


def distance_levels(g: Graph, dm: DistanceMatrix | None = None) -> DistanceLevels:
    if dm is None:
        dm = all_pairs_distances(g)
    rows = []
    for v in range(g.n):
        finite = [d for d in dm.d[v] if d != INF]
        buckets = [0] * (int(max(finite)) + 1)
        for u, d in enumerate(dm.d[v]):
            if d != INF:
                buckets[int(d)] |= 1 << u
        rows.append(tuple(buckets))
    return DistanceLevels(g.n, tuple(rows))


# ------------------------------------------------------------------ odd girth

def _bfs_tree(g: Graph, source: int) -> tuple[list[float], list[int]]:
    dist: list[float] = [INF] * g.n
    parent = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
    return dist, parent


def shortest_odd_cycle(g: Graph) -> list[int] | None:
    """Vertices of a shortest odd cycle in cyclic order, or None if ``g`` is bipartite.

    A minimum-length odd closed walk is a cycle, so the two tree paths from the
    best root to the ends of the balanced edge meet only at the root.
    """
    best = None
    for v in range(g.n):
        dist = bfs(g, v)
        for x, y in g.edges:
            dx = dist[x]
            if dx != INF and dx == dist[y]:
                length = 2 * dx + 1
                if best is None or length < best[0]:
                    best = (length, v, x, y)
    if best is None:
        return None
    _, v, x, y = best
    _, parent = _bfs_tree(g, v)

    def path_to(t):
        out = [t]
        while out[-1] != v:
            out.append(parent[out[-1]])
        return out[::-1]

    px, py = path_to(x), path_to(y)
    return px + py[:0:-1]


def odd_girth(g: Graph) -> float:
    """Length of a shortest odd cycle; ``INF`` for bipartite graphs."""
    best: float = INF
    for v in range(g.n):
        dist = bfs(g, v)
        for x, y in g.edges:
            dx = dist[x]
            if dx == dist[y] and dx != INF and 2 * dx + 1 < best:
                best = 2 * dx + 1
    return int(best) if best != INF else INF


# --------------------------------------------------------------------- cycles

def exists_cycle_through_pair(g: Graph, u: int, v: int, length: int,
                              dm: DistanceMatrix | None = None,
                              budget: int | None = None) -> bool:
    """True iff some cycle of exactly ``length`` edges passes through both ``u`` and ``v``."""
    if u == v:
        raise ValueError("u and v must differ")
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    if dm is None:
        dm = all_pairs_distances(g)
    budget = env_budget(DEFAULT_CYCLE_BUDGET) if budget is None else budget
    du, dv = dm.d[u], dm.d[v]
    if du[v] == INF or 2 * du[v] > length:
        return False
    expansions = 0

    # Walk a simple path from u; close it with an edge back to u after length-1 steps.
    def dfs(x: int, steps: int, visited: int, seen_v: bool) -> bool:
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise BudgetExceeded("exists_cycle_through_pair", budget)
        if steps == length - 1:
            return seen_v and g.has_edge(x, u)
        remaining = length - steps
        for y in g.adj[x]:
            if visited >> y & 1:
                continue
            left = remaining - 1
            if seen_v or y == v:
                if du[y] > left:
                    continue
            elif dv[y] + dv[u] > left:
                continue
            if dfs(y, steps + 1, visited | (1 << y), seen_v or y == v):
                return True
        return False

    return dfs(u, 0, 1 << u, False)


def cycles_of_length(g: Graph, length: int) -> list[tuple[int, ...]]:
    """All cycles with exactly ``length`` edges, each listed once.

    A cycle is reported starting at its smallest vertex, in the direction whose
    second vertex is smaller than its last.
    """
    out = []
    for s in range(g.n):
        def dfs(path: list[int], visited: int):
            x = path[-1]
            if len(path) == length:
                if g.has_edge(x, s) and path[1] < path[-1]:
                    out.append(tuple(path))
                return
            for y in g.adj[x]:
                if y > s and not visited >> y & 1:
                    path.append(y)
                    dfs(path, visited | (1 << y))
                    path.pop()

        dfs([s], 1 << s)
    return out


# ---------------------------------------------------------------- isomorphism

def _distance_profile(dm: DistanceMatrix, v: int) -> tuple:
    counts: dict[float, int] = {}
    for d in dm.d[v]:
        counts[d] = counts.get(d, 0) + 1
    return tuple(sorted(counts.items()))


def find_isomorphism(g: Graph, h: Graph, budget: int | None = None) -> list[int] | None:
    """An isomorphism ``g -> h`` as a list of images, or None.

    Backtracking on vertices ordered by BFS, with candidates filtered by the
    distance profile and by exact distances to every already-placed vertex.
    """
    budget = env_budget(DEFAULT_ISO_BUDGET) if budget is None else budget
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    n = g.n
    if n == 0:
        return []
    dg, dh = all_pairs_distances(g), all_pairs_distances(h)
    prof_g = [_distance_profile(dg, v) for v in range(n)]
    prof_h = [_distance_profile(dh, v) for v in range(n)]
    if sorted(prof_g) != sorted(prof_h):
        return None
    classes: dict[tuple, int] = {}
    for a in range(n):
        classes[prof_h[a]] = classes.get(prof_h[a], 0) | (1 << a)
    # exact-distance masks of h, with INF kept as its own key
    hmask: list[dict[float, int]] = []
    for a in range(n):
        row: dict[float, int] = {}
        for b, d in enumerate(dh.d[a]):
            row[d] = row.get(d, 0) | (1 << b)
        hmask.append(row)

    order: list[int] = []
    placed = 0
    # start every component from a vertex in the rarest profile class
    rarity = {p: bin(m).count("1") for p, m in classes.items()}
    for v in sorted(range(n), key=lambda v: (rarity[prof_g[v]], v)):
        if placed >> v & 1:
            continue
        queue = deque([v])
        placed |= 1 << v
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in g.adj[x]:
                if not placed >> y & 1:
                    placed |= 1 << y
                    queue.append(y)

    image = [-1] * n
    nodes = 0

    def extend(i: int, used: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        u = order[i]
        cand = classes[prof_g[u]] & ~used
        for j in range(i):
            w = order[j]
            cand &= hmask[image[w]].get(dg.d[w][u], 0)
            if not cand:
                return False
        for a in iter_bits(cand):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded("iso_check", budget)
            image[u] = a
            if extend(i + 1, used | (1 << a)):
                return True
        image[u] = -1
        return False

    return list(image) if extend(0, 0) else None


def iso_check(g: Graph, h: Graph, budget: int | None = None) -> bool:
    return find_isomorphism(g, h, budget) is not None
