"""Series-parallel graphs: recognition, 2-tree completion, random instances and homomorphisms."""
from __future__ import annotations

import heapq
import random
import sys
import threading
from dataclasses import dataclass
from typing import Sequence

from .errors import (BudgetExceeded, Disconnected, DomainError, GraphFormatError, NotPartial2Tree,
                     PreconditionViolated)
from .graph import INF, Graph, all_pairs_distances, env_budget, iter_bits, odd_girth, shortest_odd_cycle

DEFAULT_HOM_BUDGET = 10**8


# ---------------------------------------------------------------- reduction

def sp_reduction(g: Graph) -> list[tuple[int, str, tuple[int, ...]]] | None:
    """Series-parallel reduction sequence, or None if some vertex survives.

    Repeatedly removes the smallest vertex of degree <= 2: isolated vertices and
    leaves are deleted, degree-2 vertices are suppressed (their neighbours joined,
    parallel edges merged).  Each step is recorded as ``(vertex, kind, neighbours)``.
    """
    adj = [set(a) for a in g.adj]
    alive = [True] * g.n
    heap = [v for v in range(g.n) if len(adj[v]) <= 2]
    heapq.heapify(heap)
    ops = []
    removed = 0
    while heap:
        v = heapq.heappop(heap)
        if not alive[v] or len(adj[v]) > 2:
            continue
        nb = tuple(sorted(adj[v]))
        alive[v] = False
        removed += 1
        for a in nb:
            adj[a].discard(v)
        if len(nb) == 0:
            ops.append((v, "isolated", nb))
        elif len(nb) == 1:
            ops.append((v, "leaf", nb))
        else:
            a, b = nb
            ops.append((v, "series", nb))
            adj[a].add(b)
            adj[b].add(a)
        adj[v] = set()
        for a in nb:
            if len(adj[a]) <= 2:
                heapq.heappush(heap, a)
    return ops if removed == g.n else None


def is_k4_minor_free(g: Graph) -> bool:
    return sp_reduction(g) is not None


@dataclass(frozen=True)
class TwoTreeDecomposition:
    base_edge: tuple[int, int]
    order: tuple[tuple[int, int, int], ...]
    fill_edges: tuple[tuple[int, int], ...]

    def completion_edges(self) -> set[tuple[int, int]]:
        """Replay the order from the base edge; raises ValueError if it is not a 2-tree order."""
        a, b = self.base_edge
        edges = {(min(a, b), max(a, b))}
        placed = {a, b}
        for v, x, y in self.order:
            if v in placed or x not in placed or y not in placed:
                raise ValueError(f"bad 2-tree step {(v, x, y)}")
            if (min(x, y), max(x, y)) not in edges:
                raise ValueError(f"parents {x},{y} of {v} are not adjacent")
            edges.add((min(v, x), max(v, x)))
            edges.add((min(v, y), max(v, y)))
            placed.add(v)
        return edges

    def vertex_order(self) -> list[int]:
        return [self.base_edge[0], self.base_edge[1]] + [v for v, _, _ in self.order]


def two_tree_completion(g: Graph) -> TwoTreeDecomposition:
    """A 2-tree on V(g) containing every edge of ``g``, from the reversed reduction sequence."""
    if g.n < 2:
        raise DomainError("two_tree_completion needs at least two vertices")
    if not g.is_connected():
        raise Disconnected("two_tree_completion needs a connected graph")
    ops = sp_reduction(g)
    if ops is None:
        raise NotPartial2Tree("graph has a K4 minor")
    rev = ops[::-1]
    root, (second, kind, nb) = rev[0][0], rev[1]
    assert kind == "leaf" and nb == (root,)
    base = (root, second)
    nbrs: dict[int, list[int]] = {root: [second], second: [root]}
    edges = {(min(base), max(base))}
    order = []
    for v, kind, nb in rev[2:]:
        if kind == "series":
            x, y = nb
        elif kind == "leaf":
            x = nb[0]
            y = min(nbrs[x])
        else:
            raise AssertionError("isolated vertex inside a connected reduction")
        order.append((v, x, y))
        nbrs[v] = [x, y]
        nbrs[x].append(v)
        nbrs[y].append(v)
        edges.add((min(v, x), max(v, x)))
        edges.add((min(v, y), max(v, y)))
    fill = tuple(sorted(edges - set(g.edges)))
    return TwoTreeDecomposition(base, tuple(order), fill)


# ------------------------------------------------------------ random graphs

def random_sp_instance(k: int, target_n: int, seed: int) -> Graph:
    """Connected K4-minor-free graph of odd-girth >= 2k+1 and order >= target_n."""
    if k < 1 or target_n < 2 * k + 1:
        raise DomainError("random_sp_instance needs k >= 1 and target_n >= 2k+1")
    rng = random.Random(seed)
    m = max(3, (target_n + 1) // 2)
    tree_edges = [(0, 1)]
    kept = {(0, 1)}
    for v in range(2, m):
        a, b = tree_edges[rng.randrange(len(tree_edges))]
        tree_edges += [(a, v), (b, v)]
        first, second = ((a, v), (b, v)) if rng.random() < 0.5 else ((b, v), (a, v))
        kept.add((min(first), max(first)))
        if rng.random() < 0.5:
            kept.add((min(second), max(second)))
    n = m
    edges = set(kept)

    def subdivide(e):
        nonlocal n
        u, v = e
        edges.discard(e)
        edges.update({(u, n), (n, n + 1), (v, n + 1)} if u < v else {(v, n), (n, n + 1), (u, n + 1)})
        n += 2

    while True:
        g = Graph.from_edges(n, [(min(e), max(e)) for e in edges])
        cyc = shortest_odd_cycle(g)
        if cyc is None or len(cyc) >= 2 * k + 1:
            break
        i = rng.randrange(len(cyc))
        a, b = cyc[i], cyc[(i + 1) % len(cyc)]
        subdivide((min(a, b), max(a, b)))
    while n < target_n:
        subdivide(sorted(edges)[rng.randrange(len(edges))])
    return Graph.from_edges(n, [(min(e), max(e)) for e in edges])


# ------------------------------------------------------------ homomorphisms

def is_hom(g: Graph, h: Graph, m: Sequence[int]) -> bool:
    if len(m) != g.n:
        raise PreconditionViolated(f"map has length {len(m)}, graph has {g.n} vertices")
    if any(not 0 <= a < h.n for a in m):
        return False
    return all(h.has_edge(m[u], m[v]) for u, v in g.edges)


def _run_deep(fn):
    """Run ``fn`` on a thread with a large stack; deep searches recurse once per vertex."""
    result = {}

    def target():
        try:
            result["value"] = fn()
        except BaseException as exc:  # re-raised in the caller
            result["error"] = exc

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 200_000))
    old_size = threading.stack_size(512 * 1024 * 1024)
    try:
        t = threading.Thread(target=target)
        t.start()
        t.join()
    finally:
        threading.stack_size(old_size)
        sys.setrecursionlimit(old_limit)
    if "error" in result:
        raise result["error"]
    return result["value"]


class _Search:
    """Forward checking with conflict-directed backjumping.

    Domains are bit-sets over V(h).  Assigning ``u -> a`` restricts every
    unassigned ``v`` to the ``d_g(u, v)``-ball around ``a`` (the neighbourhood when
    adjacent); in injective mode ``a`` is also removed everywhere.  Each pruning
    records its cause so that a failure jumps straight back to the deepest
    assignment involved in it.  The next vertex is the one with the smallest
    domain, ties to the smallest id.
    """

    def __init__(self, g: Graph, h: Graph, vertices: list[int], injective: bool, budget: int):
        self.g, self.h, self.injective, self.budget = g, h, injective, budget
        self.nodes = 0
        dh = all_pairs_distances(h)
        self.diam = int(max((d for row in dh.d for d in row if d != INF), default=0))
        self.full = (1 << h.n) - 1
        # ball[a][d] = vertices within distance d of a
        self.ball = []
        for a in range(h.n):
            row, acc = [], 0
            for d in range(self.diam + 1):
                acc |= sum(1 << b for b in range(h.n) if dh.d[a][b] == d)
                row.append(acc)
            self.ball.append(row)
        # partners whose distance filter is not vacuous
        depth = g.n if injective else max(1, self.diam - 1)
        self.constraints = {u: _bounded_bfs(g, u, depth) for u in vertices}
        self.vertices = vertices
        self.dom = {v: self.full for v in vertices}
        self.image: dict[int, int] = {}
        self.cause: dict[int, set[int]] = {v: set() for v in vertices}
        self.heap: list[tuple[int, int]] = []
        self.fresh = sorted(vertices, reverse=True)  # never-pruned candidates, smallest id last

    def _mask(self, a: int, d: int) -> int:
        if d == 1:
            return self.h.nbr[a]
        return self.ball[a][min(d, self.diam)]

    def _push(self, v: int) -> None:
        heapq.heappush(self.heap, (self.dom[v].bit_count(), v))

    def _select(self) -> int:
        heap, dom, image = self.heap, self.dom, self.image
        while heap:
            c, v = heap[0]
            if v in image or dom[v].bit_count() != c:
                heapq.heappop(heap)
                continue
            if c < self.full.bit_count() or not self.fresh:
                return v
            break
        while self.fresh and self.fresh[-1] in image:
            self.fresh.pop()
        if self.fresh:
            return self.fresh[-1]
        return heap[0][1]

    def solve(self):
        if self.h.n == 0:
            return None if self.vertices else {}
        out = self._label()
        return dict(self.image) if out is True else None

    def _label(self):
        if len(self.image) == len(self.vertices):
            return True
        u = self._select()
        conflict: set[int] = set()
        for a in iter_bits(self.dom[u]):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded("hom_search", self.budget)
            self.image[u] = a
            trail = []
            wiped = None
            for v, d in self.constraints[u]:
                if v in self.image:
                    continue
                old = self.dom[v]
                new = old & self._mask(a, d)
                if self.injective:
                    new &= ~(1 << a)
                if new != old:
                    trail.append((v, old))
                    self.dom[v] = new
                    self.cause[v].add(u)
                    self._push(v)
                    if not new:
                        wiped = v
                        break
            if wiped is not None:
                conflict |= self.cause[wiped]
                result = None
            else:
                result = self._label()
                if result is True:
                    return True
            for v, old in reversed(trail):
                self.dom[v] = old
                self.cause[v].discard(u)
                self._push(v)
            del self.image[u]
            if result is not None:
                if u not in result:
                    self._push(u)
                    return result
                conflict |= result
        conflict |= self.cause[u]
        conflict.discard(u)
        self._push(u)
        return conflict


def _bounded_bfs(g: Graph, source: int, depth: int) -> list[tuple[int, int]]:
    """``(v, d)`` for every ``v != source`` with ``d = d_g(source, v) <= depth``."""
    dist = {source: 0}
    frontier = [source]
    out = []
    for d in range(1, depth + 1):
        nxt = []
        for x in frontier:
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = d
                    nxt.append(y)
                    out.append((y, d))
        if not nxt:
            break
        frontier = nxt
    return out


def hom_search(g: Graph, h: Graph, injective: bool = False, budget: int | None = None) -> list[int] | None:
    """A homomorphism ``g -> h`` (list of images), or None when none exists.

    Raises :class:`BudgetExceeded` when the search is cut off; None is only
    returned after an exhaustive search.
    """
    budget = env_budget(DEFAULT_HOM_BUDGET) if budget is None else budget
    if injective and g.n > h.n:
        return None
    groups = [list(range(g.n))] if injective else g.components()
    image = [-1] * g.n
    spent = 0
    for comp in groups:
        if not comp:
            continue
        search = _Search(g, h, comp, injective, budget - spent)
        found = _run_deep(search.solve) if len(comp) > 500 else search.solve()
        spent += search.nodes
        if found is None:
            return None
        for v, a in found.items():
            image[v] = a
    return image


def hom_via_certificate(g: Graph, b: Graph, pdg, k: int) -> list[int]:
    """Homomorphism ``g -> b`` built along a 2-tree completion of ``g`` using a YES certificate.

    Each completion edge ``xy`` carries ``min(d_g(x, y), k)``; vertices are placed in
    2-tree order on the smallest vertex that realizes the triangle's weights.
    Components are mapped independently.
    """
    from .bound import verify_for_graph

    if not is_k4_minor_free(g):
        raise PreconditionViolated("g is not K4-minor-free")
    og = odd_girth(g)
    if og != INF and og < 2 * k + 1:
        raise PreconditionViolated(f"g has odd-girth {og} < {2 * k + 1}")
    if not verify_for_graph(b, pdg, k):
        raise PreconditionViolated("certificate does not verify against b")
    alive = [[0] * (k + 1) for _ in range(b.n)]
    weight = {}
    for u, v, w in pdg.wedges:
        alive[u][w] |= 1 << v
        alive[v][w] |= 1 << u
        weight[(u, v)] = w
    dg = all_pairs_distances(g)

    def omega(x, y):
        return int(min(dg.d[x][y], k))

    image = [-1] * g.n
    for comp in g.components():
        if len(comp) == 1:
            image[comp[0]] = pdg.wedges[0][0]
            continue
        sub = g.induced(comp)
        dec = two_tree_completion(sub)
        v0, v1 = comp[dec.base_edge[0]], comp[dec.base_edge[1]]
        w0 = omega(v0, v1)
        x, y = next((a, c) for a, c, w in pdg.wedges if w == w0)
        image[v0], image[v1] = x, y
        for lv, lx, ly in dec.order:
            v, px, py = comp[lv], comp[lx], comp[ly]
            q, r = omega(v, px), omega(v, py)
            cand = alive[image[px]][q] & alive[image[py]][r]
            if not cand:
                raise AssertionError("certificate failed to extend; the certificate check is unsound")
            image[v] = (cand & -cand).bit_length() - 1
    return image


# --------------------------------------------------------------- text format

def format_hom(m: Sequence[int], n_target: int) -> str:
    return "\n".join([f"hom {len(m)} {n_target}"] + [f"m {u} {a}" for u, a in enumerate(m)]) + "\n"


def parse_hom(text: str) -> tuple[list[int], int]:
    header = None
    m: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(t) for t in parts[1:]]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad integer") from None
        if header is None:
            if parts[0] != "hom" or len(nums) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'hom <nG> <nH>'")
            header = nums
        elif parts[0] == "m" and len(nums) == 2:
            if nums[0] in m:
                raise GraphFormatError(f"line {lineno}: vertex {nums[0]} mapped twice")
            m[nums[0]] = nums[1]
        else:
            raise GraphFormatError(f"line {lineno}: unexpected {line!r}")
    if header is None:
        raise GraphFormatError("missing 'hom' header")
    n_g, n_h = header
    if sorted(m) != list(range(n_g)):
        raise GraphFormatError("mapping does not cover every vertex exactly once")
    if any(not 0 <= a < n_h for a in m.values()):
        raise GraphFormatError(f"image outside 0..{n_h - 1}")
    return [m[u] for u in range(n_g)], n_h
