"""Edge-colourings: Cayley labels of projective cubes, pull-backs along embeddings,
and super proper 5-edge-colourings of plane 5-regular graphs."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded, DomainError, GraphFormatError, NotEmbedding
from .families import ICOSAHEDRON_LABELS, ICOSAHEDRON_POSITIONS, icosahedron, projective_cube
from .graph import Graph, env_budget

DEFAULT_COLOUR_BUDGET = 10**7


@dataclass(frozen=True)
class EdgeColouring:
    colour: dict[tuple[int, int], int]
    c: int

    def __getitem__(self, e: tuple[int, int]) -> int:
        u, v = e
        return self.colour[(min(u, v), max(u, v))]

    def is_total(self, g: Graph) -> bool:
        return set(self.colour) == set(g.edges)

    def is_proper(self, g: Graph) -> bool:
        if not self.is_total(g) or any(not 0 <= x < self.c for x in self.colour.values()):
            return False
        for v in range(g.n):
            seen = [self[(v, u)] for u in g.adj[v]]
            if len(set(seen)) != len(seen):
                return False
        return True


@dataclass(frozen=True)
class RotationSystem:
    order: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph) -> None:
        if len(self.order) != g.n:
            raise DomainError(f"rotation lists {len(self.order)} vertices, graph has {g.n}")
        for v, rot in enumerate(self.order):
            if sorted(rot) != list(g.adj[v]):
                raise DomainError(f"rotation at {v} is not a permutation of its neighbours")

    def faces(self) -> list[tuple[int, ...]]:
        """Facial walks: from dart (u, v) continue with (v, successor of u around v)."""
        pos = [{u: i for i, u in enumerate(rot)} for rot in self.order]
        unused = {(v, u) for v, rot in enumerate(self.order) for u in rot}
        out = []
        while unused:
            start = min(unused)
            face = []
            dart = start
            while True:
                unused.discard(dart)
                u, v = dart
                face.append(u)
                rot = self.order[v]
                dart = (v, rot[(pos[v][u] + 1) % len(rot)])
                if dart == start:
                    break
            out.append(tuple(face))
        return out


def cayley_edge_labels(k: int, cap: int | None = None) -> tuple[Graph, EdgeColouring]:
    """PC(2k) with each edge coloured by its generator: bit ``i`` gets colour ``i``, J gets ``2k``."""
    g = projective_cube(k) if cap is None else projective_cube(k, cap)
    full = (1 << 2 * k) - 1
    colour = {}
    for u, v in g.edges:
        x = u ^ v
        colour[(u, v)] = 2 * k if x == full else x.bit_length() - 1
    return g, EdgeColouring(colour, 2 * k + 1)


def induced_colouring(g: Graph, k: int, embedding: Sequence[int]) -> EdgeColouring:
    """Pull the Cayley colouring of PC(2k) back along an injective homomorphism."""
    n_pc = 1 << 2 * k
    if len(embedding) != g.n or any(not 0 <= a < n_pc for a in embedding):
        raise NotEmbedding("map does not send V(g) into PC(2k)")
    if len(set(embedding)) != len(embedding):
        raise NotEmbedding("map is not injective")
    full = n_pc - 1
    colour = {}
    for u, v in g.edges:
        x = embedding[u] ^ embedding[v]
        if x == full:
            colour[(u, v)] = 2 * k
        elif x and x & (x - 1) == 0:
            colour[(u, v)] = x.bit_length() - 1
        else:
            raise NotEmbedding(f"edge {u}-{v} is not mapped to an edge")
    return EdgeColouring(colour, 2 * k + 1)


def cycle_embedding(k: int) -> list[int]:
    """Injective map of C_{4k} into PC(2k): walk e_1..e_{2k} twice.

    Antipodal cycle vertices differ by J, so they may carry extra chords.
    """
    half = [0]
    for i in range(2 * k - 1):
        half.append(half[-1] ^ (1 << i))
    full = (1 << 2 * k) - 1
    return half + [x ^ full for x in half]


def c8pp_embedding() -> list[int]:
    """C_8^{++} into PC(4); opposite cycle edges share a colour, both chords get J."""
    return cycle_embedding(2)


def x15_embedding() -> list[int]:
    """X_15 into PC(6); the 10-cycle uses e_1..e_5 twice, each x_i sits at v_i + e_6."""
    full = (1 << 6) - 1
    v = [0]
    for i in range(4):
        v.append(v[-1] ^ (1 << i))
    v += [x ^ full ^ (1 << 5) for x in v]
    return v + [v[i] ^ (1 << 5) for i in range(5)]


def cyclic_colour_order(col: EdgeColouring, cycle: Sequence[int]) -> tuple[int, ...]:
    """Colour sequence around a cycle, normalized over rotations and reversal."""
    seq = [col[(cycle[i], cycle[(i + 1) % len(cycle)])] for i in range(len(cycle))]
    cands = []
    for s in (seq, seq[::-1]):
        cands += [tuple(s[i:] + s[:i]) for i in range(len(s))]
    return min(cands)


def _clash(a: int, b: int, pairs: list[frozenset[int]]) -> bool:
    return frozenset((a, b)) in pairs


def super_proper_search(g: Graph, rot: RotationSystem, forbidden_pairs: Iterable[Iterable[int]] = (),
                        budget: int | None = None, colours: int = 5) -> EdgeColouring | None:
    """Proper ``colours``-edge-colouring avoiding forbidden pairs on rotation-consecutive edges.

    Returns None when no such colouring exists; raises BudgetExceeded when the
    search runs out of nodes first.
    """
    rot.validate(g)
    if any(g.degree(v) != colours for v in range(g.n)):
        raise DomainError(f"graph is not {colours}-regular")
    pairs = [frozenset(p) for p in forbidden_pairs]
    if any(len(p) != 2 or not p <= set(range(colours)) for p in pairs):
        raise DomainError("forbidden pairs must be two distinct colours each")
    budget = env_budget(DEFAULT_COLOUR_BUDGET) if budget is None else budget

    eid = {e: i for i, e in enumerate(g.edges)}

    def key(u, v):
        return eid[(min(u, v), max(u, v))]

    # per edge: edges sharing a vertex, and edges rotation-adjacent to it
    incident = [set() for _ in g.edges]
    cyclic = [set() for _ in g.edges]
    for v, order in enumerate(rot.order):
        ids = [key(v, u) for u in order]
        for i, e in enumerate(ids):
            incident[e].update(ids[:i] + ids[i + 1:])
            cyclic[e].add(ids[i - 1])
            cyclic[e].add(ids[(i + 1) % len(ids)])
    for e in range(len(g.edges)):
        cyclic[e].discard(e)

    assigned = [-1] * len(g.edges)
    full = (1 << colours) - 1
    nodes = 0

    def options(e: int) -> int:
        mask = full
        for f in incident[e]:
            c = assigned[f]
            if c >= 0:
                mask &= ~(1 << c)
        if pairs:
            for f in cyclic[e]:
                c = assigned[f]
                if c >= 0:
                    for p in pairs:
                        if c in p:
                            (other,) = p - {c}
                            mask &= ~(1 << other)
        return mask

    def solve(left: int) -> bool:
        nonlocal nodes
        if left == 0:
            return True
        best, best_mask, best_cnt = -1, 0, colours + 1
        for e, c in enumerate(assigned):
            if c < 0:
                m = options(e)
                cnt = m.bit_count()
                if cnt < best_cnt:
                    best, best_mask, best_cnt = e, m, cnt
                    if cnt == 0:
                        return False
        for c in range(colours):
            if best_mask >> c & 1:
                nodes += 1
                if nodes > budget:
                    raise BudgetExceeded("super_proper_search", budget)
                assigned[best] = c
                if solve(left - 1):
                    return True
        assigned[best] = -1
        return False

    if not solve(len(g.edges)):
        return None
    return EdgeColouring({e: assigned[i] for e, i in eid.items()}, colours)


def violates_super_proper(g: Graph, rot: RotationSystem, col: EdgeColouring,
                          forbidden_pairs: Iterable[Iterable[int]]) -> bool:
    pairs = [frozenset(p) for p in forbidden_pairs]
    for v, order in enumerate(rot.order):
        for i, u in enumerate(order):
            w = order[(i + 1) % len(order)]
            if _clash(col[(v, u)], col[(v, w)], pairs):
                return True
    return False


def icosahedron_rotation() -> tuple[Graph, RotationSystem]:
    """Clockwise neighbour orders read off the straight-line plane drawing."""
    g = icosahedron()
    xy = []
    for name in ICOSAHEDRON_LABELS:
        deg, rad = ICOSAHEDRON_POSITIONS[name]
        xy.append((rad * math.cos(math.radians(deg)), rad * math.sin(math.radians(deg))))
    order = []
    for v in range(g.n):
        def angle(u, v=v):
            return -math.atan2(xy[u][1] - xy[v][1], xy[u][0] - xy[v][0])
        order.append(tuple(sorted(g.adj[v], key=angle)))
    return g, RotationSystem(tuple(order))


# -------------------------------------------------------------------- text

def format_rotation(rot: RotationSystem) -> str:
    lines = [f"rot {len(rot.order)}"]
    lines += [f"v {v}: " + " ".join(map(str, r)) for v, r in enumerate(rot.order)]
    return "\n".join(lines) + "\n"


def parse_rotation(text: str) -> RotationSystem:
    rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or not rows[0].startswith("rot "):
        raise GraphFormatError("rotation file must start with 'rot <n>'")
    try:
        n = int(rows[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise GraphFormatError(f"bad header {rows[0]!r}") from exc
    order: list[tuple[int, ...] | None] = [None] * n
    for r in rows[1:]:
        head, _, tail = r.partition(":")
        parts = head.split()
        if len(parts) != 2 or parts[0] != "v" or not _:
            raise GraphFormatError(f"bad rotation line {r!r}")
        try:
            v = int(parts[1])
            nb = tuple(int(t) for t in tail.split())
        except ValueError as exc:
            raise GraphFormatError(f"bad rotation line {r!r}") from exc
        if not 0 <= v < n or order[v] is not None:
            raise GraphFormatError(f"vertex {v} out of range or repeated")
        order[v] = nb
    if any(o is None for o in order):
        raise GraphFormatError("rotation misses some vertex")
    return RotationSystem(tuple(order))


def format_colouring(col: EdgeColouring) -> str:
    lines = [f"col {col.c}"]
    lines += [f"ce {u} {v} {c}" for (u, v), c in sorted(col.colour.items())]
    return "\n".join(lines) + "\n"


def parse_colouring(text: str) -> EdgeColouring:
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or rows[0][0] != "col" or len(rows[0]) != 2:
        raise GraphFormatError("colouring must start with 'col <c>'")
    try:
        c = int(rows[0][1])
        colour = {}
        for r in rows[1:]:
            if r[0] != "ce" or len(r) != 4:
                raise GraphFormatError(f"bad colouring line {' '.join(r)!r}")
            u, v, x = map(int, r[1:])
            colour[(min(u, v), max(u, v))] = x
    except ValueError as exc:
        raise GraphFormatError("non-integer field in colouring") from exc
    return EdgeColouring(colour, c)
