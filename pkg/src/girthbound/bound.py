"""Certified decision procedure for "does B bound the K4-minor-free graphs of odd-girth >= 2k+1?".

The decision loop prunes the k-partial distance graph of B until every weighted
edge realizes every k-good triple containing its weight, deleting B-edges (and
recursing) when a weight-1 pair fails.  A witness ``z`` for a triple on ``xy``
must itself be joined to ``x`` and ``y`` by surviving weighted edges; see
``realized_on_edge`` in :mod:`girthbound.triples`.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable

from .errors import CapExceeded, DomainError, GraphFormatError, PreconditionViolated
from .families import gadget
from .graph import (INF, Graph, all_pairs_distances, distance_levels, exists_cycle_through_pair,
                    cycles_of_length, odd_girth)
from .triples import completions, realized_masks

YES = "YES"
NO = "NO"
ODD_GIRTH_MISMATCH = "ODD_GIRTH_MISMATCH"
EMPTY = "EMPTY"


@dataclass(frozen=True)
class PartialDistanceGraph:
    """Weighted graph on V(base); ``wedges`` holds sorted ``(u, v, weight)`` with u < v."""

    base: Graph
    k: int
    wedges: tuple[tuple[int, int, int], ...]

    def weight_map(self) -> dict[tuple[int, int], int]:
        return {(u, v): w for u, v, w in self.wedges}

    def __len__(self) -> int:
        return len(self.wedges)

    def pairs(self) -> set[tuple[int, int]]:
        return {(u, v) for u, v, _ in self.wedges}

    @classmethod
    def from_triples(cls, base: Graph, k: int, wedges: Iterable[tuple[int, int, int]]):
        norm = sorted((min(u, v), max(u, v), int(w)) for u, v, w in wedges)
        return cls(base, k, tuple(norm))


def complete_distance_graph(b: Graph, k: int) -> PartialDistanceGraph:
    """All pairs at distance 1..k, weighted by their distance in ``b``."""
    dm = all_pairs_distances(b)
    wedges = [(u, v, int(dm.d[u][v])) for u in range(b.n) for v in range(u + 1, b.n)
              if dm.d[u][v] != INF and dm.d[u][v] <= k]
    return PartialDistanceGraph(b, k, tuple(wedges))


@dataclass(frozen=True)
class TraceEvent:
    u: int
    v: int
    weight: int
    triple: tuple[int, int, int]
    round: int  # number of base-edge deletions that preceded this event

    def line(self) -> str:
        p, q, r = self.triple
        return f"del {self.u} {self.v} {self.weight} {p} {q} {r}"


@dataclass(frozen=True)
class BoundVerdict:
    answer: str
    k: int
    certificate: PartialDistanceGraph | None = None
    trace: tuple[TraceEvent, ...] = ()
    final_reason: str | None = None
    residual: Graph | None = field(default=None, compare=False)

    @property
    def is_yes(self) -> bool:
        return self.answer == YES


# ------------------------------------------------------------- realization

def _alive_sets(levels, n: int, k: int) -> list[list[int]]:
    """``alive[v][d]`` for d in 1..k: vertices at distance d from v (index 0 unused)."""
    return [[0] + [levels.at(v, d) for d in range(1, k + 1)] for v in range(n)]


def _first_failure(alive: list[list[int]], x: int, y: int, p: int, k: int):
    for triple, q, r in completions(p, k):
        if not realized_masks(alive[x], alive[y], q, r):
            return triple
    return None


@dataclass(frozen=True)
class PropertyResult:
    ok: bool
    edge: tuple[int, int] | None = None
    triple: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def all_k_good_property(b: Graph, pdg: PartialDistanceGraph, k: int) -> PropertyResult:
    """Check the all k-good triple property of ``pdg``.

    On failure the lexicographically first ``(edge, triple)`` is returned; an empty
    weighted graph fails with no edge.
    """
    if not pdg.wedges:
        return PropertyResult(False)
    alive = [[0] * (k + 1) for _ in range(b.n)]
    for u, v, w in pdg.wedges:
        if not 1 <= w <= k:
            raise PreconditionViolated(f"weight {w} of ({u},{v}) outside [1,{k}]")
        alive[u][w] |= 1 << v
        alive[v][w] |= 1 << u
    for u, v, w in pdg.wedges:
        t = _first_failure(alive, u, v, w, k)
        if t is not None:
            return PropertyResult(False, (u, v), t)
    return PropertyResult(True)


def verify_certificate(b: Graph, pdg: PartialDistanceGraph, k: int) -> bool:
    """Independent check of a YES certificate; recomputes everything from ``b``."""
    if pdg.base.n != b.n or odd_girth(b) != 2 * k + 1:
        return False
    dm = all_pairs_distances(b)
    seen = set()
    for u, v, w in pdg.wedges:
        if not (0 <= u < v < b.n) or (u, v) in seen:
            return False
        seen.add((u, v))
        if not 1 <= w <= k or dm.d[u][v] != w:
            return False
    return all_k_good_property(b, pdg, k).ok


def verify_for_graph(b: Graph, pdg: PartialDistanceGraph, k: int) -> bool:
    """Does the certificate prove that ``b`` is a bound?

    The certificate lives on its own base graph, which may have lost edges during
    the decision; any spanning supergraph of the base with the same odd-girth is
    then a bound as well.
    """
    if pdg.base.n != b.n or not set(pdg.base.edges) <= set(b.edges):
        return False
    return odd_girth(b) == 2 * k + 1 and verify_certificate(pdg.base, pdg, k)


# ------------------------------------------------------------------ decision

def _prune(b: Graph, k: int, round_no: int, trace: list[TraceEvent]):
    """One call of the decision loop on a fixed base graph.

    Returns ``("YES", wedges)`` or ``("RECURSE", (x, y))``.  Scanning always
    resumes at the smallest edge whose status may have changed, which gives the
    same first failure as restarting the full lexicographic scan.
    """
    dm = all_pairs_distances(b)
    levels = distance_levels(b, dm)
    alive = _alive_sets(levels, b.n, k)
    wedges = [(u, v, int(dm.d[u][v])) for u in range(b.n) for v in range(u + 1, b.n)
              if dm.d[u][v] != INF and dm.d[u][v] <= k]
    incident: list[list[int]] = [[] for _ in range(b.n)]
    for i, (u, v, _) in enumerate(wedges):
        incident[u].append(i)
        incident[v].append(i)
    present = [True] * len(wedges)
    queued = [True] * len(wedges)
    heap = list(range(len(wedges)))
    while heap:
        i = heapq.heappop(heap)
        if not present[i]:
            continue
        queued[i] = False
        x, y, p = wedges[i]
        t = _first_failure(alive, x, y, p, k)
        if t is None:
            continue
        trace.append(TraceEvent(x, y, p, t, round_no))
        if p == 1:
            return "RECURSE", (x, y)
        present[i] = False
        alive[x][p] &= ~(1 << y)
        alive[y][p] &= ~(1 << x)
        for j in incident[x] + incident[y]:
            if present[j] and not queued[j]:
                queued[j] = True
                heapq.heappush(heap, j)
    return YES, tuple(w for w, keep in zip(wedges, present) if keep)


def check_bound(b: Graph, k: int) -> BoundVerdict:
    if k < 1:
        raise DomainError("k must be at least 1")
    trace: list[TraceEvent] = []
    current = b
    round_no = 0
    while True:
        if odd_girth(current) != 2 * k + 1:
            return BoundVerdict(NO, k, None, tuple(trace), ODD_GIRTH_MISMATCH, current)
        status, payload = _prune(current, k, round_no, trace)
        if status == YES:
            if not payload:
                return BoundVerdict(NO, k, None, tuple(trace), EMPTY, current)
            cert = PartialDistanceGraph(current, k, payload)
            return BoundVerdict(YES, k, cert, tuple(trace), None, current)
        current = current.without_edge(*payload)
        round_no += 1


# ------------------------------------------------------- certificate text

def format_certificate(pdg: PartialDistanceGraph, comment: str | None = None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"cert {pdg.base.n} {pdg.k}")
    lines.extend(f"w {u} {v} {w}" for u, v, w in pdg.wedges)
    lines.append(f"base {pdg.base.m}")
    lines.extend(f"e {u} {v}" for u, v in pdg.base.edges)
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> PartialDistanceGraph:
    header = None
    wedges = []
    base_edges = []
    base_count = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(t) for t in parts[1:]]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad integer") from None
        tag = parts[0]
        if header is None:
            if tag != "cert" or len(nums) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'cert <n> <k>'")
            header = nums
        elif tag == "w" and len(nums) == 3 and base_count is None:
            wedges.append(tuple(nums))
        elif tag == "base" and len(nums) == 1 and base_count is None:
            base_count = nums[0]
        elif tag == "e" and len(nums) == 2 and base_count is not None:
            base_edges.append(tuple(nums))
        else:
            raise GraphFormatError(f"line {lineno}: unexpected {line!r}")
    if header is None or base_count is None:
        raise GraphFormatError("certificate needs a 'cert' header and a 'base' section")
    if base_count != len(base_edges):
        raise GraphFormatError(f"base declares {base_count} edges, found {len(base_edges)}")
    n, k = header
    base = Graph.from_edges(n, base_edges)
    for u, v, _ in wedges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"weighted edge ({u},{v}) invalid")
    return PartialDistanceGraph.from_triples(base, k, wedges)


def format_no(verdict: BoundVerdict) -> str:
    lines = [f"no {verdict.final_reason}"]
    lines.extend(ev.line() for ev in verdict.trace)
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------- NO certificate

class _WeightedBuilder:
    def __init__(self):
        self.n = 0
        self.w: dict[tuple[int, int], int] = {}

    def add(self, u: int, v: int, weight: int):
        self.w[(u, v) if u < v else (v, u)] = weight

    def edges_of_weight(self, p: int) -> list[tuple[int, int]]:
        return sorted(e for e, w in self.w.items() if w == p)

    def unit_graph(self) -> Graph:
        return Graph.from_edges(self.n, [e for e, w in self.w.items() if w == 1])


def _cycle_completion(k: int) -> _WeightedBuilder:
    """Fan 2-tree completion of C_{2k+1} from vertex 0, weighted by cycle distance."""
    c = 2 * k + 1
    out = _WeightedBuilder()
    out.n = c
    for i in range(c):
        out.add(i, (i + 1) % c, 1)
    for i in range(2, c - 1):
        out.add(0, i, min(i, c - i))
    return out


def gadget_completion(k: int, p: int, q: int, r: int) -> tuple[int, list[tuple[int, int, int]]]:
    """Weighted 2-tree completion of T_{2k+1}(p,q,r) containing the hub triangle.

    Each pair of hub-to-hub paths closes a (2k+1)-cycle through the triangle edge
    joining its hubs; that cycle is fanned out from its first hub.  Weights are
    distances in the gadget.  Returns ``(order, [(a, b, weight), ...])``.
    """
    gd = gadget(k, p, q, r)
    dm = all_pairs_distances(gd.graph)
    pairs = {(0, 1), (0, 2), (1, 2)}
    for path in gd.paths:
        a = path[0]
        for t in path[1:-1]:
            pairs.add((min(a, t), max(a, t)))
        pairs.update((min(s, t), max(s, t)) for s, t in zip(path, path[1:]))
    return gd.graph.n, sorted((a, b, int(dm.d[a][b])) for a, b in pairs)


def _merged_runs(b: Graph, k: int, trace: tuple[TraceEvent, ...]) -> list[list[TraceEvent]]:
    """Group consecutive same-round, same-weight deletions into runs.

    An event joins the current run only if its triple is already unrealized on
    its edge in the state where the run began; then a single gluing step per run
    suffices.
    """
    runs: list[list[TraceEvent]] = []
    current = b
    round_no = 0
    alive = None
    snapshot = None
    for ev in trace:
        while ev.round > round_no:
            prev = runs[-1][-1]
            current = current.without_edge(prev.u, prev.v)
            round_no += 1
            alive = None
        if alive is None:
            alive = _alive_sets(distance_levels(current), current.n, k)
            snapshot = None
        p, (q, r) = ev.weight, _other_two(ev.triple, ev.weight)
        joinable = (runs and snapshot is not None and runs[-1][-1].round == ev.round
                    and runs[-1][-1].weight == ev.weight and ev.weight >= 2
                    and not realized_masks(snapshot[ev.u], snapshot[ev.v], q, r))
        if joinable:
            runs[-1].append(ev)
        else:
            snapshot = [row[:] for row in alive]
            runs.append([ev])
        if p >= 2:
            alive[ev.u][p] &= ~(1 << ev.v)
            alive[ev.v][p] &= ~(1 << ev.u)
    return runs


def _other_two(triple: tuple[int, int, int], p: int) -> tuple[int, int]:
    rest = list(triple)
    rest.remove(p)
    return rest[0], rest[1]


def no_certificate(b: Graph, k: int, verdict: BoundVerdict, vertex_cap: int = 10**4,
                   merge_runs: bool | None = None) -> Graph:
    """Build a K4-minor-free graph of odd-girth >= 2k+1 with no homomorphism to ``b``.

    Starting from a weighted 2-tree completion of C_{2k+1}, the deletion trace is
    replayed backwards; for a deletion of weight ``p`` with failing triple
    ``{p,q,r}``, two copies of the weighted gadget completion are glued on every
    weight-``p`` edge (one per orientation).  The unit-weight subgraph is returned.
    With ``merge_runs`` consecutive compatible deletions share one gluing step;
    the default ``None`` glues per deletion and merges only if that exceeds the cap.
    """
    if merge_runs is None:
        try:
            return no_certificate(b, k, verdict, vertex_cap, merge_runs=False)
        except CapExceeded:
            return no_certificate(b, k, verdict, vertex_cap, merge_runs=True)
    if verdict.answer != NO:
        raise PreconditionViolated("no_certificate needs a NO verdict")
    if verdict.final_reason != ODD_GIRTH_MISMATCH:
        raise PreconditionViolated("trace must end with the odd-girth gate")
    if merge_runs:
        runs = _merged_runs(b, k, verdict.trace)
    else:
        runs = [[ev] for ev in verdict.trace]
    g = _cycle_completion(k)
    pieces: dict[tuple[int, int, int], tuple[int, list]] = {}
    for run in reversed(runs):
        p = run[0].weight
        triples = list(dict.fromkeys(ev.triple for ev in run))
        targets = g.edges_of_weight(p)
        for t in triples:
            q, r = _other_two(t, p)
            if (p, q, r) not in pieces:
                pieces[(p, q, r)] = gadget_completion(k, p, q, r)
            size, wedges = pieces[(p, q, r)]
            for x, y in targets:
                for hu, hv in ((x, y), (y, x)):
                    if g.n + size - 2 > vertex_cap:
                        raise CapExceeded("no_certificate", vertex_cap)
                    ids = {0: hu, 1: hv}
                    for old in range(2, size):
                        ids[old] = g.n + old - 2
                    g.n += size - 2
                    for a, bb, w in wedges:
                        if (a, bb) != (0, 1):
                            g.add(ids[a], ids[bb], w)
    return g.unit_graph()


# --------------------------------------------------------------------- lints

@dataclass(frozen=True)
class Violation:
    rule: str
    vertices: tuple[int, ...]
    detail: str = ""


@dataclass(frozen=True)
class LintReport:
    violations: tuple[Violation, ...] = ()

    @property
    def clean(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        return [f"{v.rule}: {' '.join(map(str, v.vertices))}" + (f" ({v.detail})" if v.detail else "")
                for v in self.violations]


def minimality_lint(b: Graph, k: int) -> LintReport:
    """Necessary conditions on degree-2 vertices of a minimal bound (k >= 2).

    Reported violations certify non-minimality, never non-boundedness.
    """
    if k < 2:
        raise DomainError("minimality lint needs k >= 2")
    deg2 = [v for v in range(b.n) if b.degree(v) == 2]
    is2 = set(deg2)
    out: list[Violation] = []
    dm = all_pairs_distances(b)
    for v in deg2:
        if not exists_cycle_through_pair(b, v, b.adj[v][0], 6, dm=dm):
            out.append(Violation("lonely-deg2", (v,), "degree-2 vertex on no 6-cycle"))
    for u, v in b.edges:
        if u in is2 and v in is2:
            out.append(Violation("adjacent-deg2", (u, v), "adjacent degree-2 vertices"))
    if deg2:
        for cyc in cycles_of_length(b, 6):
            pos = [i for i, v in enumerate(cyc) if v in is2]
            if len(pos) > 2:
                out.append(Violation("crowded-6-cycle", cyc, f"{len(pos)} degree-2 vertices on a 6-cycle"))
            elif len(pos) == 2:
                gap = pos[1] - pos[0]
                a, c = cyc[pos[0]], cyc[pos[1]]
                if min(gap, 6 - gap) != 3 or dm.d[a][c] != 3:
                    out.append(Violation("crowded-6-cycle", cyc, f"degree-2 vertices {a},{c} not at distance 3"))
    return LintReport(tuple(out))
