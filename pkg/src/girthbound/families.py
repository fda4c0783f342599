"""Deterministic generators for the graph families used throughout the package.

Vertex numbering is fixed so that emitted graphs and certificates are byte-stable:

* cubes: vertex id is the bit-vector read as an integer (bit ``i`` is coordinate ``e_{i+1}``);
* Kneser graphs: ``k``-subsets in colex order, i.e. increasing bitmask value;
* grids and toroidal graphs: row-major, ``(i, j) -> i * width + j``;
* named graphs: the figure label order documented on each constructor.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .errors import DomainError
from .graph import Graph

DEFAULT_VERTEX_CAP = 2**20


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


# ----------------------------------------------------------- basic families

def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    _require(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def hypercube(d: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    _require(d >= 1, "hypercube needs d >= 1")
    _require(2**d <= cap, f"hypercube({d}) exceeds the vertex cap {cap}")
    return Graph.from_edges(2**d, [(x, x ^ (1 << i)) for x in range(2**d) for i in range(d) if not x >> i & 1])


def toroidal_grid(a: int, b: int) -> Graph:
    """Cartesian product of cycles C_a and C_b, row-major ids."""
    _require(a >= 3 and b >= 3, "toroidal grid needs both dimensions >= 3")
    edges = []
    for i in range(a):
        for j in range(b):
            v = i * b + j
            edges.append((v, i * b + (j + 1) % b))
            edges.append((v, ((i + 1) % a) * b + j))
    return Graph.from_edges(a * b, edges)


# ---------------------------------------------------------- projective cubes

def projective_cube(k: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """PC(2k): the 2k-cube plus an edge between every pair of antipodal vertices.

    Vertex ``x`` is adjacent to ``x ^ (1 << i)`` for ``i < 2k`` and to ``x ^ J`` with
    ``J`` the all-ones vector, so the graph is (2k+1)-regular of odd-girth 2k+1.
    """
    _require(k >= 1, "projective_cube needs k >= 1")
    d = 2 * k
    _require(2**d <= cap, f"projective_cube({k}) has 2^{d} vertices, above the cap {cap}")
    full = (1 << d) - 1
    gens = [1 << i for i in range(d)] + [full]
    edges = [(x, x ^ s) for x in range(2**d) for s in gens if x < x ^ s]
    return Graph.from_edges(2**d, edges)


def pc_distance(x: int, y: int, k: int) -> int:
    w = bin(x ^ y).count("1")
    return min(w, 2 * k + 1 - w)


# ------------------------------------------------------------------- Kneser

def kneser_subsets(n: int, k: int) -> list[int]:
    """The ``k``-subsets of ``{0..n-1}`` as bitmasks in colex order."""
    return sorted(sum(1 << i for i in c) for c in combinations(range(n), k))


def kneser(n: int, k: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    _require(k >= 1 and n >= 2 * k, "kneser needs n >= 2k >= 2")
    _require(math.comb(n, k) <= cap, f"kneser({n},{k}) exceeds the vertex cap {cap}")
    subsets = kneser_subsets(n, k)
    edges = [(i, j) for i, j in combinations(range(len(subsets)), 2) if not subsets[i] & subsets[j]]
    return Graph.from_edges(len(subsets), edges)


# ---------------------------------------------------------- circular cliques

def circular_clique(p: int, q: int) -> Graph:
    """C_{p,q}: ``i ~ j`` iff ``q <= |i - j| <= p - q``."""
    _require(q >= 1 and p > 2 * q, "circular_clique needs p > 2q >= 2")
    edges = [(i, j) for i, j in combinations(range(p), 2) if q <= j - i <= p - q]
    return Graph.from_edges(p, edges)


# ------------------------------------------------- augmented toroidal grids

def at_index(i: int, j: int, k: int) -> int:
    return i * 2 * k + j


def at_antipode(i: int, j: int, k: int) -> tuple[int, int]:
    return (i + k) % (2 * k), (j + k) % (2 * k)


def augmented_toroidal(k: int) -> Graph:
    """AT(2k, 2k): the 2k x 2k toroidal grid plus each vertex joined to its antipode.

    Parallel edges produced when two rules coincide (only at k = 1) are merged.
    """
    _require(k >= 1, "augmented_toroidal needs k >= 1")
    s = 2 * k
    edges = []
    for i in range(s):
        for j in range(s):
            v = at_index(i, j, k)
            edges.append((v, at_index(i, (j + 1) % s, k)))
            edges.append((v, at_index((i + 1) % s, j, k)))
            edges.append((v, at_index(*at_antipode(i, j, k), k)))
    edges = [e for e in edges if e[0] != e[1]]
    return Graph.from_edges(s * s, edges, merge=True)


def torus_distance(u: tuple[int, int], v: tuple[int, int], k: int) -> int:
    s = 2 * k
    di, dj = abs(u[0] - v[0]) % s, abs(u[1] - v[1]) % s
    return min(di, s - di) + min(dj, s - dj)


def at_distance(u: tuple[int, int], v: tuple[int, int], k: int) -> int:
    dt = torus_distance(u, v, k)
    return min(dt, 2 * k + 1 - dt)


# ------------------------------------------------------ Mycielski levels

def mycielski_index(level: int, j: int, k: int) -> int:
    """Id of ``u^level_j`` (levels counted from 1); the apex is ``k * (2k+1)``."""
    return (level - 1) * (2 * k + 1) + j


def mycielski_level(k: int) -> Graph:
    """Generalised level-k Mycielski graph of C_{2k+1}; order 2k^2 + k + 1."""
    _require(k >= 1, "mycielski_level needs k >= 1")
    c = 2 * k + 1
    edges = [(mycielski_index(1, j, k), mycielski_index(1, (j + 1) % c, k)) for j in range(c)]
    for lvl in range(2, k + 1):
        for j in range(c):
            u = mycielski_index(lvl, j, k)
            edges.append((u, mycielski_index(lvl - 1, (j - 1) % c, k)))
            edges.append((u, mycielski_index(lvl - 1, (j + 1) % c, k)))
    apex = k * c
    edges.extend((apex, mycielski_index(k, j, k)) for j in range(c))
    return Graph.from_edges(apex + 1, edges, merge=True)


# ------------------------------------------------------------------ gadgets

@dataclass(frozen=True)
class Gadget:
    """T_{2k+1}(p, q, r) with hubs ``u = 0``, ``v = 1``, ``w = 2``.

    ``paths`` lists the six hub-to-hub paths as vertex sequences, in the order
    u-v (length p), u-v (2k+1-p), u-w (q), u-w (2k+1-q), v-w (r), v-w (2k+1-r).
    """

    k: int
    p: int
    q: int
    r: int
    graph: Graph
    paths: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def hubs(self) -> tuple[int, int, int]:
        return 0, 1, 2


def gadget(k: int, p: int, q: int, r: int) -> Gadget:
    _require(k >= 1 and all(1 <= t <= k for t in (p, q, r)), "gadget needs 1 <= p, q, r <= k")
    nxt = 3
    edges = []
    paths = []
    for a, b, length in ((0, 1, p), (0, 2, q), (1, 2, r)):
        for ell in (length, 2 * k + 1 - length):
            seq = [a] + list(range(nxt, nxt + ell - 1)) + [b]
            nxt += ell - 1
            edges.extend(zip(seq, seq[1:]))
            paths.append(tuple(seq))
    return Gadget(k, p, q, r, Graph.from_edges(nxt, edges), tuple(paths))


# ------------------------------------------------------------- named graphs

def c8pp() -> Graph:
    """C_8^{++}: ids 0..7 are v1..v8 in cyclic order, chords v1v5 and v3v7."""
    return Graph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)] + [(0, 4), (2, 6)])


def x15() -> Graph:
    """X_15: ids 0..9 are the 10-cycle v0..v9, ids 10..14 are x0..x4 with x_i ~ v_i, v_{i+5}."""
    edges = [(i, (i + 1) % 10) for i in range(10)]
    edges += [(10 + i, i) for i in range(5)] + [(10 + i, i + 5) for i in range(5)]
    return Graph.from_edges(15, edges)


X16_LABELS = ("a1", "a2", "b1", "b2", "b3", "b4", "b5", "b6",
              "c1", "c2", "c3", "c4", "c5", "c6", "d1", "d2")

_X16_CHAINS = (
    "b5 a1 b1 b2 a2 b6",
    "a1 b3 b4 a2",
    "b2 c1 d1 c5 b6",
    "d1 c3 b3",
    "b4 c4 c3",
    "b1 c2 c1",
    "c2 d2 c4",
    "c5 b5 c6",
    "d2 c6 b6",
)


def x16() -> Graph:
    """The 16-vertex cubic bound of odd-girth 7, in the label order of ``X16_LABELS``."""
    idx = {name: i for i, name in enumerate(X16_LABELS)}
    edges = []
    for chain in _X16_CHAINS:
        seq = [idx[t] for t in chain.split()]
        edges.extend(zip(seq, seq[1:]))
    return Graph.from_edges(16, edges)


def wagner() -> Graph:
    """Moebius ladder on 8 vertices: the 8-cycle plus its four long diagonals."""
    return Graph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram on 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def grotzsch() -> Graph:
    """Mycielskian of C5: apex 0, shadows 1..5, cycle 6..10.

    Shadow ``1+i`` is joined to the cycle neighbours of ``6+i``.
    """
    edges = [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges.append((1 + i, 6 + (i + 1) % 5))
        edges.append((1 + i, 6 + (i - 1) % 5))
        edges.append((0, 1 + i))
    return Graph.from_edges(11, edges)


def coxeter() -> Graph:
    """Coxeter graph from the classical 4 x 7 description.

    ``a_i = i``, ``b_i = 7+i``, ``c_i = 14+i``, ``d_i = 21+i`` (indices mod 7) with
    ``a_i ~ a_{i+1}``, ``b_i ~ b_{i+2}``, ``c_i ~ c_{i+3}`` and ``d_i ~ a_i, b_i, c_i``.
    """
    edges = []
    for i in range(7):
        edges.append((i, (i + 1) % 7))
        edges.append((7 + i, 7 + (i + 2) % 7))
        edges.append((14 + i, 14 + (i + 3) % 7))
        edges += [(21 + i, i), (21 + i, 7 + i), (21 + i, 14 + i)]
    return Graph.from_edges(28, edges)


def clebsch() -> Graph:
    """Folded 5-cube: even-weight 5-bit vectors (increasing value), adjacent at Hamming distance 4."""
    verts = [x for x in range(32) if bin(x).count("1") % 2 == 0]
    edges = [(i, j) for i, j in combinations(range(16), 2) if bin(verts[i] ^ verts[j]).count("1") == 4]
    return Graph.from_edges(16, edges)


ICOSAHEDRON_LABELS = ("x", "y", "z", "a", "b", "c", "d", "e", "f", "g", "h", "i")

# polar coordinates (degrees, radius) of the plane drawing
ICOSAHEDRON_POSITIONS = {
    "x": (90, 5.0), "y": (210, 5.0), "z": (330, 5.0),
    "a": (90, 1.5), "b": (150, 1.5), "c": (210, 1.5),
    "d": (270, 1.5), "e": (330, 1.5), "f": (30, 1.5),
    "g": (150, 0.7), "h": (270, 0.7), "i": (30, 0.7),
}

_ICOSAHEDRON_CHAINS = (
    "x y z x",
    "a b c d e f a",
    "x b y d z f x",
    "x a g c y",
    "b g i f",
    "a i e z",
    "g h c",
    "i h e",
    "h d",
)


def icosahedron() -> Graph:
    idx = {name: i for i, name in enumerate(ICOSAHEDRON_LABELS)}
    edges = []
    for chain in _ICOSAHEDRON_CHAINS:
        seq = [idx[t] for t in chain.split()]
        edges.extend(zip(seq, seq[1:]))
    return Graph.from_edges(12, edges)


# ----------------------------------------------------------------- dispatch

@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()


# name -> (constructor, number of integer parameters)
FAMILIES = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "hypercube": (hypercube, 1),
    "projective_cube": (projective_cube, 1),
    "kneser": (kneser, 2),
    "circular_clique": (circular_clique, 2),
    "toroidal_grid": (toroidal_grid, 2),
    "augmented_toroidal": (augmented_toroidal, 1),
    "mycielski_level": (mycielski_level, 1),
    "gadget": (lambda k, p, q, r: gadget(k, p, q, r).graph, 4),
    "c8pp": (c8pp, 0),
    "x15": (x15, 0),
    "x16": (x16, 0),
    "wagner": (wagner, 0),
    "petersen": (petersen, 0),
    "grotzsch": (grotzsch, 0),
    "coxeter": (coxeter, 0),
    "clebsch": (clebsch, 0),
    "icosahedron": (icosahedron, 0),
}

ALIASES = {"pc": "projective_cube", "at": "augmented_toroidal", "mycielski": "mycielski_level",
           "circular": "circular_clique", "torus": "toroidal_grid"}


def generate(spec: FamilySpec) -> Graph:
    name = ALIASES.get(spec.name, spec.name)
    if name not in FAMILIES:
        raise DomainError(f"unknown family {spec.name!r}")
    fn, arity = FAMILIES[name]
    if len(spec.params) != arity:
        raise DomainError(f"family {name} takes {arity} integer parameter(s), got {len(spec.params)}")
    return fn(*spec.params)


def named(name: str, *params: int) -> Graph:
    return generate(FamilySpec(name, tuple(params)))
