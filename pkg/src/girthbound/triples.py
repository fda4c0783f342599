"""k-good triples and their realization on weighted edges."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .graph import DistanceLevels


@dataclass(frozen=True, order=True)
class GoodTriple:
    p: int
    q: int
    r: int
    k: int

    def __post_init__(self):
        if not (1 <= self.p <= self.q <= self.r <= self.k):
            raise DomainError(f"triple ({self.p},{self.q},{self.r}) not sorted within [1,{self.k}]")

    def as_tuple(self) -> tuple[int, int, int]:
        return self.p, self.q, self.r

    def __str__(self) -> str:
        return f"{{{self.p},{self.q},{self.r}}}"


def is_k_good(p: int, q: int, r: int, k: int) -> bool:
    for t in (p, q, r):
        if not 1 <= t <= k:
            raise DomainError(f"{t} is outside [1, {k}]")
    s = p + q + r
    if s % 2:
        return s >= 2 * k + 1
    return 2 * max(p, q, r) <= s


@lru_cache(maxsize=None)
def _good(k: int) -> tuple[tuple[int, int, int], ...]:
    return tuple((p, q, r)
                 for p in range(1, k + 1)
                 for q in range(p, k + 1)
                 for r in range(q, k + 1)
                 if is_k_good(p, q, r, k))


def enumerate_k_good(k: int) -> list[GoodTriple]:
    if k < 1:
        raise DomainError("k must be at least 1")
    return [GoodTriple(p, q, r, k) for p, q, r in _good(k)]


@lru_cache(maxsize=None)
def completions(p: int, k: int) -> tuple[tuple[tuple[int, int, int], int, int], ...]:
    """For edge weight ``p``: each k-good triple containing ``p`` with its remaining pair ``(q, r)``, q <= r.

    Triples come in lexicographic order, so scanning this tuple visits them in the
    canonical order used for traces.
    """
    out = []
    for t in _good(k):
        if p in t:
            rest = list(t)
            rest.remove(p)
            out.append((t, rest[0], rest[1]))
    return tuple(out)


def realized_masks(ax: tuple[int, ...], ay: tuple[int, ...], q: int, r: int) -> bool:
    """Realization test on precomputed per-distance bit-sets of the two endpoints.

    ``ax[d]`` is the set of admissible witnesses at distance ``d`` from ``x``.
    """
    if not ax[q] & ay[r]:
        return False
    return q == r or bool(ax[r] & ay[q])


def realized_on_edge(levels: DistanceLevels, x: int, y: int, q: int, r: int,
                     allowed: tuple[int, ...] | None = None) -> bool:
    """Do witnesses ``z1`` (at q from x, r from y) and ``z2`` (at r from x, q from y) exist?

    With ``allowed`` given, ``allowed[v]`` is the bit-set of vertices joined to ``v``
    in the weighted graph, and witnesses must be joined to both ``x`` and ``y``.
    """
    if q < 1 or r < 1:
        raise DomainError("q and r must be positive")
    mx, my = allowed[x] if allowed else -1, allowed[y] if allowed else -1
    lx_q, lx_r = levels.at(x, q) & mx, levels.at(x, r) & mx
    ly_q, ly_r = levels.at(y, q) & my, levels.at(y, r) & my
    if not lx_q & ly_r:
        return False
    return q == r or bool(lx_r & ly_q)
