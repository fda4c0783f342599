"""Verdict table runner behind ``girthbound reproduce``."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import families as fam
from .bound import NO, YES, check_bound
from .graph import Graph

QUICK_CASE_SECONDS = 60.0


@dataclass(frozen=True)
class Case:
    name: str
    build: Callable[[], Graph]
    k: int
    expected: str
    pc_order: int = 0  # k of a projective cube case, 0 otherwise


@dataclass(frozen=True)
class Row:
    name: str
    expected: str
    observed: str
    seconds: float

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


@dataclass
class RunReport:
    rows: list[Row] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def lines(self) -> list[str]:
        width = max((len(r.name) for r in self.rows), default=4)
        out = [f"{'case':<{width}}  expected  observed  seconds  result"]
        for r in self.rows:
            out.append(f"{r.name:<{width}}  {r.expected:<8}  {r.observed:<8}  {r.seconds:7.2f}  "
                       f"{'pass' if r.ok else 'FAIL'}")
        out += [f"skipped {name}" for name in self.skipped]
        out.append(f"overall {'PASS' if self.ok else 'FAIL'} ({sum(r.ok for r in self.rows)}/{len(self.rows)})")
        return out


def _petersen_minus_vertex() -> Graph:
    return fam.petersen().without_vertex(0)


def _c8pp_minus(i: int) -> Callable[[], Graph]:
    def build() -> Graph:
        g = fam.c8pp()
        return g.without_edge(*g.edges[i])
    return build


def _fixed(fn: Callable, *args: int) -> Callable[[], Graph]:
    def build() -> Graph:
        return fn(*args)
    return build


def verdict_cases() -> list[Case]:
    cases = [
        Case("c8pp@2", fam.c8pp, 2, YES),
        Case("x15@3", fam.x15, 3, YES),
        Case("x16@3", fam.x16, 3, YES),
        Case("petersen@2", fam.petersen, 2, YES),
        Case("grotzsch@2", fam.grotzsch, 2, YES),
        Case("wagner@2", fam.wagner, 2, YES),
        Case("clebsch@2", fam.clebsch, 2, YES),
        Case("coxeter@3", fam.coxeter, 3, YES),
    ]
    cases += [Case(f"pc({2 * k})@{k}", _fixed(fam.projective_cube, k), k, YES, pc_order=k) for k in range(1, 5)]
    cases += [Case(f"kneser({2 * k + 1},{k})@{k}", _fixed(fam.kneser, 2 * k + 1, k), k, YES) for k in range(1, 6)]
    cases += [Case(f"at({2 * k})@{k}", _fixed(fam.augmented_toroidal, k), k, YES) for k in range(1, 9)]
    cases += [Case(f"mycielski({k})@{k}", _fixed(fam.mycielski_level, k), k, YES) for k in range(1, 11)]
    cases += [Case(f"cycle({2 * k + 1})@{k}", _fixed(fam.cycle, 2 * k + 1), k, NO) for k in (2, 3, 4)]
    cases += [Case("cycle(9)@2", _fixed(fam.cycle, 9), 2, NO),
              Case("petersen-v@2", _petersen_minus_vertex, 2, NO)]
    cases += [Case(f"c8pp-e{i}@2", _c8pp_minus(i), 2, NO) for i in range(10)]
    return cases


def run_case(case: Case) -> Row:
    t = time.perf_counter()
    verdict = check_bound(case.build(), case.k)
    return Row(case.name, case.expected, verdict.answer, time.perf_counter() - t)


def _run_indexed(args: tuple[int, str]) -> Row:
    i, level = args
    return run_case(_selected(level)[0][i])


def _selected(level: str) -> tuple[list[Case], list[str]]:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    chosen, skipped = [], []
    for c in verdict_cases():
        if level == "quick" and c.pc_order >= 5:
            skipped.append(c.name)
        else:
            chosen.append(c)
    return chosen, skipped


def reproduce(level: str = "quick", jobs: int = 1) -> RunReport:
    """Run the table; rows always come back in table order.

    In quick mode a case slower than the per-case limit counts as a failure.
    """
    cases, skipped = _selected(level)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_run_indexed, [(i, level) for i in range(len(cases))]))
    else:
        rows = [run_case(c) for c in cases]
    if level == "quick":
        rows = [r if r.seconds <= QUICK_CASE_SECONDS else Row(r.name, r.expected, "TIMEOUT", r.seconds)
                for r in rows]
    return RunReport(rows, skipped)
