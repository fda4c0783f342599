"""Command-line interface.  Exit codes: 0 for YES / success, 1 for NO, 2 for errors and exhausted budgets."""
from __future__ import annotations

import argparse
import sys

from . import bound, colouring, sp
from .errors import GirthBoundError
from .families import FamilySpec, generate
from .graph import INF, format_graph, odd_girth, read_graph, read_text, write_text
from .reproduce import reproduce
from .triples import enumerate_k_good

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _cmd_gen(a) -> int:
    g = generate(FamilySpec(a.family, tuple(a.params)))
    write_text(a.output, format_graph(g))
    return EXIT_YES


def _cmd_oddgirth(a) -> int:
    og = odd_girth(read_graph(a.graph))
    print("INF" if og == INF else int(og))
    return EXIT_YES


def _cmd_issp(a) -> int:
    ok = sp.is_k4_minor_free(read_graph(a.graph))
    print("yes" if ok else "no")
    return EXIT_YES if ok else EXIT_NO


def _cmd_triples(a) -> int:
    for t in enumerate_k_good(a.k):
        print(t.p, t.q, t.r)
    return EXIT_YES


def _cmd_check(a) -> int:
    b = read_graph(a.graph)
    verdict = bound.check_bound(b, a.k)
    if verdict.is_yes:
        print(f"YES {len(verdict.certificate)} weighted edges, {len(verdict.trace)} deletions")
        if a.cert:
            write_text(a.cert, bound.format_certificate(verdict.certificate))
        return EXIT_YES
    print(bound.format_no(verdict), end="")
    if a.no_witness:
        if verdict.final_reason != bound.ODD_GIRTH_MISMATCH:
            raise GirthBoundError(f"no witness for reason {verdict.final_reason}")
        if len(verdict.trace) == 0:
            raise GirthBoundError("odd-girth gate rejects b outright; no gluing witness needed")
        w = bound.no_certificate(b, a.k, verdict, vertex_cap=a.cap)
        write_text(a.no_witness, format_graph(w))
    return EXIT_NO


def _cmd_verifycert(a) -> int:
    pdg = bound.parse_certificate(read_text(a.cert))
    ok = bound.verify_for_graph(read_graph(a.graph), pdg, pdg.k)
    print("valid" if ok else "invalid")
    return EXIT_YES if ok else EXIT_NO


def _cmd_hom(a) -> int:
    g, h = read_graph(a.g), read_graph(a.h)
    m = sp.hom_search(g, h, injective=a.injective, budget=a.budget)
    if m is None:
        print("NONE")
        return EXIT_NO
    print(sp.format_hom(m, h.n), end="")
    return EXIT_YES


def _cmd_maphom(a) -> int:
    g, b = read_graph(a.g), read_graph(a.b)
    pdg = bound.parse_certificate(read_text(a.cert))
    m = sp.hom_via_certificate(g, b, pdg, pdg.k)
    print(sp.format_hom(m, b.n), end="")
    return EXIT_YES


def _cmd_randsp(a) -> int:
    write_text(a.output, format_graph(sp.random_sp_instance(a.k, a.n, a.seed)))
    return EXIT_YES


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        x, y = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b but got {text!r}") from None
    return x, y


def _cmd_edgecolour(a) -> int:
    if a.mode == "pc":
        _, col = colouring.cayley_edge_labels(a.k)
    elif a.mode == "induced":
        g = read_graph(a.graph)
        m, n_target = sp.parse_hom(read_text(a.embedding))
        k = (n_target.bit_length() - 1) // 2
        if n_target != 1 << 2 * k:
            raise GirthBoundError(f"target order {n_target} is not that of a projective cube")
        col = colouring.induced_colouring(g, k, m)
    else:
        g = read_graph(a.graph)
        rot = colouring.parse_rotation(read_text(a.rotation))
        col = colouring.super_proper_search(g, rot, a.pairs, budget=a.budget)
        if col is None:
            print("UNSAT")
            return EXIT_NO
    write_text(a.output, colouring.format_colouring(col))
    return EXIT_YES


def _cmd_lint(a) -> int:
    report = bound.minimality_lint(read_graph(a.graph), a.k)
    for line in report.lines():
        print(line)
    print("clean" if report.clean else f"{len(report.violations)} violation(s)")
    return EXIT_YES if report.clean else EXIT_NO


def _cmd_reproduce(a) -> int:
    report = reproduce(a.level, jobs=a.jobs)
    for line in report.lines():
        print(line)
    return EXIT_YES if report.ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="girthbound", description="Bounds for odd-girth series-parallel graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="emit a family graph")
    s.add_argument("family")
    s.add_argument("params", nargs="*", type=int)
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(fn=_cmd_gen)

    s = sub.add_parser("oddgirth", help="print the odd-girth or INF")
    s.add_argument("graph")
    s.set_defaults(fn=_cmd_oddgirth)

    s = sub.add_parser("issp", help="exit 0 iff the graph is K4-minor-free")
    s.add_argument("graph")
    s.set_defaults(fn=_cmd_issp)

    s = sub.add_parser("triples", help="list the k-good triples")
    s.add_argument("k", type=int)
    s.set_defaults(fn=_cmd_triples)

    s = sub.add_parser("check", help="decide whether a graph bounds the class for k")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--cert", help="write the YES certificate here")
    s.add_argument("--no-witness", help="write a NO witness graph here")
    s.add_argument("--cap", type=int, default=10**4, help="vertex cap for the NO witness")
    s.set_defaults(fn=_cmd_check)

    s = sub.add_parser("verifycert", help="verify a YES certificate")
    s.add_argument("graph")
    s.add_argument("cert")
    s.set_defaults(fn=_cmd_verifycert)

    s = sub.add_parser("hom", help="search for a homomorphism G -> H")
    s.add_argument("g")
    s.add_argument("h")
    s.add_argument("--injective", action="store_true")
    s.add_argument("--budget", type=int)
    s.set_defaults(fn=_cmd_hom)

    s = sub.add_parser("maphom", help="map G to B along a YES certificate")
    s.add_argument("g")
    s.add_argument("b")
    s.add_argument("cert")
    s.set_defaults(fn=_cmd_maphom)

    s = sub.add_parser("randsp", help="random K4-minor-free instance of high odd-girth")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(fn=_cmd_randsp)

    s = sub.add_parser("edgecolour", help="edge-colourings")
    modes = s.add_subparsers(dest="mode", required=True)
    m = modes.add_parser("pc", help="Cayley colouring of PC(2k)")
    m.add_argument("--k", type=int, required=True)
    m.add_argument("-o", "--output", default="-")
    m = modes.add_parser("induced", help="colouring pulled back along an embedding into PC(2k)")
    m.add_argument("graph")
    m.add_argument("embedding")
    m.add_argument("-o", "--output", default="-")
    m = modes.add_parser("superproper", help="super proper 5-edge-colouring search")
    m.add_argument("graph")
    m.add_argument("rotation")
    m.add_argument("--pairs", nargs="*", type=_parse_pair, default=[])
    m.add_argument("--budget", type=int)
    m.add_argument("-o", "--output", default="-")
    s.set_defaults(fn=_cmd_edgecolour)

    s = sub.add_parser("lint", help="minimality lint for a candidate bound")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(fn=_cmd_lint)

    s = sub.add_parser("reproduce", help="run the verdict table")
    s.add_argument("--level", choices=("quick", "full"), default="quick")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(fn=_cmd_reproduce)
    return p


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_YES if exc.code == 0 else EXIT_ERROR
    try:
        return args.fn(args)
    except (GirthBoundError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(cli_main())
