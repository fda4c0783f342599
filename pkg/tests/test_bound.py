import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from girthbound.bound import (NO, ODD_GIRTH_MISMATCH, YES, PartialDistanceGraph, all_k_good_property, check_bound,
                              complete_distance_graph, format_certificate, format_no, gadget_completion,
                              minimality_lint, no_certificate, parse_certificate, verify_certificate,
                              verify_for_graph)
from girthbound.errors import CapExceeded, DomainError, GraphFormatError, PreconditionViolated
from girthbound.families import (c8pp, clebsch, coxeter, cycle, gadget, grotzsch, petersen, wagner, x15, x16)
from girthbound.graph import Graph, all_pairs_distances, odd_girth
from girthbound.sp import hom_search, is_k4_minor_free, two_tree_completion


class TestVerdicts:
    @pytest.mark.parametrize("build,k", [(c8pp, 2), (petersen, 2), (grotzsch, 2), (wagner, 2), (clebsch, 2),
                                         (x15, 3), (x16, 3), (coxeter, 3)])
    def test_yes_with_valid_certificate(self, build, k):
        b = build()
        v = check_bound(b, k)
        assert v.answer == YES and v.is_yes
        assert verify_certificate(b, v.certificate, k)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_odd_cycle_is_no(self, k):
        v = check_bound(cycle(2 * k + 1), k)
        assert v.answer == NO and v.final_reason == ODD_GIRTH_MISMATCH
        assert v.trace and v.trace[-1].weight == 1

    def test_c5_trace(self):
        v = check_bound(cycle(5), 2)
        assert [ev.line() for ev in v.trace] == ["del 0 2 2 2 2 2", "del 0 1 1 1 1 2"]
        assert format_no(v) == "no ODD_GIRTH_MISMATCH\ndel 0 2 2 2 2 2\ndel 0 1 1 1 1 2\n"

    def test_gate(self):
        v = check_bound(cycle(9), 2)
        assert v.answer == NO and v.final_reason == ODD_GIRTH_MISMATCH and v.trace == ()
        assert check_bound(cycle(6), 2).answer == NO

    def test_bad_k(self):
        with pytest.raises(DomainError):
            check_bound(cycle(5), 0)

    def test_petersen_minus_vertex_bounds(self):
        """Petersen minus a vertex still contains C8++ and so is a bound."""
        b = petersen().without_vertex(0)
        assert hom_search(c8pp(), b, injective=True) is not None
        v = check_bound(b, 2)
        assert v.answer == YES and verify_certificate(b, v.certificate, 2)

    @pytest.mark.parametrize("i", range(10))
    def test_c8pp_edge_deletion(self, i):
        g = c8pp()
        assert check_bound(g.without_edge(*g.edges[i]), 2).answer == NO


class TestCertificateShape:
    def test_c8pp_misses_two_diagonals(self):
        v = check_bound(c8pp(), 2)
        missing = {(u, w) for u in range(8) for w in range(u + 1, 8)} - v.certificate.pairs()
        assert missing == {(1, 5), (3, 7)}
        assert v.trace == ()

    def test_x15_has_no_xx_pairs(self):
        v = check_bound(x15(), 3)
        xs = set(range(10, 15))
        pairs = v.certificate.pairs()
        assert not any(u in xs and w in xs for u, w in pairs)
        assert len(pairs) == 105 - 10

    def test_x16_complete_distance_graph_works(self):
        b = x16()
        assert all_k_good_property(b, complete_distance_graph(b, 3), 3)

    def test_weights_are_distances(self):
        b = coxeter()
        dm = all_pairs_distances(b)
        cert = check_bound(b, 3).certificate
        assert all(dm[u, w] == wt for u, w, wt in cert.wedges)

    def test_deterministic(self):
        a, b = check_bound(x15(), 3), check_bound(x15(), 3)
        assert a == b
        assert format_certificate(a.certificate) == format_certificate(b.certificate)


class TestCertificateText:
    def test_round_trip(self):
        v = check_bound(c8pp(), 2)
        text = format_certificate(v.certificate, comment="c8pp")
        back = parse_certificate(text)
        assert back == v.certificate
        assert format_certificate(back) == format_certificate(v.certificate)

    @pytest.mark.parametrize("text", [
        "", "cert 3\n", "cert 3 1\nw 0 1 1\n", "cert 3 1\nbase 1\n", "cert 3 1\nw 0 0 1\nbase 0\n",
        "cert 3 1\nbase 0\nw 0 1 1\n", "cert 2 1\nw 0 x 1\nbase 0\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(GraphFormatError):
            parse_certificate(text)

    def test_tampered_certificate_rejected(self):
        b = c8pp()
        cert = check_bound(b, 2).certificate
        u, w, wt = cert.wedges[0]
        wrong = PartialDistanceGraph.from_triples(b, 2, [(u, w, 3 - wt)] + list(cert.wedges[1:]))
        assert not verify_certificate(b, wrong, 2)
        dropped = PartialDistanceGraph.from_triples(b, 2, cert.wedges[1:])
        assert not verify_certificate(b, dropped, 2)
        assert not verify_certificate(b, cert, 3)
        assert not verify_certificate(b, PartialDistanceGraph(b, 2, ()), 2)


def _supergraph_of_c8pp(rng: random.Random, extra: int) -> Graph:
    n = 8 + extra
    edges = set(c8pp().edges)
    for v in range(8, n):
        edges.add((rng.randrange(v), v))
    cand = [(u, w) for u in range(n) for w in range(u + 1, n)]
    rng.shuffle(cand)
    for e in cand:
        trial = Graph.from_edges(n, edges | {e})
        if odd_girth(trial) == 5 and rng.random() < 0.5:
            edges.add(e)
    return Graph.from_edges(n, edges)


class TestSoundness:
    def test_supergraphs_of_a_bound_are_bounds(self):
        rng = random.Random(5)
        for _ in range(25):
            b = _supergraph_of_c8pp(rng, rng.randint(0, 5))
            assert odd_girth(b) == 5
            v = check_bound(b, 2)
            assert v.answer == YES and verify_certificate(b, v.certificate, 2)

    @settings(max_examples=40)
    @given(st.integers(5, 9), st.floats(0.2, 0.6), st.integers(0, 10**6))
    def test_verdict_invariant_under_relabelling(self, n, p, seed):
        rng = random.Random(seed)
        b = random_graph(rng, n, p)
        perm = list(range(n))
        rng.shuffle(perm)
        v1, v2 = check_bound(b, 2), check_bound(b.relabel(perm), 2)
        assert v1.answer == v2.answer
        if v1.is_yes:
            assert verify_certificate(b, v1.certificate, 2)

    def test_yes_verdicts_map_small_sp_graphs(self, rng):
        """Every YES bound receives a hom from random K4-minor-free graphs of high odd-girth."""
        from girthbound.sp import hom_via_certificate, is_hom, random_sp_instance
        for b, k in ((petersen(), 2), (grotzsch(), 2), (coxeter(), 3)):
            cert = check_bound(b, k).certificate
            for seed in range(10):
                g = random_sp_instance(k, 25, seed)
                assert is_hom(g, b, hom_via_certificate(g, b, cert, k))


UNIT_DELETION_YES = Graph.from_edges(11, [(0, 2), (0, 5), (0, 7), (0, 10), (1, 2), (1, 5), (1, 8), (2, 6), (4, 5),
                                          (5, 6), (6, 9), (7, 8), (8, 9), (9, 10)])


class TestUnitDeletionThenYes:
    def test_certificate_lives_on_residual_graph(self):
        b = UNIT_DELETION_YES
        v = check_bound(b, 2)
        assert v.is_yes and any(ev.weight == 1 for ev in v.trace)
        assert v.certificate.base != b and set(v.certificate.base.edges) < set(b.edges)
        assert verify_for_graph(b, v.certificate, 2)
        assert verify_certificate(v.certificate.base, v.certificate, 2)

    def test_maps_into_original(self):
        from girthbound.sp import hom_via_certificate, is_hom, random_sp_instance
        b = UNIT_DELETION_YES
        cert = check_bound(b, 2).certificate
        for seed in range(20):
            g = random_sp_instance(2, 30, seed)
            assert is_hom(g, b, hom_via_certificate(g, b, cert, 2))

    def test_supergraph_check(self):
        cert = check_bound(c8pp(), 2).certificate
        assert verify_for_graph(wagner(), cert, 2)
        assert not verify_for_graph(cycle(8), cert, 2)
        assert not verify_for_graph(petersen(), cert, 2)


class TestNoCertificate:
    def test_c5_witness(self):
        b = cycle(5)
        v = check_bound(b, 2)
        w = no_certificate(b, 2, v)
        assert is_k4_minor_free(w) and w.is_connected()
        assert odd_girth(w) >= 5
        assert hom_search(w, b) is None

    def test_merged_and_faithful_agree_on_c5(self):
        b = cycle(5)
        v = check_bound(b, 2)
        assert no_certificate(b, 2, v, merge_runs=False) == no_certificate(b, 2, v, merge_runs=True)

    def test_cap(self):
        b = cycle(7)
        v = check_bound(b, 3)
        with pytest.raises(CapExceeded):
            no_certificate(b, 3, v, vertex_cap=20, merge_runs=False)

    def test_preconditions(self):
        b = c8pp()
        with pytest.raises(PreconditionViolated):
            no_certificate(b, 2, check_bound(b, 2))

    @pytest.mark.parametrize("k,p,q,r", [(2, 1, 1, 2), (2, 2, 2, 2), (3, 1, 2, 3), (3, 3, 3, 3)])
    def test_gadget_completion_is_weighted_two_tree(self, k, p, q, r):
        order, wedges = gadget_completion(k, p, q, r)
        g = gadget(k, p, q, r).graph
        assert order == g.n
        assert {(a, b) for a, b, w in wedges if w == 1} == set(g.edges)
        completion = Graph.from_edges(order, [(a, b) for a, b, _ in wedges])
        assert completion.m == 2 * order - 3
        assert is_k4_minor_free(completion)
        assert {(0, 1), (0, 2), (1, 2)} <= {(a, b) for a, b, _ in wedges}
        dm = all_pairs_distances(g)
        assert all(dm[a, b] == w for a, b, w in wedges)
        two_tree_completion(completion)


class TestLint:
    def test_optimal_bounds_are_clean(self):
        assert minimality_lint(c8pp(), 2).clean
        assert minimality_lint(x15(), 3).clean

    def test_adjacent_degree_two(self):
        rep = minimality_lint(cycle(5), 2)
        assert any(v.rule == "adjacent-deg2" for v in rep.violations)

    def test_lonely_degree_two(self):
        # C5 plus a 3-path from 0 to 2: vertex 1 lies only on 5-cycles
        g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 2)])
        rep = minimality_lint(g, 2)
        assert any(v.rule == "lonely-deg2" and v.vertices == (1,) for v in rep.violations)
        assert rep.lines()

    def test_bad_k(self):
        with pytest.raises(DomainError):
            minimality_lint(c8pp(), 1)
