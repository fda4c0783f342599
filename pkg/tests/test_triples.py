import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from girthbound.errors import DomainError
from girthbound.families import gadget
from girthbound.graph import Graph, distance_levels, odd_girth
from girthbound.triples import GoodTriple, completions, enumerate_k_good, is_k_good, realized_on_edge


def test_lists_for_k2_and_k3():
    assert [t.as_tuple() for t in enumerate_k_good(2)] == [(1, 1, 2), (1, 2, 2), (2, 2, 2)]
    assert [t.as_tuple() for t in enumerate_k_good(3)] == [
        (1, 1, 2), (1, 2, 3), (1, 3, 3), (2, 2, 2), (2, 2, 3), (2, 3, 3), (3, 3, 3)]


def test_k1_only_triangle_triple():
    assert [t.as_tuple() for t in enumerate_k_good(1)] == [(1, 1, 1)]


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_predicate_matches_gadget_odd_girth(k):
    for p, q, r in itertools.product(range(1, k + 1), repeat=3):
        assert is_k_good(p, q, r, k) == (odd_girth(gadget(k, p, q, r).graph) >= 2 * k + 1)


@given(st.integers(1, 20), st.data())
def test_symmetric_and_single_odd_rule(k, data):
    p, q, r = (data.draw(st.integers(1, k)) for _ in range(3))
    vals = {is_k_good(*perm, k) for perm in itertools.permutations((p, q, r))}
    assert len(vals) == 1
    if (p + q + r) % 2 == 0:
        assert vals == {2 * max(p, q, r) <= p + q + r}


@pytest.mark.parametrize("k", range(2, 21))
def test_shape_of_good_set(k):
    good = {t.as_tuple() for t in enumerate_k_good(k)}
    # triples with a repeated k are always good; {1,1,1} is never good for k >= 2
    assert (1, k, k) in good and (k, k, k) in good
    assert (1, 1, 1) not in good
    # {1, 1, 2} is the only good triple with two ones
    assert [t for t in good if t[:2] == (1, 1)] == [(1, 1, 2)]
    for p, q, r in good:
        assert is_k_good(p, q, r, k)


def test_out_of_range():
    with pytest.raises(DomainError):
        is_k_good(0, 1, 1, 2)
    with pytest.raises(DomainError):
        is_k_good(1, 1, 3, 2)
    with pytest.raises(DomainError):
        GoodTriple(2, 1, 1, 3)
    with pytest.raises(DomainError):
        enumerate_k_good(0)


def test_completions_lexicographic():
    comp = completions(2, 3)
    assert [c[0] for c in comp] == sorted(c[0] for c in comp)
    assert all(q <= r for _, q, r in comp)
    assert comp[0] == ((1, 1, 2), 1, 1)


def test_realized_on_edge_c5():
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    lv = distance_levels(c5)
    # on edge 0-1 with weight 1, {1,1,2} needs z at 1 from 0 and 2 from 1: vertex 4
    assert realized_on_edge(lv, 0, 1, 1, 2)
    # {1,2,2} needs witnesses at distance 2 from both ends: vertex 3
    assert realized_on_edge(lv, 0, 1, 2, 2)
    assert not realized_on_edge(lv, 0, 1, 1, 1)


def test_realized_respects_allowed_mask():
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    lv = distance_levels(c5)
    allowed = tuple((1 << 5) - 1 & ~(1 << v) for v in range(5))
    assert realized_on_edge(lv, 0, 1, 2, 2, allowed)
    blocked = list(allowed)
    blocked[0] &= ~(1 << 3)
    assert not realized_on_edge(lv, 0, 1, 2, 2, tuple(blocked))
