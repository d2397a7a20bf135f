"""Graph core: construction, complementation, partitions, modules."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from nlc2 import (
    build,
    complement,
    partial_complement,
    induced,
    connected_components,
    co_connected_components,
    is_module,
)
from nlc2.errors import MalformedInputError, MisuseError
from nlc2._bitset import mask_of


def _p4():
    return build(4, [(0, 1), (1, 2), (2, 3)])


def _c5():
    return build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def _random_graph(rng_seed: int, n: int, p_numerator: int = 1, p_denominator: int = 2):
    import random

    rng = random.Random(rng_seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() * p_denominator < p_numerator
    ]
    return build(n, edges)


def test_build_p4():
    g = _p4()
    assert g.n == 4 and g.m == 3
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)


def test_build_single_vertex():
    g = build(1, [])
    assert g.n == 1 and g.m == 0


def test_build_collapses_duplicates():
    g = build(3, [(0, 1), (1, 0)])
    assert g.m == 1


def test_build_rejects_bad_input():
    with pytest.raises(MalformedInputError):
        build(3, [(0, 3)])
    with pytest.raises(MalformedInputError):
        build(3, [(1, 1)])


def test_complement_k3_edgeless():
    k3 = build(3, [(0, 1), (0, 2), (1, 2)])
    assert complement(k3).m == 0


def test_complement_involution():
    g = _p4()
    assert complement(complement(g)) == g


def test_complement_c5_self_complementary_edge_count():
    # C5 has 10 vertex pairs and 5 edges, so its complement has 5 edges too.
    cc = complement(_c5())
    assert cc.m == 5
    # The complement is again a 5-cycle on the same vertices.
    assert all(cc.degree(v) == 2 for v in range(5))
    assert len(connected_components(cc)) == 1


def test_partial_complement_empty_and_full():
    g = _p4()
    assert partial_complement(g, 0) == g
    assert partial_complement(g, g.vertex_mask) == complement(g)


def test_partial_complement_flips_inside_only():
    g = _p4()
    flipped = partial_complement(g, mask_of([0, 1]))
    assert sorted(flipped.edges()) == [(1, 2), (2, 3)]


def test_partial_complement_involution_property():
    g = _random_graph(7, 9)
    w = mask_of([0, 2, 3, 7])
    assert partial_complement(partial_complement(g, w), w) == g


def test_induced_p3_from_p4():
    sub, mapping = induced(_p4(), mask_of([0, 1, 2]))
    assert sub.n == 3 and sub.m == 2
    assert mapping == {0: 0, 1: 1, 2: 2}


def test_induced_full_is_identity():
    g = _p4()
    sub, mapping = induced(g, g.vertex_mask)
    assert sub == g and mapping == {v: v for v in range(4)}


def test_induced_c5_minus_vertex_is_p4():
    sub, _ = induced(_c5(), mask_of([0, 1, 2, 3]))
    # Removing one cycle vertex leaves a 4-path.
    degs = sorted(sub.degree(v) for v in range(4))
    assert degs == [1, 1, 2, 2] and sub.m == 3


def test_induced_rejects_empty():
    with pytest.raises(MalformedInputError):
        induced(_p4(), 0)


def test_components_two_edges():
    g = build(4, [(0, 1), (2, 3)])
    assert connected_components(g) == (mask_of([0, 1]), mask_of([2, 3]))


def test_components_p4_single_block():
    assert connected_components(_p4()) == (_p4().vertex_mask,)


def test_components_edgeless():
    g = build(5, [])
    assert connected_components(g) == tuple(1 << v for v in range(5))


def test_co_components_k4():
    k4 = build(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert co_connected_components(k4) == tuple(1 << v for v in range(4))


def test_co_components_edgeless_single_block():
    g = build(3, [])
    assert co_connected_components(g) == (g.vertex_mask,)


def test_co_components_k22_two_sides():
    g = build(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert co_connected_components(g) == (mask_of([0, 1]), mask_of([2, 3]))


def test_is_module_trivial_cases():
    g = _p4()
    assert is_module(g, 1 << 2)
    assert is_module(g, g.vertex_mask)


def test_is_module_p4_pair_false():
    # In the path 0-1-2-3, vertex 2 sees 1 but not 0.
    assert not is_module(_p4(), mask_of([0, 1]))


def test_is_module_rejects_empty():
    with pytest.raises(MisuseError):
        is_module(_p4(), 0)


@given(st.integers(0, 2**30), st.integers(1, 10))
@settings(max_examples=60, deadline=None)
def test_partition_properties(seed, n):
    g = _random_graph(seed, n)
    for blocks in (connected_components(g), co_connected_components(g)):
        union = 0
        for b in blocks:
            assert b and not (b & union)
            union |= b
        assert union == g.vertex_mask


@given(st.integers(0, 2**30), st.integers(2, 9))
@settings(max_examples=60, deadline=None)
def test_module_complement_agreement(seed, n):
    import random

    g = _random_graph(seed, n)
    rng = random.Random(seed ^ 0x5EED)
    x = mask_of(rng.sample(range(n), rng.randint(1, n)))
    assert is_module(g, x) == is_module(complement(g), x)
