from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from multisat import (
    Host,
    IndexDomainError,
    MultipartiteViolationError,
    ParameterDomainError,
    Subgraph,
    build_g1,
    make_host,
)


@pytest.mark.parametrize("k,n,vertices,edges", [(3, 2, 6, 12), (5, 4, 20, 160), (10, 100, 1000, 450000)])
def test_make_host_counts(k, n, vertices, edges):
    h = make_host(k, n)
    assert h.vertex_count == vertices
    assert h.host_edge_count == edges
    assert sum(1 for _ in h.host_edges()) == edges


@pytest.mark.parametrize("k,n,bound", [(2, 5, "k >= 3"), (3, 1, "n >= 2"), (0, 0, "k >= 3")])
def test_make_host_rejects(k, n, bound):
    with pytest.raises(ParameterDomainError, match=bound):
        make_host(k, n)


def test_locate_examples(h32):
    assert h32.locate(1, 1) == 0
    assert h32.locate(3, 2) == 5
    assert h32.unlocate(3) == (2, 2)


@pytest.mark.parametrize("part,index", [(0, 1), (4, 1), (1, 0), (1, 3)])
def test_locate_out_of_range(h32, part, index):
    with pytest.raises(IndexDomainError):
        h32.locate(part, index)


def test_unlocate_out_of_range(h32):
    with pytest.raises(IndexDomainError):
        h32.unlocate(6)
    with pytest.raises(IndexDomainError):
        h32.unlocate(-1)


@given(st.integers(3, 8), st.integers(2, 7))
def test_locate_roundtrip(k, n):
    h = Host(k, n)
    seen = set()
    for part in range(1, k + 1):
        for index in range(1, n + 1):
            flat = h.locate(part, index)
            assert h.unlocate(flat) == (part, index)
            seen.add(flat)
    assert seen == set(range(k * n))


def test_add_edge_examples(h32):
    g = Subgraph(h32)
    v = h32.locate
    assert g.add_edge(v(1, 1), v(2, 1)) is True
    assert g.edge_count == 1
    assert g.add_edge(v(2, 1), v(1, 1)) is False
    assert g.edge_count == 1
    with pytest.raises(MultipartiteViolationError):
        g.add_edge(v(1, 1), v(1, 2))
    with pytest.raises(IndexDomainError):
        g.add_edge(0, 6)
    assert g.remove_edge(0, 2) is True
    assert g.remove_edge(0, 2) is False
    assert g.edge_count == 0


def test_missing_edges(h32):
    assert Subgraph.complete(h32).missing_edges() == []
    assert Subgraph(h32).missing_edges() == list(h32.host_edges())
    assert len(Subgraph(h32).missing_edges()) == 12
    # G1(3,2) lacks v1^1v2^1, and V3 is joined only to the two hubs
    assert build_g1(3, 2).graph.missing_edges() == [(0, 2), (1, 4), (1, 5), (3, 4), (3, 5)]


def test_part_pair_counts():
    g = build_g1(3, 2).graph
    assert g.part_pair_edge_count(1, 2) == 3
    assert g.part_pair_edge_count(1, 3) == 2
    assert g.part_pair_edge_count(2, 3) == 2
    assert Subgraph(Host(3, 2)).part_pair_edge_count(2, 3) == 0
    with pytest.raises(IndexDomainError):
        g.part_pair_edge_count(2, 2)
    with pytest.raises(IndexDomainError):
        g.part_pair_edge_count(1, 4)


@st.composite
def edit_sequences(draw):
    k = draw(st.integers(3, 5))
    n = draw(st.integers(2, 4))
    h = Host(k, n)
    pairs = list(h.host_edges())
    ops = draw(st.lists(st.tuples(st.booleans(), st.sampled_from(pairs)), max_size=60))
    return h, ops


@settings(max_examples=150, deadline=None)
@given(edit_sequences())
def test_edit_invariants(data):
    h, ops = data
    g = Subgraph(h)
    model = set()
    for add, (u, v) in ops:
        if add:
            assert g.add_edge(u, v) == ((u, v) not in model)
            model.add((u, v))
        else:
            assert g.remove_edge(u, v) == ((u, v) in model)
            model.discard((u, v))
        g.check_invariants()
    assert g.edge_set() == model
    assert g.edge_count == len(model)
    assert len(g.missing_edges()) + g.edge_count == h.host_edge_count
    assert set(g.missing_edges()).isdisjoint(model)
    total = sum(g.part_pair_edge_count(i, j) for i in range(1, h.k + 1) for j in range(i + 1, h.k + 1))
    assert total == g.edge_count
