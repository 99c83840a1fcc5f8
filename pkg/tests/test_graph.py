import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromzeros.families import (
    GraphFamilySpec,
    bundle_graph,
    complete_graph,
    cycle_graph,
    generate,
    path_graph,
    petersen_graph,
    star_graph,
    theta_graph,
)
from chromzeros.graph import (
    INF,
    EdgeOrdering,
    GraphError,
    Multigraph,
    contract_edge,
    contract_path,
    delete_edge,
    distance,
    girth,
    max_degree,
    second_max_degree,
)

K3 = complete_graph(3)


def test_multigraph_validation():
    with pytest.raises(GraphError):
        Multigraph.from_edges(2, [(0, 2)])
    with pytest.raises(GraphError):
        Multigraph(2, ((0, 1, 0), (0, 1, 0)))


def test_simple_flag():
    assert K3.simple
    assert not Multigraph.from_edges(2, [(0, 1), (1, 0)]).simple
    assert not Multigraph.from_edges(1, [(0, 0)]).simple


def test_delete_edge_examples():
    H = delete_edge(K3, 0)
    assert H.m == 2 and H.n == 3 and 0 not in H.edge_ids
    assert delete_edge(Multigraph.from_edges(2, [(0, 1)]), 0).m == 0
    P = delete_edge(Multigraph.from_edges(2, [(0, 1), (0, 1)]), 1)
    assert P.simple and P.edge_ids == (0,)
    with pytest.raises(GraphError, match="no such edge"):
        delete_edge(K3, 7)


def test_contract_edge_modes():
    H, _ = contract_edge(K3, 0, "multigraph")
    assert H.n == 2 and H.m == 2 and not H.simple
    H, _ = contract_edge(K3, 0, "simple")
    assert H.n == 2 and H.m == 1
    order = EdgeOrdering.from_sequence([0, 1, 2])
    H, _ = contract_edge(K3, 0, "keep-largest", order)
    assert H.edge_ids == (2,)


def test_contract_loop_rejected():
    G = Multigraph.from_edges(1, [(0, 0)])
    with pytest.raises(GraphError, match="loop contraction undefined"):
        contract_edge(G, 0)


def test_contract_path_examples():
    C4 = cycle_graph(4)
    H = contract_path(C4, [0, 1])
    assert H.n == 2 and H.m == 2 and not H.has_loops()
    G = Multigraph.from_edges(3, [(0, 1), (1, 2)])
    assert contract_path(G, [0]).structure() == contract_edge(G, 0, "multigraph")[0].structure()
    K4 = complete_graph(4)
    ham = [e for u, v, e in K4.edges if (u, v) in ((0, 1), (1, 2), (2, 3))]
    H = contract_path(K4, ham)
    assert H.n == 1 and H.m == 3 and all(u == v for u, v, _ in H.edges)


def test_contract_path_rejects_non_path():
    with pytest.raises(GraphError):
        contract_path(star_graph(3), [0, 1, 2])


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_contract_path_matches_sequential(seed):
    rng = random.Random(seed)
    G = complete_graph(5)
    verts = rng.sample(range(5), rng.randint(2, 5))
    emap = {frozenset((u, v)): e for u, v, e in G.edges}
    P = [emap[frozenset(p)] for p in zip(verts, verts[1:])]
    H = contract_path(G, P)
    seq = G
    for e in P:
        if e in seq.edge_ids and seq.endpoints(e)[0] != seq.endpoints(e)[1]:
            seq, _ = contract_edge(seq, e, "multigraph", keep_loops=True)
    assert H.n == seq.n and H.m == seq.m
    assert sorted(H.degrees()) == sorted(seq.degrees())


def test_girth_examples():
    assert girth(petersen_graph()) == 5
    assert girth(path_graph(6)) == INF
    assert girth(Multigraph.from_edges(2, [(0, 1), (0, 1)])) == 2
    assert girth(Multigraph.from_edges(1, [(0, 0)])) == 1


@given(st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_girth_against_networkx(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 10)
    G = Multigraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3])
    H = nx.Graph(list((u, v) for u, v, _ in G.edges))
    H.add_nodes_from(range(n))
    want = nx.girth(H)
    assert girth(G) == want


def test_degrees():
    assert max_degree(complete_graph(4)) == 3
    assert max_degree(star_graph(5)) == 5
    assert max_degree(Multigraph.from_edges(1, [(0, 0)])) == 2
    assert second_max_degree(star_graph(5)) == 1
    assert second_max_degree(bundle_graph(4)) == 4


def test_distance():
    assert distance(path_graph(5), 0, 4) == 4
    assert distance(Multigraph.from_edges(3, [(0, 1)]), 0, 2) == INF


def test_edge_ordering():
    o = EdgeOrdering.from_sequence([2, 0, 1])
    assert o[2] == 1 and o[1] == 3 and o.ascending() == [2, 0, 1]
    with pytest.raises(GraphError):
        EdgeOrdering({0: 1, 1: 1})
    r = EdgeOrdering.random(K3, random.Random(0))
    assert sorted(r[e] for e in K3.edge_ids) == [1, 2, 3]


def test_largest_at():
    G = complete_graph(4)
    o = EdgeOrdering.largest_at(G, 0)
    at_u = [e for u, v, e in G.edges if 0 in (u, v)]
    assert min(o[e] for e in at_u) > max(o[e] for e in G.edge_ids if e not in at_u)


def test_families():
    assert generate(GraphFamilySpec("cycle", (5,)))[0].structure() == cycle_graph(5).structure()
    spec = GraphFamilySpec("random-max-degree", (10,), delta=3, seed=1)
    a, b = generate(spec), generate(spec)
    assert [g.structure() for g in a] == [g.structure() for g in b]
    assert all(max_degree(g) <= 3 for g in a)
    P = generate(GraphFamilySpec("petersen"))[0]
    assert (P.n, P.m, girth(P)) == (10, 15, 5)


def test_theta_graph():
    T = theta_graph(2, 3, 4)
    assert T.n == 2 + 1 + 2 + 3 and T.m == 9 and girth(T) == 5


@pytest.mark.parametrize("floor", [4, 5])
def test_girth_floor_honoured(floor):
    gs = generate(GraphFamilySpec("random-max-degree", (12,), delta=3, girth_floor=floor, seed=3, count=5))
    assert all(girth(g) >= floor for g in gs)


def test_infeasible_spec():
    with pytest.raises(GraphError):
        generate(GraphFamilySpec("random-max-degree", (4,), delta=1, seed=0, connected=True))
    with pytest.raises(GraphError):
        generate(GraphFamilySpec("cycle", (5,), girth_floor=6))


def test_components_and_induced():
    G = Multigraph.from_edges(5, [(0, 1), (3, 4)])
    assert sorted(map(sorted, G.components())) == [[0, 1], [2], [3, 4]]
    H = G.induced([3, 4])
    assert H.n == 2 and H.m == 1
    assert math.isinf(girth(H))
