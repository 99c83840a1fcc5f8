import random

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from chromzeros.canon import canonical_form, canonical_key
from chromzeros.families import complete_bipartite, cycle_graph, path_graph, petersen_graph, star_graph
from chromzeros.graph import Multigraph
from chromzeros.io import from_networkx

ATLAS = [from_networkx(H) for H in graph_atlas_g()[1:] if H.number_of_nodes() <= 6]


def shuffled(G: Multigraph, rng: random.Random) -> Multigraph:
    perm = list(range(G.n))
    rng.shuffle(perm)
    return G.relabel(perm)


def test_spec_examples():
    rng = random.Random(5)
    assert canonical_key(cycle_graph(5)) == canonical_key(shuffled(cycle_graph(5), rng))
    assert canonical_key(cycle_graph(4)) != canonical_key(path_graph(4))
    assert canonical_key(Multigraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])) != canonical_key(star_graph(3))


def test_atlas_keys_separate_isomorphism_classes():
    # the atlas lists each isomorphism class once
    keys = [canonical_key(G) for G in ATLAS]
    assert len(set(keys)) == len(keys)


def test_atlas_invariant_under_relabelling():
    rng = random.Random(7)
    for G in ATLAS:
        k = canonical_key(G)
        for _ in range(3):
            assert canonical_key(shuffled(G, rng)) == k


def test_multigraph_keys():
    a = Multigraph.from_edges(3, [(0, 1), (0, 1), (1, 2)])
    b = Multigraph.from_edges(3, [(1, 2), (2, 1), (0, 2)])
    c = Multigraph.from_edges(3, [(0, 1), (1, 2), (1, 2), (0, 0)])
    assert canonical_key(a) == canonical_key(b)
    assert canonical_key(a) != canonical_key(c)


def test_regular_graphs():
    rng = random.Random(11)
    P = petersen_graph()
    assert canonical_key(P) == canonical_key(shuffled(P, rng))
    K33 = complete_bipartite(3, 3)
    prism = Multigraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert canonical_key(K33) != canonical_key(prism)


def test_random_pairs_agree_with_networkx():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(4, 8)
        a = nx.gnp_random_graph(n, 0.4, seed=rng.randrange(10**9))
        b = nx.gnp_random_graph(n, 0.4, seed=rng.randrange(10**9))
        same = nx.is_isomorphic(a, b)
        assert (canonical_key(from_networkx(a)) == canonical_key(from_networkx(b))) == same


def test_canonical_form_empty():
    assert canonical_form([]) == canonical_form([])
