import itertools
import random
from math import comb

import pytest
from conftest import random_graph, random_multigraph
from hypothesis import given, settings
from hypothesis import strategies as st

from chromzeros.families import bundle_graph, complete_graph, cycle_graph, path_graph, petersen_graph, star_graph
from chromzeros.genfun import (
    bcf_polynomial,
    bcf_polynomial_recursive,
    chromatic_polynomial,
    chromatic_subgraph_expansion,
    derivcount_lhs,
    double_rooted_tree_polynomial,
    enumerate_bcf,
    forest_polynomial,
    forest_polynomial_bruteforce,
    is_bcf,
    iter_trees_containing,
    path_polynomial,
    ratio_R,
    recursion_rhs,
    rooted_tree_polynomial,
)
from chromzeros.genfun.bcf import nontrivial_components
from chromzeros.graph import EdgeOrdering, GraphError, LimitError, Multigraph
from chromzeros.poly import IntPolynomial, whitney_transform

P = IntPolynomial
K3 = complete_graph(3)
C4 = cycle_graph(4)


def proper_colourings(G: Multigraph, q: int) -> int:
    return sum(
        all(c[u] != c[v] for u, v, _ in G.edges) for c in itertools.product(range(q), repeat=G.n)
    )


class TestChromatic:
    def test_oracle_examples(self):
        assert chromatic_subgraph_expansion(Multigraph.from_edges(3, [])) == P.monomial(3)
        assert chromatic_subgraph_expansion(K3) == P([0, 2, -3, 1])
        assert chromatic_subgraph_expansion(C4) == P([0, -3, 6, -4, 1])

    def test_examples(self):
        assert chromatic_polynomial(path_graph(3)) == P([0, 1, -2, 1])
        assert chromatic_polynomial(complete_graph(4)) == P.from_roots([0, 1, 2, 3])
        assert chromatic_polynomial(petersen_graph())(3) == 120

    def test_loops_and_parallel_edges(self):
        assert chromatic_polynomial(Multigraph.from_edges(2, [(0, 0), (0, 1)])).is_zero()
        assert chromatic_polynomial(bundle_graph(3)) == P([0, -1, 1])

    def test_oracle_limit(self):
        with pytest.raises(LimitError, match="oracle limit"):
            chromatic_subgraph_expansion(complete_graph(8))

    @given(st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_matches_oracle(self, seed):
        rng = random.Random(seed)
        G = random_graph(rng, rng.randint(1, 7), 0.45)
        if G.m <= 12:
            assert chromatic_polynomial(G) == chromatic_subgraph_expansion(G)

    def test_counts_colourings(self):
        rng = random.Random(8)
        for _ in range(20):
            G = random_graph(rng, rng.randint(2, 6), 0.5)
            chi = chromatic_polynomial(G)
            for q in (1, 2, 3):
                assert chi(q) == proper_colourings(G, q)

    def test_shared_cache(self):
        cache: dict = {}
        a = chromatic_polynomial(petersen_graph(), cache)
        assert cache and chromatic_polynomial(petersen_graph(), cache) == a


class TestBcf:
    def test_k3_family(self):
        order = EdgeOrdering.from_sequence([0, 1, 2])
        fam = enumerate_bcf(K3, order)
        assert set(fam.members) == {frozenset(s) for s in ([], [0], [1], [2], [0, 2], [1, 2])}
        assert fam.polynomial() == P([1, 3, 2])

    def test_rooted_empty_roots(self):
        fam = enumerate_bcf(petersen_graph(), EdgeOrdering.by_id(petersen_graph()), "rooted", ())
        assert fam.members == [frozenset()]

    def test_two_rooted_k3(self):
        order = EdgeOrdering.from_sequence([0, 1, 2])
        s, t = K3.endpoints(0)
        fam = enumerate_bcf(K3, order, "two-rooted", (s, t))
        every = enumerate_bcf(K3, order).members
        want = [F for F in every if F and s in {w for e in F for w in K3.endpoints(e)}
                and t in {w for e in F for w in K3.endpoints(e)}]
        assert set(fam.members) == set(want) and frozenset([0]) in fam.members

    def test_polynomial_examples(self):
        assert bcf_polynomial(K3) == P([1, 3, 2])
        assert bcf_polynomial(C4, EdgeOrdering.from_sequence([0, 1, 2, 3])) == P([1, 4, 6, 3])
        assert bcf_polynomial(Multigraph.from_edges(4, [])) == P([1])
        assert bcf_polynomial_recursive(K3) == P([1, 3, 2])
        assert bcf_polynomial_recursive(Multigraph.from_edges(2, [(0, 1)])) == P([1, 1])
        assert bcf_polynomial_recursive(C4) == P([1, 4, 6, 3])

    def test_recursive_needs_simple(self):
        with pytest.raises(GraphError):
            bcf_polynomial_recursive(bundle_graph(2))

    @given(st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_members_pass_direct_check(self, seed):
        rng = random.Random(seed)
        G = random_graph(rng, rng.randint(2, 6), 0.5)
        order = EdgeOrdering.random(G, rng)
        fam = set(enumerate_bcf(G, order).members)
        subsets = {frozenset(S) for k in range(G.m + 1) for S in itertools.combinations(G.edge_ids, k)}
        assert fam == {S for S in subsets if is_bcf(G, order, S)}

    @given(st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_whitney_and_recursion(self, seed):
        rng = random.Random(seed)
        G = random_graph(rng, rng.randint(1, 8), 0.5)
        order = EdgeOrdering.random(G, rng)
        F = bcf_polynomial(G, order)
        assert whitney_transform(F, G.n) == chromatic_polynomial(G)
        assert bcf_polynomial_recursive(G, order) == F

    def test_modes(self):
        rng = random.Random(4)
        for _ in range(30):
            G = random_graph(rng, rng.randint(3, 6), 0.6)
            order = EdgeOrdering.random(G, rng)
            S = rng.sample(range(G.n), 2)
            every = enumerate_bcf(G, order).members
            rooted = enumerate_bcf(G, order, "rooted", S).members
            star = enumerate_bcf(G, order, "star", S).members
            assert set(rooted) == {F for F in every if all(c & set(S) for c in nontrivial_components(G, F))}
            assert set(star) == {F for F in rooted if all(len(c & set(S)) == 1 for c in nontrivial_components(G, F))}

    def test_recursion_rhs(self):
        rng = random.Random(6)
        for _ in range(25):
            G = random_graph(rng, rng.randint(2, 7), 0.5)
            order = EdgeOrdering.random(G, rng)
            S = rng.sample(range(G.n), rng.randint(1, G.n))
            assert recursion_rhs(G, order, S) == bcf_polynomial(G, order)

    def test_ratio_examples(self):
        assert ratio_R(K3, 0, 0).value == 0
        edge = Multigraph.from_edges(2, [(0, 1)])
        assert abs(ratio_R(edge, 0, 0.3 + 0.1j).value - (0.3 + 0.1j)) < 1e-15
        assert ratio_R(Multigraph.from_edges(3, []), 1, 5).value == 0
        with pytest.raises(ZeroDivisionError, match="ratio undefined at x"):
            ratio_R(Multigraph.from_edges(3, [(1, 2)]), 0, -1)


class TestForest:
    def test_bruteforce_examples(self):
        assert forest_polynomial_bruteforce(K3) == P([1, 3, 3])
        assert forest_polynomial_bruteforce(star_graph(4)) == P([1, 1]) ** 4
        for d in range(1, 6):
            assert forest_polynomial_bruteforce(bundle_graph(d)) == P([1, d])

    @pytest.mark.parametrize("method", ["paths", "deletion-contraction"])
    def test_examples(self, method):
        assert forest_polynomial(K3, method) == P([1, 3, 3])
        assert forest_polynomial(C4, method) == P([1, 4, 6, 4])
        assert forest_polynomial(Multigraph.from_edges(1, [(0, 0)]), method) == P([1])

    @given(st.integers(0, 10**6))
    @settings(max_examples=80, deadline=None)
    def test_matches_bruteforce(self, seed):
        rng = random.Random(seed)
        G = random_multigraph(rng, rng.randint(1, 6), rng.randint(0, 10))
        want = forest_polynomial_bruteforce(G)
        assert forest_polynomial(G) == want
        assert forest_polynomial(G, "deletion-contraction") == want

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            forest_polynomial(K3, "magic")


class TestTreesAndPaths:
    def test_rooted_examples(self):
        assert rooted_tree_polynomial(Multigraph.from_edges(1, []), 0) == P([1])
        assert rooted_tree_polynomial(star_graph(3), 0) == P([1, 1]) ** 3
        assert rooted_tree_polynomial(K3, 1) == P([1, 2, 3])

    def test_double_rooted_examples(self):
        assert double_rooted_tree_polynomial(Multigraph.from_edges(2, [(0, 1)]), 0, 1) == P([0, 1])
        assert double_rooted_tree_polynomial(K3, 0, 1) == P([0, 1, 3])
        assert double_rooted_tree_polynomial(Multigraph.from_edges(4, [(0, 1), (2, 3)]), 0, 2).is_zero()
        with pytest.raises(GraphError):
            double_rooted_tree_polynomial(K3, 1, 1)

    def test_trees_are_trees(self):
        rng = random.Random(2)
        for _ in range(20):
            G = random_multigraph(rng, rng.randint(1, 6), rng.randint(0, 9), loops=False)
            v = rng.randrange(G.n)
            trees = list(iter_trees_containing(G, v))
            assert len(set(trees)) == len(trees)
            brute = 0
            for k in range(G.m + 1):
                for T in itertools.combinations(G.edge_ids, k):
                    verts = {v} | {w for e in T for w in G.endpoints(e)}
                    sub = Multigraph.from_edges(G.n, [G.endpoints(e) for e in T])
                    if len(verts) == k + 1 and len([c for c in sub.components() if v in c][0]) == k + 1:
                        brute += 1
            assert brute == len(trees)

    def test_path_examples(self):
        assert path_polynomial(K3, 0, 1) == P([0, 1, 1])
        assert path_polynomial(bundle_graph(3), 0, 1) == P([0, 3])
        assert path_polynomial(Multigraph.from_edges(3, [(0, 1)]), 0, 2).is_zero()
        with pytest.raises(GraphError):
            path_polynomial(K3, 2, 2)

    def test_paths_on_complete_graph(self):
        # K_n has (n-2)!/(n-1-k)! paths with k edges between two fixed vertices
        from math import factorial

        n = 6
        want = [0] + [factorial(n - 2) // factorial(n - 1 - k) for k in range(1, n)]
        assert path_polynomial(complete_graph(n), 0, 5) == P(want)

    def test_derivcount(self):
        assert derivcount_lhs(2) == P([0, 1, 1])
        assert derivcount_lhs(1).is_zero()
        assert derivcount_lhs(3) == P([0, 3, 6, 3])
        for k in range(1, 13):
            assert derivcount_lhs(k) == (P([1, 1]) ** (k - 1) * P([0, 1])).scale(comb(k, 2))
