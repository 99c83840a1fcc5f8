"""Rooted and double-rooted tree generating functions, and the pair-count sum."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from ..graph import Budget, GraphError, Multigraph
from ..poly import IntPolynomial


def iter_trees_containing(G: Multigraph, v: int) -> Iterator[frozenset[int]]:
    """Edge sets of all trees whose vertex set contains ``v``.

    Includes the trivial tree (empty edge set). Each tree is produced once:
    the search branches on the first open boundary edge, taking it or
    forbidding it for the rest of the branch.
    """
    adj = G.incidence()
    in_tree = [False] * G.n
    in_tree[v] = True
    edges: list[int] = []
    budget = Budget("tree enumeration")

    def rec(boundary: list[tuple[int, int]]):
        i = 0
        while i < len(boundary) and in_tree[boundary[i][1]]:
            i += 1
        if i == len(boundary):
            budget.spend()
            yield frozenset(edges)
            return
        e, w = boundary[i]
        rest = boundary[i + 1:]
        in_tree[w] = True
        edges.append(e)
        grown = rest + [(f, y) for y, f in adj[w] if not in_tree[y]]
        yield from rec(grown)
        edges.pop()
        in_tree[w] = False
        yield from rec(rest)

    yield from rec([(e, y) for y, e in adj[v] if y != v])


def _vertices(G: Multigraph, T: frozenset[int], root: int) -> set[int]:
    emap = G.edge_map()
    return {root} | {w for e in T for w in emap[e]}


def rooted_tree_polynomial(G: Multigraph, v: int) -> IntPolynomial:
    """``sum over trees T containing v of x^|T|``, the trivial tree included."""
    counts = [0] * max(G.n, 1)
    for T in iter_trees_containing(G, v):
        counts[len(T)] += 1
    return IntPolynomial(counts)


def double_rooted_tree_polynomial(G: Multigraph, v1: int, v2: int) -> IntPolynomial:
    """``sum over trees T containing v1 and v2 of x^|T|``; zero if they are disconnected."""
    if v1 == v2:
        raise GraphError("double-rooted tree polynomial needs distinct roots")
    counts = [0] * max(G.n, 1)
    for T in iter_trees_containing(G, v1):
        if v2 in _vertices(G, T, v1):
            counts[len(T)] += 1
    return IntPolynomial(counts)


def derivcount_lhs(k: int) -> IntPolynomial:
    """``sum_{S subset [k]} sum_{(s,t) in S x [k], t > s} x^|S|`` by enumeration."""
    if k > 20:
        raise ValueError("k too large for direct enumeration")
    counts = [0] * (k + 1)
    for r in range(k + 1):
        for S in combinations(range(1, k + 1), r):
            counts[r] += sum(1 for s in S for t in range(1, k + 1) if t > s)
    return IntPolynomial(counts)
