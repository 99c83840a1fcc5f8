"""Forest generating function (arboreal gas) and path generating function."""

from __future__ import annotations

from typing import Iterator

from ..canon import canonical_key
from ..graph import Budget, GraphError, LimitError, Multigraph, contract_edge, contract_path, delete_edge
from ..poly import IntPolynomial

ORACLE_MAX_EDGES = 24

ONE = IntPolynomial([1])
ONE_PLUS_X = IntPolynomial([1, 1])


def forest_polynomial_bruteforce(G: Multigraph) -> IntPolynomial:
    """Sum of ``x^|F|`` over acyclic edge subsets, by direct enumeration."""
    if G.m > ORACLE_MAX_EDGES:
        raise LimitError(f"oracle limit: {G.m} edges > {ORACLE_MAX_EDGES}")
    counts = [0] * (G.n + 1)
    edges = [(u, v) for u, v, _ in G.edges]

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int, parent: list[int], size: int) -> None:
        if i == len(edges):
            counts[size] += 1
            return
        rec(i + 1, parent, size)
        u, v = edges[i]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            merged = list(parent)
            merged[ru] = rv
            rec(i + 1, merged, size + 1)

    rec(0, list(range(G.n)), 0)
    return IntPolynomial(counts)


def iter_paths(G: Multigraph, u: int, v: int) -> Iterator[list[int]]:
    """Edge lists of all ``u``-``v`` paths; parallel edges give distinct paths."""
    if u == v:
        raise GraphError("path endpoints must differ")
    adj = G.incidence()
    visited = [False] * G.n
    visited[u] = True
    path: list[int] = []

    def rec(x: int):
        for y, e in adj[x]:
            if y == x or visited[y]:
                continue
            path.append(e)
            if y == v:
                yield list(path)
            else:
                visited[y] = True
                yield from rec(y)
                visited[y] = False
            path.pop()

    yield from rec(u)


def path_polynomial(G: Multigraph, u: int, v: int) -> IntPolynomial:
    """``sum over u-v paths P of x^|P|``."""
    counts = [0] * max(G.n, 1)
    budget = Budget("path enumeration")
    for P in iter_paths(G, u, v):
        budget.spend()
        counts[len(P)] += 1
    return IntPolynomial(counts)


def _reduce(G: Multigraph) -> tuple[IntPolynomial, list[Multigraph]]:
    """Strip loops, split components, peel pendant edges.

    A pendant edge lies in a forest or not independently of the rest, so it
    contributes ``1 + x``. Returns that factor and the leftover connected
    pieces (minimum degree >= 2) whose forest polynomials multiply to
    ``Z_G / factor``.
    """
    G = G.without_loops()
    factor = ONE
    pieces = []
    for comp in G.components():
        H = G.induced(comp)
        while H.m:
            deg = H.degrees()
            leaf = next((w for w in range(H.n) if deg[w] == 1), None)
            if leaf is None:
                break
            H = H.remove_vertices([leaf])
            factor = factor * ONE_PLUS_X
        if H.m:
            pieces.append(H)
    return factor, pieces


def forest_polynomial(G: Multigraph, method: str = "paths", cache: dict | None = None) -> IntPolynomial:
    """Forest generating function ``Z_G`` of a multigraph.

    ``method="paths"`` uses the contraction identity
    ``Z_G = Z_{G/e} + sum_{P in paths(u, v)} x^|P| Z_{G/P}`` for an edge
    ``e = uv``; ``method="deletion-contraction"`` uses
    ``Z_G = Z_{G-e} + x Z_{G/e}``. Both memoise on the canonical key.
    """
    if method not in ("paths", "deletion-contraction"):
        raise ValueError(f"unknown method {method!r}")
    return _forest(G, method, {} if cache is None else cache, Budget("forest polynomial", 300_000))


def _forest(G: Multigraph, method: str, cache: dict, budget: Budget) -> IntPolynomial:
    factor, pieces = _reduce(G)
    result = factor
    for H in pieces:
        key = (method, canonical_key(H))
        z = cache.get(key)
        if z is None:
            z = _forest_step(H, method, cache, budget)
            cache[key] = z
        result = result * z
    return result


def _forest_step(H: Multigraph, method: str, cache: dict, budget: Budget) -> IntPolynomial:
    budget.spend()
    deg = H.degrees()
    v = max(range(H.n), key=lambda w: (deg[w], -w))
    u, _, e = next((a + b - v, b, e) for a, b, e in H.edges if v in (a, b))
    contracted, _ = contract_edge(H, e, "multigraph")
    if method == "deletion-contraction":
        return _forest(delete_edge(H, e), method, cache, budget) + _forest(contracted, method, cache, budget).shift_degree(1)
    total = _forest(contracted, method, cache, budget)
    for P in iter_paths(H, u, v):
        budget.spend()
        total = total + _forest(contract_path(H, P, keep_loops=False), method, cache, budget).shift_degree(len(P))
    return total
