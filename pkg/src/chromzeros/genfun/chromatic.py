"""Chromatic polynomials: subset-expansion oracle and deletion-contraction."""

from __future__ import annotations

from ..canon import canonical_form
from ..graph import Budget, GraphError, LimitError, Multigraph
from ..poly import IntPolynomial

ORACLE_MAX_EDGES = 24

# below this size, labelled keys are cheaper than canonical ones
SMALL_N = 6


def chromatic_subgraph_expansion(G: Multigraph) -> IntPolynomial:
    """``sum_{A subset E} (-1)^|A| x^{components(A)}`` by enumerating all subsets."""
    if G.m > ORACLE_MAX_EDGES:
        raise LimitError(f"oracle limit: {G.m} edges > {ORACLE_MAX_EDGES}")
    counts = [0] * (G.n + 1)
    edges = [(u, v) for u, v, _ in G.edges]

    def rec(i: int, parent: list[int], comps: int, sign: int) -> None:
        if i == len(edges):
            counts[comps] += sign
            return
        rec(i + 1, parent, comps, sign)
        u, v = edges[i]
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            rec(i + 1, parent, comps, -sign)
        else:
            merged = list(parent)
            merged[ru] = rv
            rec(i + 1, merged, comps - 1, -sign)

    rec(0, list(range(G.n)), G.n, 1)
    return IntPolynomial(counts)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        x = parent[x]
    return x


def _to_bitmasks(G: Multigraph) -> tuple[int, ...]:
    adj = [0] * G.n
    for u, v, _ in G.edges:
        if u != v:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return tuple(adj)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _delete_vertex(adj: tuple[int, ...], v: int) -> tuple[int, ...]:
    out = []
    low = (1 << v) - 1
    for w, a in enumerate(adj):
        if w == v:
            continue
        out.append((a & low) | ((a >> (v + 1)) << v))
    return tuple(out)


def _component_masks(adj: tuple[int, ...]) -> list[int]:
    n = len(adj)
    seen = 0
    comps = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def _restrict(adj: tuple[int, ...], mask: int) -> tuple[int, ...]:
    verts = list(_bits(mask))
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        a = 0
        for w in _bits(adj[v] & mask):
            a |= 1 << pos[w]
        out.append(a)
    return tuple(out)


def _chromatic(adj: tuple[int, ...], cache: dict, budget: Budget) -> IntPolynomial:
    n = len(adj)
    m2 = sum(bin(a).count("1") for a in adj)
    if m2 == 0:
        return IntPolynomial.monomial(n)
    comps = _component_masks(adj)
    if len(comps) > 1:
        result = IntPolynomial([1])
        for c in comps:
            result = result * _chromatic(_restrict(adj, c), cache, budget)
        return result
    # a simplicial vertex of degree d contributes a factor (x - d)
    for v in range(n):
        nb = adj[v]
        if all((adj[w] | (1 << w)) & nb == nb for w in _bits(nb)):
            d = bin(nb).count("1")
            return IntPolynomial([-d, 1]) * _chromatic(_delete_vertex(adj, v), cache, budget)
    hit = cache.get(adj)
    if hit is not None:
        return hit
    if n > SMALL_N:
        mat = [[(adj[i] >> j) & 1 for j in range(n)] for i in range(n)]
        key = (n, canonical_form(mat))
        hit = cache.get(key)
        if hit is not None:
            cache[adj] = hit
            return hit
    else:
        key = adj
    budget.spend()
    deg = [bin(a).count("1") for a in adj]
    u, v = max(
        ((a, b) for a in range(n) for b in _bits(adj[a]) if a < b),
        key=lambda e: (deg[e[0]] + deg[e[1]], -e[0], -e[1]),
    )
    deleted = list(adj)
    deleted[u] &= ~(1 << v)
    deleted[v] &= ~(1 << u)
    deleted = tuple(deleted)
    merged = list(deleted)
    merged[u] |= merged[v]
    for w in _bits(merged[v]):
        merged[w] |= 1 << u
    contracted = _delete_vertex(tuple(merged), v)
    result = _chromatic(deleted, cache, budget) - _chromatic(contracted, cache, budget)
    cache[key] = cache[adj] = result
    return result


def chromatic_polynomial(G: Multigraph, cache: dict | None = None) -> IntPolynomial:
    """Chromatic polynomial by memoised deletion-contraction.

    Loops force the zero polynomial; parallel edges are irrelevant and
    collapse. ``cache`` may be shared between calls (values are keyed by an
    isomorphism-faithful canonical form).
    """
    if G.has_loops():
        return IntPolynomial()
    return _chromatic(_to_bitmasks(G), {} if cache is None else cache, Budget("chromatic polynomial"))
