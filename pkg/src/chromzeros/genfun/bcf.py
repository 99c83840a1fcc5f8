"""Broken-circuit-free (BCF) forests under an edge ordering."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ..graph import WORK_LIMIT, Budget, EdgeOrdering, GraphError, LimitError, Multigraph, contract_edge, delete_edge
from ..poly import IntPolynomial, evaluate

ENUM_MAX_EDGES = 24

MODES = ("all", "rooted", "star", "two-rooted")


@dataclass
class BcfFamily:
    """A family of BCF edge sets.

    ``mode`` is one of ``all``, ``rooted`` (every non-trivial component
    meets ``roots``), ``star`` (every non-trivial component holds exactly one
    root) or ``two-rooted`` (a single non-trivial component holding both
    roots).
    """

    mode: str
    roots: tuple[int, ...]
    ordering: EdgeOrdering
    members: list[frozenset[int]] = field(default_factory=list)

    def polynomial(self) -> IntPolynomial:
        counts: dict[int, int] = {}
        for F in self.members:
            counts[len(F)] = counts.get(len(F), 0) + 1
        return IntPolynomial(counts.get(k, 0) for k in range(max(counts, default=-1) + 1))

    def __len__(self) -> int:
        return len(self.members)


def _tree_path_max(tree: dict[int, list[tuple[int, int]]], src: int, dst: int) -> int:
    """Largest rank on the forest path ``src -> dst`` (0 for ``src == dst``)."""
    if src == dst:
        return 0
    stack = [(src, -1, 0)]
    while stack:
        x, par, best = stack.pop()
        for y, r in tree.get(x, ()):
            if y == par:
                continue
            b = max(best, r)
            if y == dst:
                return b
            stack.append((y, x, b))
    raise AssertionError("vertices not connected in forest")


def _walk_bcf(G: Multigraph, ordering: EdgeOrdering, visit: Callable[[list[int]], None]) -> None:
    """Call ``visit`` once for every BCF set of ``G``.

    Edges are decided from largest to smallest. Including an edge ``e`` is
    rejected if it closes a cycle, or if it joins the endpoints of an
    already excluded (hence larger) edge ``f`` through a forest path whose
    edges are all smaller than ``f``: that path would be a broken circuit.
    Every broken circuit is detected when its smallest edge is decided, so
    every node of the search is a BCF set and no branch dead-ends.
    """
    if G.has_loops():
        return  # a loop makes the empty set a broken circuit
    edges = sorted(G.edges, key=lambda t: -ordering[t[2]])
    comp = list(range(G.n))
    members: dict[int, list[int]] = {v: [v] for v in range(G.n)}
    tree: dict[int, list[tuple[int, int]]] = {}
    excluded: list[tuple[int, int, int]] = []
    chosen: list[int] = []
    budget = Budget("BCF enumeration")

    def rec(i: int) -> None:
        budget.spend()
        if i == len(edges):
            visit(chosen)
            return
        u, v, e = edges[i]
        r = ordering[e]
        excluded.append((u, v, r))
        rec(i + 1)
        excluded.pop()
        cu, cv = comp[u], comp[v]
        if cu == cv:
            return
        for p, q, rf in excluded:
            cp, cq = comp[p], comp[q]
            if cp == cu and cq == cv:
                a, b = p, q
            elif cp == cv and cq == cu:
                a, b = q, p
            else:
                continue
            if _tree_path_max(tree, a, u) < rf and _tree_path_max(tree, v, b) < rf:
                return
        # merge the smaller component into the larger
        if len(members[cu]) < len(members[cv]):
            cu, cv = cv, cu
        moved = members.pop(cv)
        for w in moved:
            comp[w] = cu
        members[cu].extend(moved)
        tree.setdefault(u, []).append((v, r))
        tree.setdefault(v, []).append((u, r))
        chosen.append(e)
        rec(i + 1)
        chosen.pop()
        tree[u].pop()
        tree[v].pop()
        del members[cu][-len(moved):]
        for w in moved:
            comp[w] = cv
        members[cv] = moved

    rec(0)


def is_forest(G: Multigraph, F: Iterable[int]) -> bool:
    parent = list(range(G.n))
    emap = G.edge_map()

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in F:
        u, v = emap[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_bcf(G: Multigraph, ordering: EdgeOrdering, F: Iterable[int]) -> bool:
    """Direct test: ``F`` is a forest and no outside edge is the largest
    edge of the cycle it closes with ``F``."""
    F = set(F)
    if not is_forest(G, F):
        return False
    tree: dict[int, list[tuple[int, int]]] = {}
    emap = G.edge_map()
    for e in F:
        u, v = emap[e]
        tree.setdefault(u, []).append((v, ordering[e]))
        tree.setdefault(v, []).append((u, ordering[e]))
    comps = _forest_components(G.n, [emap[e] for e in F])
    for u, v, e in G.edges:
        if e in F:
            continue
        if u == v:
            return False
        if comps[u] == comps[v] and _tree_path_max(tree, u, v) < ordering[e]:
            return False
    return True


def _forest_components(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        parent[find(u)] = find(v)
    return [find(v) for v in range(n)]


def nontrivial_components(G: Multigraph, F: Iterable[int]) -> list[set[int]]:
    """Vertex sets of the components of ``(V, F)`` with at least one edge."""
    emap = G.edge_map()
    pairs = [emap[e] for e in F]
    labels = _forest_components(G.n, pairs)
    touched = {w for p in pairs for w in p}
    groups: dict[int, set[int]] = {}
    for w in touched:
        groups.setdefault(labels[w], set()).add(w)
    return list(groups.values())


def _mode_filter(G: Multigraph, mode: str, roots: Sequence[int]) -> Callable[[Sequence[int]], bool]:
    S = set(roots)
    if mode == "all":
        return lambda F: True
    if mode == "rooted":
        return lambda F: all(c & S for c in nontrivial_components(G, F))
    if mode == "star":
        return lambda F: all(len(c & S) == 1 for c in nontrivial_components(G, F))
    if mode == "two-rooted":
        if len(roots) != 2 or roots[0] == roots[1]:
            raise GraphError("two-rooted mode needs two distinct roots")

        def two(F):
            comps = nontrivial_components(G, F)
            return len(comps) == 1 and S <= comps[0]

        return two
    raise GraphError(f"unknown BCF mode {mode!r}")


def enumerate_bcf(
    G: Multigraph, ordering: EdgeOrdering, mode: str = "all", roots: Sequence[int] = ()
) -> BcfFamily:
    """The BCF family of ``G`` selected by ``mode`` (see :class:`BcfFamily`)."""
    if G.m > ENUM_MAX_EDGES and mode == "all":
        raise LimitError(f"enumeration limit: {G.m} edges > {ENUM_MAX_EDGES}")
    keep = _mode_filter(G, mode, tuple(roots))
    out: list[frozenset[int]] = []

    def visit(F):
        if keep(F):
            out.append(frozenset(F))

    _walk_bcf(G, ordering, visit)
    return BcfFamily(mode, tuple(roots), ordering, out)


def bcf_polynomial(G: Multigraph, ordering: EdgeOrdering | None = None) -> IntPolynomial:
    """``F_G(x) = sum over BCF sets F of x^|F|``."""
    if ordering is None:
        ordering = EdgeOrdering.by_id(G)
    counts = [0] * (G.n + 1)

    def visit(F):
        counts[len(F)] += 1

    _walk_bcf(G, ordering, visit)
    return IntPolynomial(counts)


def bcf_polynomial_recursive(
    G: Multigraph, ordering: EdgeOrdering | None = None, cache: dict | None = None
) -> IntPolynomial:
    """``F_G`` via ``F_G = F_{G-e} + x F_{G/e}`` on the smallest edge ``e``,
    contracting with only the largest edge of each parallel class kept."""
    if not G.simple:
        raise GraphError("recursive BCF polynomial needs a simple graph")
    if ordering is None:
        ordering = EdgeOrdering.by_id(G)
    return _bcf_rec(G, ordering, {} if cache is None else cache)


def _bcf_rec(G: Multigraph, ordering: EdgeOrdering, cache: dict) -> IntPolynomial:
    if G.m == 0:
        return IntPolynomial([1])
    key = (G.n, frozenset(G.edges))
    hit = cache.get(key)
    if hit is not None:
        return hit
    if len(cache) > WORK_LIMIT:
        raise LimitError("recursive BCF polynomial: cache limit exceeded")
    e = min(G.edge_ids, key=ordering.__getitem__)
    H, _ = contract_edge(G, e, "keep-largest", ordering)
    result = _bcf_rec(delete_edge(G, e), ordering, cache) + _bcf_rec(H, ordering, cache).shift_degree(1)
    cache[key] = result
    return result


def induced_bcf_polynomial(G: Multigraph, vertices: Iterable[int], ordering: EdgeOrdering) -> IntPolynomial:
    """``F_U`` for the induced subgraph on ``U``, under the induced ordering."""
    H = G.induced(vertices)
    return bcf_polynomial(H, ordering.restrict(H.edge_ids))


def covered_vertices(G: Multigraph, F: Iterable[int]) -> set[int]:
    """Non-isolated vertices of ``(V, F)``."""
    emap = G.edge_map()
    return {w for e in F for w in emap[e]}


def recursion_rhs(G: Multigraph, ordering: EdgeOrdering, S: Iterable[int]) -> IntPolynomial:
    """``sum_{F in F_{G,S}} x^|F| F_{V - S - V(F)}(x)``; equals ``F_G`` for every ``S``."""
    S = set(S)
    fam = enumerate_bcf(G, ordering, "rooted", tuple(sorted(S)))
    total = IntPolynomial()
    for F in fam.members:
        rest = set(range(G.n)) - S - covered_vertices(G, F)
        total = total + induced_bcf_polynomial(G, rest, ordering).shift_degree(len(F))
    return total


@dataclass
class RatioSample:
    graph: Multigraph
    u: int
    x: complex
    value: complex


def ratio_R(G: Multigraph, u: int, x: complex) -> RatioSample:
    """``F_V(x) / F_{V-u}(x) - 1`` from exact polynomials."""
    full = bcf_polynomial(G)
    rest = bcf_polynomial(G.remove_vertices([u]))
    den = evaluate(rest, x)
    if den == 0:
        raise ZeroDivisionError("ratio undefined at x")
    return RatioSample(G, u, x, evaluate(full, x) / den - 1)
