"""Multigraphs with stable edge identities.

Vertices are ``0..n-1``. Every edge carries an integer id that survives
deletion and contraction, so edge orderings and edge-id maps stay valid
across the recursions used by the generating-function code.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

INF = float("inf")


class GraphError(ValueError):
    """Raised for malformed graphs or invalid graph operations."""


class LimitError(GraphError):
    """An exhaustive routine was asked to go beyond its size cap."""


WORK_LIMIT = 2_000_000


class Budget:
    """Counts units of enumeration or recursion work; raises past ``limit``."""

    __slots__ = ("left", "limit", "what")

    def __init__(self, what: str, limit: int = WORK_LIMIT):
        self.left = self.limit = limit
        self.what = what

    def spend(self, k: int = 1) -> None:
        self.left -= k
        if self.left < 0:
            raise LimitError(f"{self.what}: work limit of {self.limit} steps exceeded")


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph on vertices ``0..n-1``.

    ``edges`` holds ``(u, v, eid)`` triples with ``u <= v``; ``u == v`` is a
    loop. Parallel edges are distinct triples sharing endpoints.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        norm = []
        seen = set()
        for u, v, eid in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {eid} endpoint out of range")
            if eid in seen:
                raise GraphError(f"duplicate edge id {eid}")
            seen.add(eid)
            norm.append((min(u, v), max(u, v), eid))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def _trusted(cls, n: int, edges: tuple[tuple[int, int, int], ...]) -> "Multigraph":
        # internal fast path: edges already normalised, ids unique
        G = object.__new__(cls)
        object.__setattr__(G, "n", n)
        object.__setattr__(G, "edges", edges)
        return G

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Multigraph":
        """Build a multigraph, numbering edges ``0, 1, ...`` in input order."""
        return cls(n, tuple((u, v, i) for i, (u, v) in enumerate(pairs)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e for _, _, e in self.edges)

    @property
    def simple(self) -> bool:
        pairs = set()
        for u, v, _ in self.edges:
            if u == v or (u, v) in pairs:
                return False
            pairs.add((u, v))
        return True

    def has_loops(self) -> bool:
        return any(u == v for u, v, _ in self.edges)

    def endpoints(self, eid: int) -> tuple[int, int]:
        for u, v, e in self.edges:
            if e == eid:
                return u, v
        raise GraphError(f"no such edge: {eid}")

    def edge_map(self) -> dict[int, tuple[int, int]]:
        return {e: (u, v) for u, v, e in self.edges}

    def incidence(self) -> list[list[tuple[int, int]]]:
        """Per vertex, the list of ``(neighbour, eid)``; a loop appears twice."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, e in self.edges:
            adj[u].append((v, e))
            adj[v].append((u, e))
        return adj

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbours of ``v`` other than ``v`` itself, sorted."""
        out = set()
        for a, b, _ in self.edges:
            if a == v and b != v:
                out.add(b)
            elif b == v and a != v:
                out.add(a)
        return sorted(out)

    def degree(self, v: int) -> int:
        d = 0
        for a, b, _ in self.edges:
            d += (a == v) + (b == v)
        return d

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def multiplicity_matrix(self) -> list[list[int]]:
        """Symmetric edge-count matrix; loops counted once on the diagonal."""
        mat = [[0] * self.n for _ in range(self.n)]
        for u, v, _ in self.edges:
            mat[u][v] += 1
            if u != v:
                mat[v][u] += 1
        return mat

    def induced(self, vertices: Iterable[int]) -> "Multigraph":
        """Induced subgraph, relabelled in increasing order; edge ids kept."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = tuple(
            (pos[u], pos[v], e) for u, v, e in self.edges if u in pos and v in pos
        )
        return Multigraph._trusted(len(keep), edges)

    def remove_vertices(self, vertices: Iterable[int]) -> "Multigraph":
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def without_loops(self) -> "Multigraph":
        return Multigraph._trusted(self.n, tuple(t for t in self.edges if t[0] != t[1]))

    def components(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Apply the vertex map ``v -> perm[v]`` (a permutation)."""
        return Multigraph(self.n, tuple((perm[u], perm[v], e) for u, v, e in self.edges))

    def structure(self) -> tuple:
        """Labelled structure without edge ids, for exact equality checks."""
        return (self.n, tuple(sorted((u, v) for u, v, _ in self.edges)))


@dataclass(frozen=True)
class EdgeOrdering:
    """Total order on edge ids; a higher rank is a larger edge."""

    rank: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        ranks = sorted(self.rank.values())
        if ranks != list(range(1, len(ranks) + 1)):
            raise GraphError("ranks must be a bijection onto 1..m")

    @classmethod
    def from_sequence(cls, eids: Sequence[int]) -> "EdgeOrdering":
        """``eids`` listed from smallest to largest."""
        return cls({e: i + 1 for i, e in enumerate(eids)})

    @classmethod
    def by_id(cls, G: Multigraph) -> "EdgeOrdering":
        return cls.from_sequence(sorted(G.edge_ids))

    @classmethod
    def random(cls, G: Multigraph, rng: random.Random) -> "EdgeOrdering":
        eids = list(G.edge_ids)
        rng.shuffle(eids)
        return cls.from_sequence(eids)

    @classmethod
    def largest_at(cls, G: Multigraph, u: int, order: Sequence[int] | None = None) -> "EdgeOrdering":
        """Ordering in which the edges at ``u`` are largest.

        ``order`` optionally fixes the neighbours of ``u`` from largest edge
        to smallest; other edges are ordered by id.
        """
        at_u = [e for a, b, e in G.edges if u in (a, b)]
        rest = sorted(e for a, b, e in G.edges if u not in (a, b))
        if order is not None:
            emap = G.edge_map()
            pos = {s: i for i, s in enumerate(order)}
            at_u.sort(key=lambda e: -pos[emap[e][0] + emap[e][1] - u])
        else:
            at_u.sort()
        return cls.from_sequence(rest + at_u)

    def __getitem__(self, eid: int) -> int:
        return self.rank[eid]

    def __len__(self) -> int:
        return len(self.rank)

    def ascending(self) -> list[int]:
        return sorted(self.rank, key=self.rank.__getitem__)

    def restrict(self, eids: Iterable[int]) -> "EdgeOrdering":
        """Induced ordering on a subset of edges, re-ranked to ``1..k``."""
        keep = sorted(eids, key=self.rank.__getitem__)
        return EdgeOrdering.from_sequence(keep)


def delete_edge(G: Multigraph, e: int) -> Multigraph:
    edges = tuple(t for t in G.edges if t[2] != e)
    if len(edges) == len(G.edges):
        raise GraphError(f"no such edge: {e}")
    return Multigraph._trusted(G.n, edges)


def _merge_map(n: int, a: int, b: int) -> list[int]:
    # a < b; b merges into a, labels above b shift down by one
    return [a if x == b else (x - 1 if x > b else x) for x in range(n)]


def contract_edge(
    G: Multigraph,
    e: int,
    mode: str = "multigraph",
    ordering: EdgeOrdering | None = None,
    keep_loops: bool = False,
) -> tuple[Multigraph, dict[int, int]]:
    """Contract edge ``e``.

    Modes:

    * ``"simple"``: drop loops, collapse each parallel class to the edge
      with the smallest id (chromatic semantics).
    * ``"multigraph"``: keep parallel edges; loops are dropped unless
      ``keep_loops`` is set.
    * ``"keep-largest"``: drop loops, keep only the highest-ranked edge of
      every parallel class; ``ordering`` is required.

    Returns the contracted graph and the map from surviving old edge ids to
    new ones. Edge ids never change, so the map is the identity on
    survivors.
    """
    emap = G.edge_map()
    if e not in emap:
        raise GraphError(f"no such edge: {e}")
    u, v = emap[e]
    if u == v:
        raise GraphError("loop contraction undefined")
    if mode == "keep-largest" and ordering is None:
        raise GraphError("keep-largest contraction needs an edge ordering")
    if mode not in ("simple", "multigraph", "keep-largest"):
        raise GraphError(f"unknown contraction mode {mode!r}")
    relabel = _merge_map(G.n, u, v)
    moved = []
    for a, b, eid in G.edges:
        if eid == e:
            continue
        a, b = relabel[a], relabel[b]
        if a == b and not (mode == "multigraph" and keep_loops):
            continue
        moved.append((min(a, b), max(a, b), eid))
    if mode != "multigraph":
        best: dict[tuple[int, int], int] = {}
        for a, b, eid in moved:
            cur = best.get((a, b))
            if cur is None:
                best[(a, b)] = eid
            elif mode == "simple":
                best[(a, b)] = min(cur, eid)
            elif ordering[eid] > ordering[cur]:
                best[(a, b)] = eid
        survivors = set(best.values())
        moved = [t for t in moved if t[2] in survivors]
    H = Multigraph._trusted(G.n - 1, tuple(moved))
    return H, {eid: eid for _, _, eid in moved}


def path_vertices(G: Multigraph, P: Sequence[int]) -> list[int]:
    """Vertex sequence of the path with edge list ``P``; raises if not a path."""
    emap = G.edge_map()
    if not P:
        raise GraphError("empty path")
    if len(set(P)) != len(P):
        raise GraphError("path repeats an edge")
    for e in P:
        if e not in emap:
            raise GraphError(f"no such edge: {e}")
    a, b = emap[P[0]]
    if len(P) == 1:
        if a == b:
            raise GraphError("a loop is not a path")
        return [a, b]
    c, d = emap[P[1]]
    start = a if b in (c, d) else b
    seq = [start]
    cur = start
    for e in P:
        x, y = emap[e]
        if cur == x:
            nxt = y
        elif cur == y:
            nxt = x
        else:
            raise GraphError("consecutive path edges do not share a vertex")
        seq.append(nxt)
        cur = nxt
    if len(set(seq)) != len(seq):
        raise GraphError("path repeats a vertex")
    return seq


def contract_path(G: Multigraph, P: Sequence[int], keep_loops: bool = True) -> Multigraph:
    """Contract every edge of the path ``P`` in sequence (multigraph mode)."""
    seq = path_vertices(G, P)
    # merging all path vertices at once equals sequential contraction
    merged = set(seq)
    target = min(seq)
    relabel = []
    shift = 0
    for x in range(G.n):
        if x in merged and x != target:
            relabel.append(None)
            shift += 1
        else:
            relabel.append(x - shift)
    t = relabel[target]
    path = set(P)
    out = []
    for a, b, e in G.edges:
        if e in path:
            continue
        a = t if a in merged else relabel[a]
        b = t if b in merged else relabel[b]
        if a == b and not keep_loops:
            continue
        out.append((min(a, b), max(a, b), e))
    return Multigraph._trusted(G.n - len(seq) + 1, tuple(out))


def girth(G: Multigraph) -> float:
    """Length of a shortest cycle; ``inf`` for forests.

    A loop is a cycle of length 1 and a parallel pair one of length 2.
    """
    adj = G.incidence()
    best = INF
    for root in range(G.n):
        dist = {root: 0}
        parent_edge = {root: None}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y, e in adj[x]:
                if e == parent_edge[x]:
                    continue
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent_edge[y] = e
                    queue.append(y)
                else:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def max_degree(G: Multigraph) -> int:
    return max(G.degrees(), default=0)


def second_max_degree(G: Multigraph) -> int:
    """Largest degree once a single vertex of maximum degree is exempted."""
    deg = sorted(G.degrees(), reverse=True)
    return deg[1] if len(deg) > 1 else 0


def distance(G: Multigraph, s: int, t: int) -> float:
    """Number of edges on a shortest ``s``-``t`` path, ``inf`` if none."""
    adj = G.incidence()
    dist = {s: 0}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            return dist[x]
        for y, _ in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return INF
