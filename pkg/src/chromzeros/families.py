"""Deterministic graph-family generators for tests and certification sweeps."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .graph import GraphError, Multigraph, distance, girth, max_degree

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete-bipartite",
    "star",
    "theta",
    "petersen",
    "random-max-degree",
    "bundle",
)

MAX_RETRIES = 200


@dataclass(frozen=True)
class GraphFamilySpec:
    """What to generate.

    ``sizes`` is read per family: vertex counts for path/cycle/complete and
    random graphs, leaf counts for stars, edge multiplicities for bundles,
    ``(a, b)`` pairs for complete-bipartite and ``(l1, l2, l3)`` path
    lengths for theta graphs. ``count`` graphs are drawn for the random
    family, cycling through ``sizes``.
    """

    family: str
    sizes: tuple = ()
    delta: int | None = None
    girth_floor: int = 0
    seed: int = 0
    count: int = 1
    connected: bool = False
    density: float = 0.6


def path_graph(n: int) -> Multigraph:
    return Multigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Multigraph:
    return Multigraph.from_edges(n, list(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(m: int) -> Multigraph:
    return Multigraph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def theta_graph(l1: int, l2: int, l3: int) -> Multigraph:
    """Three internally disjoint paths of the given lengths between vertices 0 and 1."""
    lengths = (l1, l2, l3)
    if min(lengths) < 1 or sorted(lengths)[1] < 2:
        raise GraphError("theta graph needs path lengths >= 1 with at most one of length 1")
    pairs = []
    n = 2
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            pairs.append((prev, n))
            prev = n
            n += 1
        pairs.append((prev, 1))
    return Multigraph.from_edges(n, pairs)


def petersen_graph() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph.from_edges(10, outer + spokes + inner)


def bundle_graph(k: int) -> Multigraph:
    """Two vertices joined by ``k`` parallel edges."""
    return Multigraph.from_edges(2, [(0, 1)] * k)


def random_max_degree(
    n: int, delta: int, rng: random.Random, girth_floor: int = 0, density: float = 0.6
) -> Multigraph:
    """Random simple graph with max degree <= ``delta`` and girth >= ``girth_floor``.

    Candidate pairs are visited in random order and each is kept with
    probability ``density`` when it respects both constraints.
    """
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    deg = [0] * n
    chosen: list[tuple[int, int]] = []
    for u, v in pairs:
        if deg[u] >= delta or deg[v] >= delta or rng.random() > density:
            continue
        if girth_floor > 3:
            G = Multigraph.from_edges(n, chosen)
            if distance(G, u, v) + 1 < girth_floor:
                continue
        chosen.append((u, v))
        deg[u] += 1
        deg[v] += 1
    return Multigraph.from_edges(n, chosen)


def _check(G: Multigraph, spec: GraphFamilySpec) -> bool:
    if spec.delta is not None and max_degree(G) > spec.delta:
        return False
    if spec.girth_floor and girth(G) < spec.girth_floor:
        return False
    if spec.connected and not G.is_connected():
        return False
    return True


def generate(spec: GraphFamilySpec) -> list[Multigraph]:
    """Graphs described by ``spec``; deterministic for a fixed seed.

    Raises ``GraphError`` when a deterministic family member violates the
    degree cap or girth floor, or when random draws keep failing them.
    """
    fam = spec.family
    if fam not in FAMILIES:
        raise GraphError(f"unknown family {fam!r}")
    if fam == "random-max-degree":
        if spec.delta is None:
            raise GraphError("random-max-degree needs a degree cap")
        rng = random.Random(spec.seed)
        sizes = spec.sizes or (10,)
        out = []
        for i in range(spec.count):
            n = sizes[i % len(sizes)]
            for _ in range(MAX_RETRIES):
                G = random_max_degree(n, spec.delta, rng, spec.girth_floor, spec.density)
                if _check(G, spec):
                    out.append(G)
                    break
            else:
                raise GraphError(f"no graph meeting the spec after {MAX_RETRIES} tries (n={n})")
        return out
    if fam == "petersen":
        graphs = [petersen_graph()]
    else:
        build = {
            "path": path_graph,
            "cycle": cycle_graph,
            "complete": complete_graph,
            "star": star_graph,
            "bundle": bundle_graph,
            "complete-bipartite": lambda s: complete_bipartite(*s),
            "theta": lambda s: theta_graph(*s),
        }[fam]
        graphs = [build(s) for s in spec.sizes]
    for G in graphs:
        if not _check(G, spec):
            raise GraphError(f"{fam} graph on {G.n} vertices violates the degree cap or girth floor")
    return graphs
