"""Isomorphism-invariant keys for memoising graph recursions.

The key is the multiplicity matrix of the graph written out under the
lexicographically smallest labelling reached by colour refinement plus
individualisation. Because the key encodes the whole relabelled graph, two
graphs with equal keys are always isomorphic; canonicity (isomorphic graphs
get equal keys) only affects the cache hit rate. The search is exhaustive
unless ``max_leaves`` is hit, which does not happen for the graph sizes this
package works with in practice.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Multigraph

MAX_LEAVES = 20000


def _refine(nbrs: Sequence[Sequence[tuple[int, int]]], colors: list[int]) -> list[int]:
    n = len(nbrs)
    while True:
        sigs = []
        for v in range(n):
            nb = sorted([(colors[w], k) for w, k in nbrs[v]])
            sigs.append((colors[v], tuple(nb)))
        ranked = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranked[s] for s in sigs]
        if len(ranked) == len(set(colors)):
            return new
        colors = new


def _twins(mat: Sequence[Sequence[int]], u: int, v: int) -> bool:
    if mat[u][u] != mat[v][v]:
        return False
    ru, rv = mat[u], mat[v]
    for w in range(len(mat)):
        if w != u and w != v and ru[w] != rv[w]:
            return False
    return True


def _encode(mat: Sequence[Sequence[int]], colors: list[int]) -> tuple:
    n = len(mat)
    order = sorted(range(n), key=colors.__getitem__)
    return tuple(mat[order[i]][order[j]] for i in range(n) for j in range(i, n))


def canonical_form(mat: Sequence[Sequence[int]], max_leaves: int = MAX_LEAVES) -> tuple:
    """Smallest encoding of the multiplicity matrix over the search tree."""
    n = len(mat)
    if n == 0:
        return ()
    nbrs = [[(w, mat[v][w]) for w in range(n) if w != v and mat[v][w]] for v in range(n)]
    init = [(mat[v][v], sum(k for _, k in nbrs[v])) for v in range(n)]
    ranked = {s: i for i, s in enumerate(sorted(set(init)))}
    start = _refine(nbrs, [ranked[s] for s in init])
    best: list = [None]
    leaves = [0]

    def search(colors: list[int]) -> None:
        if leaves[0] >= max_leaves:
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = next((c for c in sorted(counts) if counts[c] > 1), None)
        if target is None:
            leaves[0] += 1
            code = _encode(mat, colors)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        reps: list[int] = []
        for v in range(n):
            if colors[v] != target:
                continue
            if any(_twins(mat, r, v) for r in reps):
                continue
            reps.append(v)
            # individualised vertex sorts first within its old cell
            split = [2 * c + (1 if (c == target and w != v) else 0) for w, c in enumerate(colors)]
            search(_refine(nbrs, split))

    search(start)
    return best[0]


def canonical_key(G: Multigraph) -> bytes:
    """Isomorphism-invariant byte key of ``G`` (edge ids ignored)."""
    code = canonical_form(G.multiplicity_matrix())
    return repr((G.n, code)).encode()
