import random

import pytest

from chromzeros.graph import Multigraph


def random_graph(rng: random.Random, n: int, p: float) -> Multigraph:
    return Multigraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_multigraph(rng: random.Random, n: int, m: int, loops: bool = True) -> Multigraph:
    pairs = []
    for _ in range(m):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v and not loops:
            continue
        pairs.append((u, v))
    return Multigraph.from_edges(n, pairs)


@pytest.fixture
def rng():
    return random.Random(12345)
