"""Seeded random graph corpus shared across tests."""

from __future__ import annotations

import random

from graphcovers.graphs import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def small_corpus(seed: int, count: int, max_n: int,
                 ps=(0.25, 0.45, 0.65)) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        p = rng.choice(ps)
        out.append(random_graph(rng, n, p))
    return out
