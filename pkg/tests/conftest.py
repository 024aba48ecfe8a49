import random

from isomat.graph import (
    Graph,
    loop_complement,
    nonsimple_local_complement,
    simple_local_complement,
)


def random_graph(rng: random.Random, n: int, with_loops: bool = True) -> Graph:
    bits = n * (n - 1) // 2 + (n if with_loops else 0)
    return Graph.from_encoding(n, rng.randrange(1 << bits))


def random_equivalent(rng: random.Random, g: Graph, steps: int) -> Graph:
    """Apply a random sequence of complementations."""
    ops = (loop_complement, simple_local_complement, nonsimple_local_complement)
    for _ in range(steps):
        g = rng.choice(ops)(g, rng.randrange(g.n))
    return g
