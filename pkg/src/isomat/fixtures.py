"""Built-in named graphs used by the CLI, the service, and the test suite."""

from __future__ import annotations

from .graph import Graph

# Interlacement graph of an Euler circuit of K4,4; adjacency hard-coded
# row by row.  Its cut-rank on {4,5,6,7} is 2, it is prime, and its
# smallest transverse circuits have size 4.
_K44_ROWS = (
    (0, 1, 0, 0, 1, 0, 0, 1),
    (1, 0, 0, 0, 1, 1, 0, 0),
    (0, 0, 0, 1, 1, 1, 0, 0),
    (0, 0, 1, 0, 1, 0, 0, 1),
    (1, 1, 1, 1, 0, 0, 1, 0),
    (0, 1, 1, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1, 1, 0, 1),
    (1, 0, 0, 1, 0, 0, 1, 0),
)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel_graph(rim: int) -> Graph:
    """Wheel with `rim` cycle vertices 0..rim-1 plus hub vertex `rim`."""
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph.from_edges(rim + 1, edges)


def k44_interlacement() -> Graph:
    adj = tuple(sum(bit << j for j, bit in enumerate(row)) for row in _K44_ROWS)
    return Graph(8, adj)


FIXTURES = {
    "k2": lambda: Graph.from_edges(2, [(0, 1)]),
    "p4": lambda: path_graph(4),
    "c5": lambda: cycle_graph(5),
    "w5": lambda: wheel_graph(5),
    "w6": lambda: wheel_graph(6),
    "w7": lambda: wheel_graph(7),
    "k44": k44_interlacement,
}


def fixture(name: str) -> Graph:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; known: {sorted(FIXTURES)}") from None
