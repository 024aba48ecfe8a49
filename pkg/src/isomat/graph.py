"""Looped simple graphs on vertex set {0..n-1}.

Adjacency is kept as one neighbor bitmask per vertex (symmetric, zero
diagonal); loop status lives in a separate bitmask and never contributes
to neighborhoods or degrees.  Graphs are immutable; complementation
operations return new graphs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .gf2 import Gf2Matrix

_HEADER_RE = re.compile(r"^n=(\d+)\s+loops=([01]*)$")


@lru_cache(maxsize=32)
def _pair_table(n: int) -> tuple[tuple[int, int], ...]:
    """Upper-triangle pairs (i, j), i < j, in lexicographic order."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def _mask_of(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """A looped simple graph: neighbor bitmasks plus a loop bitmask."""

    n: int
    adj: tuple[int, ...]
    loops: int = 0

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency row count must equal n")
        full = (1 << self.n) - 1
        if not 0 <= self.loops <= full:
            raise ValueError("loop mask out of range")
        for v, row in enumerate(self.adj):
            if not 0 <= row <= full:
                raise ValueError("adjacency row out of range")
            if (row >> v) & 1:
                raise ValueError(f"vertex {v} adjacent to itself")
        for v in range(self.n):
            for w in _bits(self.adj[v]):
                if not (self.adj[w] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v},{w})")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = (), loops: Iterable[int] = ()) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops are given via `loops`, not as edges")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), _mask_of(loops, n))

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        """Parse the one-header-then-edge-lines text format."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty graph text")
        m = _HEADER_RE.match(lines[0])
        if m is None:
            raise ValueError(f"bad header line: {lines[0]!r}")
        n = int(m.group(1))
        loopstr = m.group(2)
        if len(loopstr) != n:
            raise ValueError(f"loop bitstring length {len(loopstr)} != n={n}")
        loops = [v for v, ch in enumerate(loopstr) if ch == "1"]
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ValueError(f"bad edge line: {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
        return cls.from_edges(n, edges, loops)

    @classmethod
    def from_encoding(cls, n: int, code: int) -> "Graph":
        """Inverse of encoding(): upper-triangle bits then loop bits."""
        pairs = _pair_table(n)
        npairs = len(pairs)
        if not 0 <= code < 1 << (npairs + n):
            raise ValueError("encoding out of range")
        adj = [0] * n
        m = code & ((1 << npairs) - 1)
        while m:
            low = m & -m
            i, j = pairs[low.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            m ^= low
        return cls(n, tuple(adj), code >> npairs)

    @classmethod
    def from_hex(cls, text: str) -> "Graph":
        """Parse the compact "n:hex" encoding used in corpus files."""
        try:
            left, right = text.strip().split(":")
            return cls.from_encoding(int(left), int(right, 16))
        except (ValueError, IndexError) as exc:
            raise ValueError(f"bad hex graph encoding: {text!r}") from exc

    # -- serialization --------------------------------------------------

    def to_text(self) -> str:
        loopstr = "".join("1" if (self.loops >> v) & 1 else "0" for v in range(self.n))
        lines = [f"n={self.n} loops={loopstr}"]
        for u in range(self.n):
            for v in _bits(self.adj[u]):
                if v > u:
                    lines.append(f"{u} {v}")
        return "\n".join(lines) + "\n"

    def encoding(self) -> int:
        """Fixed-width integer key: upper-triangle edge bits, then loop bits."""
        pairs = _pair_table(self.n)
        code = 0
        for k, (i, j) in enumerate(pairs):
            if (self.adj[i] >> j) & 1:
                code |= 1 << k
        return code | (self.loops << len(pairs))

    def to_hex(self) -> str:
        return f"{self.n}:{self.encoding():x}"

    # -- queries ---------------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def neighbor_mask(self, v: int) -> int:
        return self.adj[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def min_degree(self) -> Optional[int]:
        if self.n == 0:
            return None
        return min(row.bit_count() for row in self.adj)

    def has_loop(self, v: int) -> bool:
        return bool((self.loops >> v) & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        full = (1 << self.n) - 1
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == full

    def permuted(self, sigma: Iterable[int]) -> "Graph":
        """Relabel: old vertex v becomes sigma[v]."""
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(self.n)):
            raise ValueError("sigma is not a permutation of the vertices")
        adj = [0] * self.n
        loops = 0
        for v in range(self.n):
            for w in _bits(self.adj[v]):
                adj[sigma[v]] |= 1 << sigma[w]
            if (self.loops >> v) & 1:
                loops |= 1 << sigma[v]
        return Graph(self.n, tuple(adj), loops)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by least vertex."""
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(frozenset(_bits(seen)))
        remaining &= ~seen
    return comps


def adjacency_matrix(g: Graph) -> Gf2Matrix:
    """The n-by-n adjacency matrix; diagonal entries mark looped vertices."""
    labels = tuple(range(g.n))
    bits = tuple(g.adj[v] | (((g.loops >> v) & 1) << v) for v in range(g.n))
    return Gf2Matrix(labels, labels, bits)


def loop_complement(g: Graph, v: int) -> Graph:
    """Reverse the loop status of v; edges are untouched."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return Graph(g.n, g.adj, g.loops ^ (1 << v))


def simple_local_complement(g: Graph, v: int) -> Graph:
    """Toggle all adjacencies between distinct neighbors of v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    nb = g.adj[v]
    adj = list(g.adj)
    for w in _bits(nb):
        adj[w] ^= nb & ~(1 << w)
    return Graph(g.n, tuple(adj), g.loops)


def nonsimple_local_complement(g: Graph, v: int) -> Graph:
    """Simple local complement at v, then loop complements at all of N(v).

    N(v) is read from the input graph; the simple step never changes the
    neighborhood of v, so the snapshot only makes the order explicit.
    """
    nb = g.adj[v]
    h = simple_local_complement(g, v)
    return Graph(h.n, h.adj, h.loops ^ nb)


def cut_rank_mask(g: Graph, xmask: int) -> int:
    """Cut-rank of the vertex set given as a bitmask.

    GF(2) rank of the adjacency block between X and its complement; the
    diagonal never enters, so loops are irrelevant.
    """
    rest = ((1 << g.n) - 1) & ~xmask
    pivots: dict[int, int] = {}
    rank = 0
    adj = g.adj
    m = rest
    while m:
        low = m & -m
        m ^= low
        r = adj[low.bit_length() - 1] & xmask
        while r:
            lb = r & -r
            p = pivots.get(lb)
            if p is None:
                pivots[lb] = r
                rank += 1
                break
            r ^= p
    return rank


def cut_rank(g: Graph, x: Iterable[int]) -> int:
    return cut_rank_mask(g, _mask_of(x, g.n))


@dataclass(frozen=True)
class PendantTwinWitness:
    kind: str  # "pendant" or "twins"
    v: int
    w: int


def find_pendant_or_twins(g: Graph) -> Optional[PendantTwinWitness]:
    """First pendant vertex or twin pair, scanning open neighborhoods only.

    Pendants are reported before twins; loop status is ignored throughout.
    """
    for v in range(g.n):
        row = g.adj[v]
        if row and row & (row - 1) == 0:
            return PendantTwinWitness("pendant", v, row.bit_length() - 1)
    for v in range(g.n):
        for w in range(v + 1, g.n):
            if g.adj[v] & ~(1 << w) == g.adj[w] & ~(1 << v):
                return PendantTwinWitness("twins", v, w)
    return None


@dataclass(frozen=True)
class Split:
    """A bipartition with cut-rank at most 1; crossing edges form W1 x W2."""

    v1: frozenset[int]
    w1: frozenset[int]
    v2: frozenset[int]
    w2: frozenset[int]


def find_split(g: Graph) -> Optional[Split]:
    """First split in canonical scan order, or None when g is prime.

    Scans every bipartition with both sides of size >= 2 (the side
    containing vertex 0 is canonical) and tests cut-rank <= 1.  The
    exhaustive scan is the oracle of record; fine up to n around 24.
    """
    n = g.n
    if n < 4:
        return None
    full = (1 << n) - 1
    for s in range(1 << (n - 1)):
        v1 = (s << 1) | 1
        k = v1.bit_count()
        if k < 2 or n - k < 2:
            continue
        if cut_rank_mask(g, v1) > 1:
            continue
        v2 = full & ~v1
        w1 = frozenset(v for v in _bits(v1) if g.adj[v] & v2)
        w2 = frozenset(v for v in _bits(v2) if g.adj[v] & v1)
        return Split(frozenset(_bits(v1)), w1, frozenset(_bits(v2)), w2)
    return None
