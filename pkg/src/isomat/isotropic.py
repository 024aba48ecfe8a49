"""The isotropic matroid of a looped simple graph.

The matroid is the binary matroid represented by the n x 3n matrix
``(I | A | A+I)`` over GF(2), where A is the adjacency matrix with the
loop mask on its diagonal.  Its ground set has three elements per vertex
v -- phi(v), chi(v), psi(v) -- whose columns are e_v, the A column of v,
and their sum.  Every vertex triple {phi(v), chi(v), psi(v)} is
dependent, and the sum of all 3n columns is zero.

A *subtransversal* is a set of ground elements meeting each vertex
triple at most once; a *transverse circuit* is a matroid circuit that is
a subtransversal.  In a binary matroid a circuit's columns sum to zero,
which is what most of the searches below exploit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .gf2 import Gf2Matrix, rank_of_bitrows
from .graph import Graph, cut_rank_mask

PHI = "phi"
CHI = "chi"
PSI = "psi"
KINDS = (PHI, CHI, PSI)
_KIND_INDEX = {PHI: 0, CHI: 1, PSI: 2}


@dataclass(frozen=True)
class GroundElement:
    """One element of the ground set: a vertex together with its kind."""

    vertex: int
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in _KIND_INDEX:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.vertex < 0:
            raise ValueError("vertex must be nonnegative")

    def __repr__(self) -> str:
        return f"{self.kind}({self.vertex})"


def phi(v: int) -> GroundElement:
    return GroundElement(v, PHI)


def chi(v: int) -> GroundElement:
    return GroundElement(v, CHI)


def psi(v: int) -> GroundElement:
    return GroundElement(v, PSI)


def element_key(e: GroundElement) -> tuple[int, int]:
    """Deterministic sort key: by vertex, then phi < chi < psi."""
    return (e.vertex, _KIND_INDEX[e.kind])


def vertex_triple(v: int) -> frozenset[GroundElement]:
    return frozenset((phi(v), chi(v), psi(v)))


def tau(x: Iterable[int]) -> frozenset[GroundElement]:
    """Union of the vertex triples of the given vertices."""
    out = set()
    for v in x:
        out.update(vertex_triple(v))
    return frozenset(out)


def is_subtransversal(s: Iterable[GroundElement]) -> bool:
    seen = set()
    for e in s:
        if e.vertex in seen:
            return False
        seen.add(e.vertex)
    return True


def build(g: Graph) -> "IsotropicMatroid":
    return IsotropicMatroid(g)


class IsotropicMatroid:
    """Rank oracle over subsets of the 3n-element ground set.

    Immutable after construction.  Subset ranks are memoized by column
    bitmask; correctness never depends on the cache.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = n = graph.n
        a_cols = [graph.adj[v] | (((graph.loops >> v) & 1) << v) for v in range(n)]
        cols = [1 << v for v in range(n)]
        cols += a_cols
        cols += [a_cols[v] ^ (1 << v) for v in range(n)]
        self._cols = tuple(cols)
        self.ground = tuple(
            GroundElement(v, kind) for kind in KINDS for v in range(n)
        )
        self.full_mask = (1 << (3 * n)) - 1
        self._rank_mask = lru_cache(maxsize=1 << 16)(self._rank_mask_uncached)

    # -- ground set bookkeeping -------------------------------------------

    def ground_set(self) -> frozenset[GroundElement]:
        return frozenset(self.ground)

    def position(self, e: GroundElement) -> int:
        if not 0 <= e.vertex < self.n:
            raise ValueError(f"{e!r} is not in the ground set (n={self.n})")
        return _KIND_INDEX[e.kind] * self.n + e.vertex

    def column(self, e: GroundElement) -> int:
        """The IAS column of e, packed over vertex positions."""
        return self._cols[self.position(e)]

    def mask_of(self, s: Iterable[GroundElement]) -> int:
        mask = 0
        for e in s:
            mask |= 1 << self.position(e)
        return mask

    def elements_of(self, mask: int) -> frozenset[GroundElement]:
        out = []
        while mask:
            low = mask & -mask
            out.append(self.ground[low.bit_length() - 1])
            mask ^= low
        return frozenset(out)

    # -- rank and connectivity ---------------------------------------------

    def _rank_mask_uncached(self, mask: int) -> int:
        cols = self._cols
        selected = []
        while mask:
            low = mask & -mask
            selected.append(cols[low.bit_length() - 1])
            mask ^= low
        return rank_of_bitrows(selected)

    def rank_of(self, s: Iterable[GroundElement]) -> int:
        return self._rank_mask(self.mask_of(s))

    def rank(self) -> int:
        """Rank of the whole matroid; always n (the phi block is I)."""
        return self.n

    def is_dependent(self, s: Iterable[GroundElement]) -> bool:
        mask = self.mask_of(s)
        return self._rank_mask(mask) < mask.bit_count()

    def lambda_mask(self, mask: int) -> int:
        return self._rank_mask(mask) + self._rank_mask(self.full_mask & ~mask) - self.n

    def lambda_of(self, s: Iterable[GroundElement]) -> int:
        """Connectivity function: r(S) + r(W - S) - r(M)."""
        return self.lambda_mask(self.mask_of(s))

    # -- circuits ------------------------------------------------------------

    def neighborhood_circuit(self, v: int) -> frozenset[GroundElement]:
        """phi of every neighbor of v, plus psi(v) if looped else chi(v)."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        own = psi(v) if self.graph.has_loop(v) else chi(v)
        return frozenset({phi(w) for w in self.graph.neighbors(v)} | {own})

    def associated_subtransversal(self, gamma: Iterable[GroundElement]) -> frozenset[GroundElement]:
        """Reduce gamma triple-by-triple: drop full triples, replace pairs.

        For each vertex whose triple lies entirely inside gamma the triple
        is removed; when exactly two elements are present they are replaced
        by the third.  The column sum is unchanged by either step.
        """
        by_vertex: dict[int, set[GroundElement]] = {}
        for e in gamma:
            self.position(e)  # validates membership
            by_vertex.setdefault(e.vertex, set()).add(e)
        out: set[GroundElement] = set()
        for v, elems in by_vertex.items():
            if len(elems) == 1:
                out.update(elems)
            elif len(elems) == 2:
                out.update(vertex_triple(v) - elems)
        return frozenset(out)

    def column_sum(self, s: Iterable[GroundElement]) -> int:
        total = 0
        for e in s:
            total ^= self.column(e)
        return total

    def min_transverse_circuit(
        self, size_cap: Optional[int] = None
    ) -> Optional[tuple[int, frozenset[GroundElement]]]:
        """Smallest transverse circuit: size q plus one witness circuit.

        Searches sizes 1, 2, ... for a subtransversal whose columns sum to
        zero.  Because all smaller sizes were already ruled out, the first
        hit is a circuit.  Every vertex has a neighborhood circuit of size
        degree+1, so the search always succeeds by size n.

        Returns None when size_cap is given and q would exceed it.
        Raises ValueError on the empty graph.
        """
        n = self.n
        if n == 0:
            raise ValueError("the empty graph has no transverse circuits")
        cap = n if size_cap is None else min(size_cap, n)
        cols = self._cols
        for size in range(1, cap + 1):
            for vs in itertools.combinations(range(n), size):
                for kinds in itertools.product(range(3), repeat=size):
                    total = 0
                    for v, k in zip(vs, kinds):
                        total ^= cols[k * n + v]
                    if total == 0:
                        witness = frozenset(
                            GroundElement(v, KINDS[k]) for v, k in zip(vs, kinds)
                        )
                        return size, witness
        return None

    def contains_transverse_circuit(self, x: Iterable[int]) -> bool:
        """Whether tau(X) contains a transverse circuit.

        Equivalent to r(tau(X)) < 2|X|, i.e. cut-rank(X) < |X|.
        """
        xmask = 0
        for v in x:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range")
            xmask |= 1 << v
        return cut_rank_mask(self.graph, xmask) < xmask.bit_count()

    def transverse_circuits_in(self, x: Iterable[int]) -> list[frozenset[GroundElement]]:
        """All transverse circuits contained in tau(X).

        Enumerates every subtransversal of tau(X) (four choices per
        vertex), keeps the nonempty zero-sum ones and filters them down to
        the minimal ones.  Exponential in |X|; intended for |X| <= 12.
        """
        vs = sorted(set(x))
        for v in vs:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range")
        n = self.n
        cols = self._cols
        zero_sum: list[frozenset[GroundElement]] = []
        choices: list[Optional[int]] = [None, 0, 1, 2]

        def descend(i: int, total: int, picked: list[GroundElement]) -> None:
            if i == len(vs):
                if picked and total == 0:
                    zero_sum.append(frozenset(picked))
                return
            v = vs[i]
            for c in choices:
                if c is None:
                    descend(i + 1, total, picked)
                else:
                    picked.append(GroundElement(v, KINDS[c]))
                    descend(i + 1, total ^ cols[c * n + v], picked)
                    picked.pop()

        descend(0, 0, [])
        zero_sum.sort(key=lambda s: (len(s), sorted(map(element_key, s))))
        minimal: list[frozenset[GroundElement]] = []
        for cand in zero_sum:
            if not any(kept <= cand for kept in minimal):
                minimal.append(cand)
        return minimal

    # -- closures ------------------------------------------------------------

    def closure(self, s: Iterable[GroundElement]) -> frozenset[GroundElement]:
        """Matroid closure: all x with r(S + x) = r(S)."""
        mask = self.mask_of(s)
        base = self._rank_mask(mask)
        out = mask
        rest = self.full_mask & ~mask
        while rest:
            low = rest & -rest
            rest ^= low
            if self._rank_mask(mask | low) == base:
                out |= low
        return self.elements_of(out)

    def dual_closure(self, s: Iterable[GroundElement]) -> frozenset[GroundElement]:
        """Closure in the dual matroid, via r*(T) = |T| + r(W-T) - r(M)."""
        mask = self.mask_of(s)
        comp = self.full_mask & ~mask
        comp_rank = self._rank_mask(comp)
        out = mask
        rest = comp
        while rest:
            low = rest & -rest
            rest ^= low
            if self._rank_mask(comp & ~low) == comp_rank - 1:
                out |= low
        return self.elements_of(out)

    def full_closure(self, s: Iterable[GroundElement]) -> frozenset[GroundElement]:
        """Least superset of S closed in both the matroid and its dual."""
        current = frozenset(s)
        while True:
            nxt = self.dual_closure(self.closure(current))
            if nxt == current:
                return current
            current = nxt

    # -- sequential 3-separations ---------------------------------------------

    def is_sequential_3sep(self, s: Iterable[GroundElement]) -> bool:
        """Whether an ordinary 3-separation is sequential.

        S is sequential when S or its complement can be ordered so every
        prefix has connectivity below 3.  Greedy prefix extension is tried
        first on both sides; a failed greedy falls back to an exhaustive
        ordering search whenever the side has at most 8 elements.  Beyond
        that the greedy verdict stands.

        Raises ValueError unless S is an ordinary 3-separation.
        """
        mask = self.mask_of(s)
        comp = self.full_mask & ~mask
        if self.lambda_mask(mask) >= 3 or mask.bit_count() < 3 or comp.bit_count() < 3:
            raise ValueError("S is not an ordinary 3-separation")
        for side in (mask, comp):
            if self._greedy_sequential(side):
                return True
        for side in (mask, comp):
            if side.bit_count() <= 8 and self._exhaustive_sequential(side):
                return True
        return False

    def _greedy_sequential(self, side_mask: int) -> bool:
        prefix = 0
        remaining = side_mask
        for _ in range(side_mask.bit_count()):
            rest = remaining
            while rest:
                low = rest & -rest
                rest ^= low
                if self.lambda_mask(prefix | low) < 3:
                    prefix |= low
                    remaining ^= low
                    break
            else:
                return False
        return True

    def _exhaustive_sequential(self, side_mask: int) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            m = stack.pop()
            if m == side_mask:
                return True
            rest = side_mask & ~m
            while rest:
                low = rest & -rest
                rest ^= low
                m2 = m | low
                if m2 not in seen and self.lambda_mask(m2) < 3:
                    seen.add(m2)
                    stack.append(m2)
        return False


def ias_matrix(m: IsotropicMatroid) -> Gf2Matrix:
    """The representing matrix, rows labeled by vertices and columns by
    ground elements."""
    n = m.n
    bits = []
    for v in range(n):
        row = 0
        for p, col in enumerate(m._cols):
            if (col >> v) & 1:
                row |= 1 << p
        bits.append(row)
    return Gf2Matrix(tuple(range(n)), m.ground, tuple(bits))
