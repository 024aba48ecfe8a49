"""Local-equivalence orbits and degree minimization over the class.

Two graphs on the same vertex set are locally equivalent when one is
reachable from the other by loop complementations and local
complementations.  Loop complement and simple local complement generate
the whole relation (the non-simple local complement is their composite),
so orbit enumeration uses just those 2n generators.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import VerificationError
from .graph import Graph, loop_complement, simple_local_complement
from .isotropic import build

DEFAULT_MEMBER_CAP = 5_000_000


def successors(g: Graph) -> list[Graph]:
    """Images of g under each generator, in a fixed order."""
    out = [loop_complement(g, v) for v in range(g.n)]
    out += [simple_local_complement(g, v) for v in range(g.n)]
    return out


@dataclass(frozen=True)
class Orbit:
    """A local-equivalence class on a fixed vertex set.

    Members are stored as graph encodings; truncated marks a BFS aborted
    by the member cap, in which case members is only a partial closure.
    """

    seed: Graph
    members: frozenset[int]
    min_degree: Optional[int]
    representative: Graph
    truncated: bool

    @property
    def size(self) -> int:
        return len(self.members)


def orbit(g: Graph, member_cap: int = DEFAULT_MEMBER_CAP) -> Orbit:
    """BFS closure of g under loop and simple local complementation."""
    visited = {g.encoding()}
    queue = deque([g])
    best_deg = g.min_degree()
    best_rep = g
    truncated = False
    while queue and not truncated:
        h = queue.popleft()
        for nb in successors(h):
            enc = nb.encoding()
            if enc in visited:
                continue
            if len(visited) >= member_cap:
                truncated = True
                break
            visited.add(enc)
            queue.append(nb)
            d = nb.min_degree()
            if best_deg is not None and d < best_deg:
                best_deg = d
                best_rep = nb
    return Orbit(g, frozenset(visited), best_deg, best_rep, truncated)


def min_degree_over_class(
    g: Graph, member_cap: int = DEFAULT_MEMBER_CAP
) -> tuple[int, Graph]:
    """Minimum vertex degree over all graphs locally equivalent to g.

    The value is q - 1 for q the smallest transverse circuit size; the
    orbit is searched breadth-first until a member achieving that degree
    turns up, and that member is returned as the representative.
    """
    found = build(g).min_transverse_circuit()
    assert found is not None
    target = found[0] - 1
    if g.min_degree() == target:
        return target, g
    visited = {g.encoding()}
    queue = deque([g])
    while queue:
        h = queue.popleft()
        for nb in successors(h):
            enc = nb.encoding()
            if enc in visited:
                continue
            if len(visited) >= member_cap:
                raise RuntimeError("member cap hit before the degree bound was attained")
            visited.add(enc)
            d = nb.min_degree()
            if d == target:
                return target, nb
            if d is not None and d < target:
                raise VerificationError(
                    f"orbit member with degree {d} below the circuit bound {target}"
                )
            queue.append(nb)
    raise VerificationError("orbit exhausted without attaining the degree bound")


class LocalEquivalenceChecker:
    """Repeated 'is g locally equivalent to target' queries with caching.

    Accepts graphs isomorphic to a graph locally equivalent to the target,
    i.e. orbit(g) is searched for any relabeling of the target.  Visited
    encodings are cached: every graph seen during a successful search lies
    in the same orbit and is therefore itself equivalent.
    """

    def __init__(self, target: Graph, member_cap: int = DEFAULT_MEMBER_CAP):
        if target.n > 6:
            raise ValueError("permutation search is limited to n <= 6")
        self.target = target
        self.member_cap = member_cap
        self.targets = frozenset(
            target.permuted(sigma).encoding()
            for sigma in itertools.permutations(range(target.n))
        )
        self._accepted: set[int] = set()
        self._rejected: set[int] = set()

    def check(self, g: Graph) -> bool:
        if g.n != self.target.n:
            return False
        enc = g.encoding()
        if enc in self._accepted:
            return True
        if enc in self._rejected:
            return False
        if enc in self.targets:
            self._accepted.add(enc)
            return True
        visited = {enc}
        queue = deque([g])
        hit = False
        while queue and not hit:
            h = queue.popleft()
            for nb in successors(h):
                e = nb.encoding()
                if e in visited:
                    continue
                if len(visited) >= self.member_cap:
                    raise RuntimeError("member cap exceeded during equivalence search")
                visited.add(e)
                if e in self.targets:
                    hit = True
                    break
                queue.append(nb)
        if hit:
            self._accepted |= visited
        else:
            self._rejected |= visited
        return hit


def locally_equivalent_to(
    g: Graph, target: Graph, member_cap: int = DEFAULT_MEMBER_CAP
) -> bool:
    """One-shot equivalence check against a named target graph.

    Isomorphism is absorbed by brute-force permutation of the target, so
    both graphs must have at most 6 vertices.
    """
    if g.n > 6:
        raise ValueError("permutation search is limited to n <= 6")
    return LocalEquivalenceChecker(target, member_cap).check(g)
