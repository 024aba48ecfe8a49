"""Connectivity of isotropic matroids: tau, kappa*, kappa, kappa_B.

tau and kappa* come from a four-way case split on the graph (empty;
single vertex or disconnected; connected with a pendant or twin pair;
connected without).  kappa comes from the cut-rank scan

    kappa = 1 + 2 * min{ c(X) : c(X) < min(|X|, |V-X|) }

defaulting to n when no subset qualifies, and kappa_B = (kappa+1)/2 when
kappa < n, else infinity.  A brute-force oracle over all 2^(3n) ground
set subsets backs the closed forms for small n.

Infinity is represented as math.inf, never a sentinel integer; JSON
serialization spells it "inf".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Union

from .errors import VerificationError
from .fixtures import fixture
from .graph import (
    Graph,
    connected_components,
    cut_rank_mask,
    find_pendant_or_twins,
    find_split,
)
from .isotropic import (
    GroundElement,
    IsotropicMatroid,
    build,
    chi,
    psi,
    tau as tau_of_vertices,
    element_key,
)
from .localeq import locally_equivalent_to

ConnValue = Union[int, float]  # finite values are ints; math.inf otherwise

SEPARATION_KINDS = ("ordinary", "cyclic", "vertical", "isotropic")


def conn_value_to_json(value: ConnValue) -> Union[int, str]:
    return "inf" if value == math.inf else int(value)


def conn_value_from_json(value: Union[int, str]) -> ConnValue:
    return math.inf if value == "inf" else int(value)


@dataclass(frozen=True)
class SeparationWitness:
    """A set certifying a k-separation.

    For the matroid kinds, `elements` is the separating ground set S and
    `lambda_value` is its connectivity value.  For the isotropic kind,
    `vertex_set` is the separating X and `lambda_value` holds its
    cut-rank, which plays the same role in the defining inequality.
    """

    kind: str
    k: int
    lambda_value: int
    elements: Optional[frozenset[GroundElement]] = None
    vertex_set: Optional[frozenset[int]] = None

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "lambda_value": self.lambda_value,
            "elements": None
            if self.elements is None
            else [
                {"vertex": e.vertex, "kind": e.kind}
                for e in sorted(self.elements, key=element_key)
            ],
            "vertex_set": None
            if self.vertex_set is None
            else sorted(self.vertex_set),
        }


class TauKappaStar(NamedTuple):
    tau: ConnValue
    kappa_star: int
    case: int
    witness: Optional[SeparationWitness]


def _matroid_loop_element(g: Graph) -> GroundElement:
    # the zero column of a single-vertex graph: chi if unlooped, psi if looped
    return psi(0) if g.has_loop(0) else chi(0)


def _parallel_pair(m: IsotropicMatroid) -> frozenset[GroundElement]:
    """First pair of identical columns, in ground order."""
    seen: dict[int, GroundElement] = {}
    for e in m.ground:
        col = m.column(e)
        other = seen.get(col)
        if other is not None:
            return frozenset((other, e))
        seen[col] = e
    raise VerificationError("expected identical columns but found none")


def tau_and_kappa_star(g: Graph) -> TauKappaStar:
    """Ordinary and cyclic connectivity, with the case label and witness.

    Case 1: empty graph, (inf, 0).  Case 2: single vertex or disconnected,
    (1, 1).  Case 3: connected with a pendant or twin pair, (2, 2).
    Case 4: connected with neither, (3, 3).
    """
    n = g.n
    if n == 0:
        return TauKappaStar(math.inf, 0, 1, None)
    m = build(g)
    if n == 1 or not g.is_connected():
        if n == 1:
            s = frozenset({_matroid_loop_element(g)})
        else:
            s = tau_of_vertices(connected_components(g)[0])
        w = SeparationWitness("ordinary", 1, m.lambda_of(s), elements=s)
        return TauKappaStar(1, 1, 2, w)
    if find_pendant_or_twins(g) is not None:
        s = _parallel_pair(m)
        w = SeparationWitness("ordinary", 2, m.lambda_of(s), elements=s)
        return TauKappaStar(2, 2, 3, w)
    s = tau_of_vertices([0])
    w = SeparationWitness("ordinary", 3, m.lambda_of(s), elements=s)
    return TauKappaStar(3, 3, 4, w)


def kappa(g: Graph) -> tuple[int, Optional[frozenset[int]]]:
    """Vertical connectivity with a minimizing vertex set when kappa < n.

    Scans the subsets containing vertex 0 (cut-rank is complement
    symmetric), stops early once a qualifying set of cut-rank 0 appears,
    and otherwise reports the first minimizing set in scan order.
    """
    n = g.n
    if n == 0:
        return 0, None
    best: Optional[int] = None
    best_mask = 0
    for s in range(1 << (n - 1)):
        xmask = (s << 1) | 1
        k = xmask.bit_count()
        if n - k == 0:
            continue
        c = cut_rank_mask(g, xmask)
        if c < min(k, n - k) and (best is None or c < best):
            best = c
            best_mask = xmask
            if c == 0:
                break
    if best is None:
        return n, None
    witness = frozenset(v for v in range(n) if (best_mask >> v) & 1)
    return 1 + 2 * best, witness


def kappa_b(g: Graph) -> ConnValue:
    """Isotropic connectivity: (kappa+1)/2 when kappa < n, else infinity."""
    k, _ = kappa(g)
    if k < g.n:
        return (k + 1) // 2
    return math.inf


def classify_vconnect(g: Graph) -> int:
    """The five-way vertical-connectivity case of g.

    1: n <= 3 and connected; 2: disconnected; 3: connected, n >= 4, not
    prime; 4: prime with kappa < n; 5: kappa = n with n >= 5, in which
    case local equivalence to C5 (n=5) or W5 (n=6) is asserted.
    """
    n = g.n
    if not g.is_connected():
        return 2
    if n <= 3:
        return 1
    if find_split(g) is not None:
        return 3
    k, _ = kappa(g)
    if k < n:
        return 4
    if n == 5:
        ok = locally_equivalent_to(g, fixture("c5"))
    elif n == 6:
        ok = locally_equivalent_to(g, fixture("w5"))
    else:
        raise VerificationError(f"kappa = n = {n} outside the C5/W5 range")
    if not ok:
        raise VerificationError("kappa = n but no equivalence to C5 or W5 found")
    return 5


@dataclass(frozen=True)
class ConnectivityReport:
    n: int
    tau: ConnValue
    kappa_star: int
    kappa: int
    kappa_b: ConnValue
    case_thm1: int
    case_thm2: int
    witnesses: dict

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "tau": conn_value_to_json(self.tau),
            "kappa_star": self.kappa_star,
            "kappa": self.kappa,
            "kappa_B": conn_value_to_json(self.kappa_b),
            "case_thm1": self.case_thm1,
            "case_thm2": self.case_thm2,
            "witnesses": {
                name: w.to_json_dict() for name, w in sorted(self.witnesses.items())
            },
        }


def analyze(g: Graph) -> ConnectivityReport:
    """Full connectivity report for one graph."""
    n = g.n
    tks = tau_and_kappa_star(g)
    kap, x = kappa(g)
    kb: ConnValue = (kap + 1) // 2 if kap < n else math.inf
    case2 = classify_vconnect(g)
    witnesses: dict[str, SeparationWitness] = {}
    if tks.witness is not None:
        witnesses["tau"] = tks.witness
        # the same set certifies the cyclic separation at the same level
        witnesses["kappa_star"] = SeparationWitness(
            "cyclic", tks.witness.k, tks.witness.lambda_value, elements=tks.witness.elements
        )
    if x is not None:
        c = (kap - 1) // 2
        witnesses["kappa"] = SeparationWitness(
            "vertical", kap, 2 * c, elements=tau_of_vertices(x), vertex_set=x
        )
        witnesses["kappa_B"] = SeparationWitness(
            "isotropic", c + 1, c, vertex_set=x
        )
    return ConnectivityReport(
        n=n,
        tau=tks.tau,
        kappa_star=tks.kappa_star,
        kappa=kap,
        kappa_b=kb,
        case_thm1=tks.case,
        case_thm2=case2,
        witnesses=witnesses,
    )


# -- brute-force oracle -------------------------------------------------------


def subset_rank_table(cols: Iterable[int]) -> bytearray:
    """GF(2) rank of every subset of the given columns, indexed by bitmask.

    Dynamic program over masks: each mask extends mask-minus-lowest-bit by
    one column, reusing that mask's XOR basis.
    """
    cols = list(cols)
    size = len(cols)
    if size > 18:
        raise ValueError("subset rank table limited to 18 columns")
    ranks = bytearray(1 << size)
    bases: list[tuple[int, ...]] = [()] * (1 << size)
    for mask in range(1, 1 << size):
        low = mask & -mask
        prev = mask ^ low
        v = cols[low.bit_length() - 1]
        b = bases[prev]
        while v:
            lowbit = v & -v
            for row in b:
                if row & -row == lowbit:
                    v ^= row
                    break
            else:
                break
        if v:
            bases[mask] = b + (v,)
            ranks[mask] = ranks[prev] + 1
        else:
            bases[mask] = b
            ranks[mask] = ranks[prev]
    return ranks


class BruteForceConnectivity(NamedTuple):
    tau: ConnValue
    kappa_star: int
    kappa: int


def brute_force_connectivity(m: IsotropicMatroid) -> BruteForceConnectivity:
    """tau, kappa*, kappa straight from the definitions.

    Scans every subset S of the ground set, takes min lambda(S)+1 over
    the sets meeting each kind's side conditions, and applies the
    no-separation defaults |W|-r(M) and r(M).
    """
    n = m.n
    w = 3 * n
    if w > 18:
        raise ValueError("brute force limited to 3n <= 18")
    rt = subset_rank_table(m._cols)
    full = (1 << w) - 1
    tau_min: ConnValue = math.inf
    kstar_min = w - n
    kappa_min = n
    for mask in range(1 << w):
        pc = mask.bit_count()
        r1 = rt[mask]
        r2 = rt[full ^ mask]
        lam = r1 + r2 - n
        if lam < min(pc, w - pc) and lam + 1 < tau_min:
            tau_min = lam + 1
        if r1 < pc and r2 < w - pc and lam + 1 < kstar_min:
            kstar_min = lam + 1
        if lam < min(r1, r2) and lam + 1 < kappa_min:
            kappa_min = lam + 1
    return BruteForceConnectivity(tau_min, kstar_min, kappa_min)


def brute_force_separations(
    m: IsotropicMatroid, kind: str, k: int
) -> list[SeparationWitness]:
    """Every k-separation of the requested kind, by exhaustive scan.

    Matroid kinds scan all 2^(3n) ground subsets (guarded at 3n <= 18);
    the isotropic kind scans the 2^n vertex subsets.  Results come in
    increasing bitmask order.
    """
    if kind not in SEPARATION_KINDS:
        raise ValueError(f"unknown separation kind {kind!r}")
    if k < 1:
        raise ValueError("k must be positive")
    n = m.n
    out: list[SeparationWitness] = []
    if kind == "isotropic":
        g = m.graph
        for xmask in range(1 << n):
            size = xmask.bit_count()
            if size < k or n - size < k:
                continue
            c = cut_rank_mask(g, xmask)
            if c < k:
                xs = frozenset(v for v in range(n) if (xmask >> v) & 1)
                out.append(SeparationWitness(kind, k, c, vertex_set=xs))
        return out
    w = 3 * n
    if w > 18:
        raise ValueError("brute force limited to 3n <= 18")
    rt = subset_rank_table(m._cols)
    full = (1 << w) - 1
    for mask in range(1 << w):
        pc = mask.bit_count()
        r1 = rt[mask]
        r2 = rt[full ^ mask]
        lam = r1 + r2 - n
        if lam >= k:
            continue
        if kind == "ordinary":
            ok = pc >= k and w - pc >= k
        elif kind == "cyclic":
            ok = r1 < pc and r2 < w - pc
        else:  # vertical
            ok = r1 >= k and r2 >= k
        if ok:
            out.append(
                SeparationWitness(kind, k, lam, elements=m.elements_of(mask))
            )
    return out
