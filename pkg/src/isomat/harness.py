"""Exhaustive enumeration campaigns over small labeled graphs.

Each campaign sweeps every labeled graph of the requested orders,
applies one theorem's predicate per graph, and aggregates pass/fail
counts plus replayable counterexample encodings.  Sweeps are over
labeled graphs (no isomorphism reduction): the statements are
universally quantified and labeled enumeration is embarrassingly
parallel.  Loop patterns are off by default; the connectivity campaigns
accept a flag to include them, since everything in scope reaches the
matroid through the loop-insensitive cut-rank.
"""

from __future__ import annotations

import json
import math
import multiprocessing
import os
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional

from .connectivity import kappa, tau_and_kappa_star
from .errors import VerificationError
from .fixtures import FIXTURES, fixture, k44_interlacement
from .graph import Graph, cut_rank_mask, find_pendant_or_twins, find_split, _pair_table
from .isotropic import build, tau
from .localeq import LocalEquivalenceChecker, min_degree_over_class

CHUNK_SIZE = 1 << 15
CHECKPOINT_VERSION = 1


def k44_fixture() -> Graph:
    """The 8-vertex interlacement graph of an Euler circuit of K4,4."""
    return k44_interlacement()


def count_labeled_graphs(n: int, with_loops: bool = False) -> int:
    bits = n * (n - 1) // 2 + (n if with_loops else 0)
    return 1 << bits


def enumerate_labeled_graphs(n: int, with_loops: bool = False) -> Iterator[Graph]:
    """All labeled graphs of order n in increasing encoding order."""
    if n > 8:
        raise ValueError("full sweeps are limited to n <= 8")
    for code in range(count_labeled_graphs(n, with_loops)):
        yield Graph.from_encoding(n, code)


# -- small-transverse-circuit predicate ----------------------------------------


def _rows_have_small_circuit(rows: list[int], n: int, loops: int, cap: int) -> bool:
    """Zero-sum subtransversal of size <= cap among the 3n columns.

    Exact for cap <= 3.  A vertex of degree < cap short-circuits: its
    neighborhood circuit has size degree+1.
    """
    for r in rows:
        if r.bit_count() < cap:
            return True
    cols: list[tuple[int, int]] = []
    colmap: dict[int, list[int]] = {}
    for v in range(n):
        ev = 1 << v
        av = rows[v] | (((loops >> v) & 1) << v)
        for c in (ev, av, av ^ ev):
            if c == 0:
                return True
            cols.append((c, v))
            colmap.setdefault(c, []).append(v)
    if cap < 2:
        return False
    for owners in colmap.values():
        if len(set(owners)) >= 2:
            return True
    if cap < 3:
        return False
    total = len(cols)
    for a in range(total):
        ca, va = cols[a]
        for b in range(a + 1, total):
            cb, vb = cols[b]
            if va == vb:
                continue
            owners = colmap.get(ca ^ cb)
            if owners:
                for w in owners:
                    if w != va and w != vb:
                        return True
    return False


def has_small_transverse_circuit(g: Graph, cap: int) -> bool:
    """Whether the isotropic matroid has a transverse circuit of size <= cap."""
    if g.n == 0:
        raise ValueError("the empty graph has no transverse circuits")
    if cap < 1:
        return False
    if cap <= 3:
        return _rows_have_small_circuit(list(g.adj), g.n, g.loops, cap)
    if g.min_degree() < cap:
        return True
    return build(g).min_transverse_circuit(size_cap=cap) is not None


# -- per-graph theorem predicates ----------------------------------------------


def _witness_ok(m, witness) -> bool:
    s = witness.elements
    lam = m.lambda_of(s)
    if lam != witness.lambda_value or lam >= witness.k:
        return False
    size = len(s)
    comp_size = 3 * m.n - size
    if size < witness.k or comp_size < witness.k:
        return False
    # the same set must separate cyclically: both sides dependent
    comp = m.full_mask & ~m.mask_of(s)
    return m._rank_mask(m.mask_of(s)) < size and m._rank_mask(comp) < comp_size


def _check_cconnect(g: Graph) -> tuple[bool, str, tuple[str, ...]]:
    n = g.n
    conn = g.is_connected()
    pt = find_pendant_or_twins(g)
    conds = (
        n == 0,
        n >= 1 and (n == 1 or not conn),
        n > 1 and conn and pt is not None,
        n > 1 and conn and pt is None,
    )
    if sum(conds) != 1:
        return False, "overlap", ()
    case = conds.index(True) + 1
    expected = {1: (math.inf, 0), 2: (1, 1), 3: (2, 2), 4: (3, 3)}[case]
    result = tau_and_kappa_star(g)
    ok = (result.tau, result.kappa_star) == expected and result.case == case
    if ok and n > 1 and conn:
        # cross-check: a 2-circuit exists iff there is a pendant or twin pair
        m = build(g)
        has_parallel = len(set(m._cols)) < 3 * n
        ok = has_parallel == (pt is not None)
        if ok and result.witness is not None:
            ok = _witness_ok(m, result.witness)
    return ok, f"case{case}", ()


def _check_vconnect(g: Graph) -> tuple[bool, str, tuple[str, ...]]:
    n = g.n
    conn = g.is_connected()
    prime = find_split(g) is None
    k, x = kappa(g)
    conds = (
        n <= 3 and conn,
        not conn,
        n >= 4 and conn and not prime,
        n >= 5 and prime and k < n,
        n >= 5 and k == n,
    )
    stats = (f"n={n} kappa={k}",)
    if sum(conds) != 1:
        return False, "overlap", stats
    case = conds.index(True) + 1
    if case == 1:
        ok = k == n
    elif case == 2:
        ok = k == 1
    elif case == 3:
        ok = k == 3
    elif case == 4:
        ok = k % 2 == 1 and k >= 5
    else:
        target = {5: "c5", 6: "w5"}.get(n)
        ok = target is not None and _leq_checker(target).check(g)
    if ok and x is not None:
        c = (k - 1) // 2
        xm = sum(1 << v for v in x)
        ok = cut_rank_mask(g, xm) == c and c < min(len(x), n - len(x))
    return ok, f"case{case}", stats


def _check_expdegree(g: Graph) -> tuple[bool, str, tuple[str, ...]]:
    n = g.n
    m = build(g)
    cond2 = m.min_transverse_circuit(size_cap=n // 2) is not None
    cond4 = kappa(g)[0] < n
    cond3 = False
    for s in range(1 << (n - 1)):
        xmask = (s << 1) | 1
        size = xmask.bit_count()
        if size == n:
            continue
        x = [v for v in range(n) if (xmask >> v) & 1]
        comp = [v for v in range(n) if not (xmask >> v) & 1]
        if m.rank_of(tau(x)) < 2 * size and m.rank_of(tau(comp)) < 2 * (n - size):
            cond3 = True
            break
    d, _rep = min_degree_over_class(g)
    cond1 = 2 * d < n - 1
    ok = cond1 == cond2 == cond3 == cond4
    return ok, "holds" if cond2 else "fails", ()


_LEQ_CHECKERS: dict[str, LocalEquivalenceChecker] = {}


def _leq_checker(name: str) -> LocalEquivalenceChecker:
    checker = _LEQ_CHECKERS.get(name)
    if checker is None:
        checker = LocalEquivalenceChecker(fixture(name))
        _LEQ_CHECKERS[name] = checker
    return checker


# -- campaign machinery ----------------------------------------------------------


@dataclass
class CampaignResult:
    """Aggregate outcome of one verification sweep.

    failures holds replayable "n:hex" graph encodings; a campaign passes
    iff it is empty.  No timing fields: identical inputs must serialize
    byte-identically.
    """

    name: str
    params: dict
    graphs_checked: int = 0
    case_counts: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "campaign": self.name,
            "params": self.params,
            "graphs_checked": self.graphs_checked,
            "case_counts": dict(sorted(self.case_counts.items())),
            "stats": dict(sorted(self.stats.items())),
            "failures": list(self.failures),
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


def write_report(result: CampaignResult, path) -> None:
    """JSON-lines report: one record per counterexample, then the summary."""
    lines = [json.dumps({"type": "counterexample", "graph": h}, sort_keys=True) for h in result.failures]
    lines.append(json.dumps({"type": "summary", **result.to_json_dict()}, sort_keys=True))
    Path(path).write_text("\n".join(lines) + "\n")


_CAMPAIGN_CHECKERS = {
    "cconnect": _check_cconnect,
    "vconnect": _check_vconnect,
    "expdegree": _check_expdegree,
}


def _run_chunk(args: tuple) -> tuple[int, dict, dict, list[str]]:
    name, n, lo, hi, with_loops = args
    checked = hi - lo
    cases: Counter = Counter()
    stats: Counter = Counter()
    failures: list[str] = []
    if name in ("halfcirc", "lowdeg"):
        cap = n // 2
        pairs = _pair_table(n)
        for code in range(lo, hi):
            rows = [0] * n
            m = code
            while m:
                low = m & -m
                i, j = pairs[low.bit_length() - 1]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                m ^= low
            if not _rows_have_small_circuit(rows, n, 0, cap):
                failures.append(f"{n}:{code:x}")
        cases["checked"] = checked
        return checked, dict(cases), dict(stats), failures
    check = _CAMPAIGN_CHECKERS[name]
    for code in range(lo, hi):
        g = Graph.from_encoding(n, code)
        try:
            ok, case, sts = check(g)
        except VerificationError:
            ok, case, sts = False, "error", ()
        cases[case] += 1
        for s in sts:
            stats[s] += 1
        if not ok:
            failures.append(g.to_hex())
    return checked, dict(cases), dict(stats), failures


def _chunks_for(ns: list[int], with_loops: bool) -> list[tuple[int, int, int]]:
    chunks = []
    for n in ns:
        total = count_labeled_graphs(n, with_loops)
        for lo in range(0, total, CHUNK_SIZE):
            chunks.append((n, lo, min(lo + CHUNK_SIZE, total)))
    return chunks


def _load_checkpoint(path, name: str, params: dict) -> tuple[int, CampaignResult]:
    p = Path(path)
    if not p.exists():
        return 0, CampaignResult(name, params)
    data = json.loads(p.read_text())
    if data.get("version") != CHECKPOINT_VERSION:
        raise ValueError("unsupported checkpoint version")
    if data.get("campaign") != name or data.get("params") != params:
        raise ValueError("checkpoint does not match this campaign")
    agg = data["aggregate"]
    result = CampaignResult(
        name,
        params,
        graphs_checked=agg["graphs_checked"],
        case_counts=dict(agg["case_counts"]),
        stats=dict(agg["stats"]),
        failures=list(agg["failures"]),
    )
    return data["chunks_done"], result


def _save_checkpoint(path, name: str, params: dict, chunks_done: int, result: CampaignResult) -> None:
    data = {
        "version": CHECKPOINT_VERSION,
        "campaign": name,
        "params": params,
        "chunk_size": CHUNK_SIZE,
        "chunks_done": chunks_done,
        "aggregate": {
            "graphs_checked": result.graphs_checked,
            "case_counts": result.case_counts,
            "stats": result.stats,
            "failures": result.failures,
        },
    }
    Path(path).write_text(json.dumps(data, sort_keys=True))


def _execute(
    name: str,
    ns: list[int],
    with_loops: bool,
    threads: int = 1,
    checkpoint_path=None,
) -> CampaignResult:
    params = {"ns": ns, "with_loops": with_loops}
    if checkpoint_path is not None:
        done, result = _load_checkpoint(checkpoint_path, name, params)
    else:
        done, result = 0, CampaignResult(name, params)
    chunks = _chunks_for(ns, with_loops)
    todo = [(name, n, lo, hi, with_loops) for n, lo, hi in chunks[done:]]

    def consume(outcomes):
        nonlocal done
        for checked, cases, stats, failures in outcomes:
            result.graphs_checked += checked
            for key, cnt in cases.items():
                result.case_counts[key] = result.case_counts.get(key, 0) + cnt
            for key, cnt in stats.items():
                result.stats[key] = result.stats.get(key, 0) + cnt
            result.failures.extend(failures)
            done += 1
            if checkpoint_path is not None:
                _save_checkpoint(checkpoint_path, name, params, done, result)

    if threads > 1 and len(todo) > 1:
        with multiprocessing.Pool(processes=threads) as pool:
            consume(pool.imap(_run_chunk, todo))
    else:
        consume(map(_run_chunk, todo))
    result.failures.sort()
    return result


def _default_threads() -> int:
    env = os.environ.get("ISOMAT_THREADS")
    if env:
        return max(1, int(env))
    return 1


# -- campaign entry points --------------------------------------------------------


def verify_cconnect(
    n_max: int, with_loops: bool = False, threads: int = 1, checkpoint_path=None
) -> CampaignResult:
    """Four-case ordinary/cyclic connectivity sweep over all orders <= n_max."""
    if not 0 <= n_max <= 6:
        raise ValueError("cconnect sweep supports n_max in 0..6")
    return _execute("cconnect", list(range(n_max + 1)), with_loops, threads, checkpoint_path)


def verify_vconnect(
    n_max: int, with_loops: bool = False, threads: int = 1, checkpoint_path=None
) -> CampaignResult:
    """Five-case vertical connectivity sweep over all orders <= n_max."""
    if not 0 <= n_max <= 6:
        raise ValueError("vconnect sweep supports n_max in 0..6")
    return _execute("vconnect", list(range(n_max + 1)), with_loops, threads, checkpoint_path)


def verify_expdegree(
    n_min: int = 4, n_max: int = 6, threads: int = 1, checkpoint_path=None
) -> CampaignResult:
    """Equivalence of the four degree/circuit/connectivity conditions."""
    if not 4 <= n_min <= n_max <= 6:
        raise ValueError("expdegree sweep supports 4 <= n_min <= n_max <= 6")
    return _execute("expdegree", list(range(n_min, n_max + 1)), False, threads, checkpoint_path)


def verify_halfcirc(n: int = 7, threads: int = 1, checkpoint_path=None) -> CampaignResult:
    """Every simple 7-vertex graph has a transverse circuit of size <= n/2."""
    if n != 7:
        raise ValueError("the half-size circuit sweep is supported for n = 7 only")
    return _execute("halfcirc", [n], False, threads, checkpoint_path)


def verify_lowdeg(n: int = 7, threads: int = 1, checkpoint_path=None) -> CampaignResult:
    """Every simple 7-vertex graph is class-equivalent to one of min degree < 3.

    Same per-graph predicate as the half-size circuit sweep: a smallest
    transverse circuit of size q forces class minimum degree q - 1.
    """
    if n != 7:
        raise ValueError("the low-degree sweep is supported for n = 7 only")
    return _execute("lowdeg", [n], False, threads, checkpoint_path)


CAMPAIGNS = {
    "cconnect": verify_cconnect,
    "vconnect": verify_vconnect,
    "expdegree": lambda n_max, **kw: verify_expdegree(n_max=n_max, **kw),
    "halfcirc": lambda n_max, **kw: verify_halfcirc(n=n_max, **kw),
    "lowdeg": lambda n_max, **kw: verify_lowdeg(n=n_max, **kw),
}


def run_campaign(
    name: str,
    n: int,
    with_loops: bool = False,
    threads: Optional[int] = None,
    checkpoint_path=None,
) -> CampaignResult:
    """Dispatch a named campaign; ValueError on unknown names or bad sizes."""
    if name not in CAMPAIGNS:
        raise ValueError(f"unknown campaign {name!r}; known: {sorted(CAMPAIGNS)}")
    kwargs: dict = {"threads": threads if threads is not None else _default_threads()}
    if checkpoint_path is not None:
        kwargs["checkpoint_path"] = checkpoint_path
    if name in ("cconnect", "vconnect"):
        kwargs["with_loops"] = with_loops
    elif with_loops:
        raise ValueError(f"campaign {name!r} runs on loop-free graphs only")
    return CAMPAIGNS[name](n, **kwargs)


# -- circle graph bound ----------------------------------------------------------


@dataclass(frozen=True)
class CircleBoundCheck:
    """Outcome of the circle-graph vertical connectivity bound."""

    n: int
    kappa: int
    bound: int
    satisfied: bool
    verdict: str


def circle_bound_check(g: Graph, assert_circle: bool = False) -> CircleBoundCheck:
    """Check kappa <= max(5, n-3), the bound every circle graph satisfies.

    A violation with assert_circle set certifies that g is not a circle
    graph.
    """
    k, _ = kappa(g)
    bound = max(5, g.n - 3)
    satisfied = k <= bound
    if satisfied:
        verdict = "satisfied"
    elif assert_circle:
        verdict = "certified non-circle-graph"
    else:
        verdict = "violated"
    return CircleBoundCheck(g.n, k, bound, satisfied, verdict)
