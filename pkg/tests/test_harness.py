import json
import random

import pytest

from conftest import random_graph
from isomat.connectivity import kappa
from isomat.fixtures import fixture
from isomat.graph import Graph, find_split
from isomat.harness import (
    CampaignResult,
    circle_bound_check,
    count_labeled_graphs,
    enumerate_labeled_graphs,
    has_small_transverse_circuit,
    k44_fixture,
    run_campaign,
    verify_cconnect,
    verify_expdegree,
    verify_halfcirc,
    verify_lowdeg,
    verify_vconnect,
    write_report,
)
from isomat.isotropic import build
import isomat.harness as harness


def test_enumeration_counts():
    assert len(list(enumerate_labeled_graphs(3))) == 8
    assert len(list(enumerate_labeled_graphs(2, with_loops=True))) == 8
    graphs = list(enumerate_labeled_graphs(0))
    assert graphs == [Graph.from_edges(0)]
    assert count_labeled_graphs(7) == 1 << 21


def test_enumeration_order_and_guard():
    codes = [g.encoding() for g in enumerate_labeled_graphs(3, with_loops=True)]
    assert codes == sorted(codes) == list(range(64))
    with pytest.raises(ValueError):
        next(enumerate_labeled_graphs(9))


def test_k44_fixture_values():
    g = k44_fixture()
    assert g.n == 8 and g.loops == 0
    assert find_split(g) is None
    assert kappa(g) == (5, frozenset({0, 1, 2, 3}))
    assert build(g).min_transverse_circuit()[0] == 4


def test_small_circuit_predicate_matches_search():
    rng = random.Random(61)
    for _ in range(400):
        n = rng.randint(1, 7)
        g = random_graph(rng, n)
        for cap in (1, 2, 3, n):
            expected = build(g).min_transverse_circuit(size_cap=cap) is not None
            assert has_small_transverse_circuit(g, cap) == expected
    assert not has_small_transverse_circuit(fixture("c5"), 0)
    with pytest.raises(ValueError):
        has_small_transverse_circuit(Graph.from_edges(0), 3)


def test_circle_bound_check():
    w5 = circle_bound_check(fixture("w5"), assert_circle=True)
    assert not w5.satisfied and w5.verdict == "certified non-circle-graph"
    assert (w5.kappa, w5.bound) == (6, 5)
    w7 = circle_bound_check(fixture("w7"))
    assert not w7.satisfied and w7.verdict == "violated"
    assert (w7.kappa, w7.bound) == (7, 5)
    c5 = circle_bound_check(fixture("c5"), assert_circle=True)
    assert c5.satisfied and c5.verdict == "satisfied"
    k44 = circle_bound_check(k44_fixture(), assert_circle=True)
    assert k44.satisfied and k44.kappa == 5


def test_campaign_guards():
    for name, bad_n in (("cconnect", 7), ("vconnect", 9), ("halfcirc", 6), ("lowdeg", 8), ("expdegree", 7)):
        with pytest.raises(ValueError):
            run_campaign(name, bad_n)
    with pytest.raises(ValueError):
        run_campaign("mystery", 3)
    with pytest.raises(ValueError):
        run_campaign("halfcirc", 7, with_loops=True)


def test_cconnect_small_with_loops():
    r = verify_cconnect(3, with_loops=True)
    assert r.passed
    assert r.graphs_checked == 1 + 2 + 8 + 64
    assert r.case_counts["case1"] == 1


def test_vconnect_small():
    r = verify_vconnect(4)
    assert r.passed
    assert set(r.case_counts) <= {"case1", "case2", "case3"}
    kappas = {k for k in r.stats if "n=4" in k}
    assert kappas == {"n=4 kappa=1", "n=4 kappa=3"}  # kappa=4 never occurs


def test_expdegree_small():
    r = verify_expdegree(4, 4)
    assert r.passed and r.graphs_checked == 64


def test_campaign_determinism_across_threads():
    a = verify_cconnect(4, threads=1)
    b = verify_cconnect(4, threads=2)
    assert a.to_json() == b.to_json()


def test_checkpoint_resume_matches_uninterrupted(tmp_path, monkeypatch):
    monkeypatch.setattr(harness, "CHUNK_SIZE", 16)
    full = verify_cconnect(3)

    calls = 0
    original = harness._run_chunk

    def flaky(args):
        nonlocal calls
        calls += 1
        if calls == 3:
            raise KeyboardInterrupt
        return original(args)

    ckpt = tmp_path / "campaign.ckpt"
    monkeypatch.setattr(harness, "_run_chunk", flaky)
    with pytest.raises(KeyboardInterrupt):
        verify_cconnect(3, checkpoint_path=ckpt)
    monkeypatch.setattr(harness, "_run_chunk", original)
    resumed = verify_cconnect(3, checkpoint_path=ckpt)
    assert resumed.to_json() == full.to_json()


def test_checkpoint_rejects_other_campaign(tmp_path):
    ckpt = tmp_path / "campaign.ckpt"
    verify_cconnect(2, checkpoint_path=ckpt)
    with pytest.raises(ValueError):
        verify_vconnect(2, checkpoint_path=ckpt)


def test_write_report(tmp_path):
    result = CampaignResult("demo", {"ns": [2]}, graphs_checked=2, failures=["2:1"])
    path = tmp_path / "report.jsonl"
    write_report(result, path)
    lines = [json.loads(line) for line in path.read_text().splitlines()]
    assert lines[0] == {"type": "counterexample", "graph": "2:1"}
    assert lines[-1]["type"] == "summary"
    assert lines[-1]["passed"] is False


def test_halfcirc_requires_seven():
    with pytest.raises(ValueError):
        verify_halfcirc(5)
    with pytest.raises(ValueError):
        verify_lowdeg(5)
