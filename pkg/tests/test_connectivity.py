import json
import math
import random

import pytest

from conftest import random_graph
from isomat.connectivity import (
    analyze,
    brute_force_connectivity,
    brute_force_separations,
    classify_vconnect,
    conn_value_from_json,
    conn_value_to_json,
    kappa,
    kappa_b,
    tau_and_kappa_star,
)
from isomat.fixtures import fixture
from isomat.graph import Graph, connected_components, cut_rank, find_split
from isomat.isotropic import build, chi, psi, tau


def test_thm1_cases():
    empty = tau_and_kappa_star(Graph.from_edges(0))
    assert (empty.tau, empty.kappa_star, empty.case) == (math.inf, 0, 1)
    assert empty.witness is None

    single = tau_and_kappa_star(Graph.from_edges(1))
    assert (single.tau, single.kappa_star, single.case) == (1, 1, 2)
    assert single.witness.elements == {chi(0)}  # the zero column
    looped = tau_and_kappa_star(Graph.from_edges(1, loops=[0]))
    assert looped.witness.elements == {psi(0)}

    p4 = tau_and_kappa_star(fixture("p4"))
    assert (p4.tau, p4.kappa_star, p4.case) == (2, 2, 3)

    c5 = tau_and_kappa_star(fixture("c5"))
    assert (c5.tau, c5.kappa_star, c5.case) == (3, 3, 4)


def test_thm1_disconnected_witness():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    r = tau_and_kappa_star(g)
    assert (r.tau, r.kappa_star, r.case) == (1, 1, 2)
    s = r.witness.elements
    assert s == tau(connected_components(g)[0])
    assert build(g).lambda_of(s) == 0


def test_thm1_witness_conditions():
    rng = random.Random(41)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 6))
        r = tau_and_kappa_star(g)
        m = build(g)
        s = r.witness.elements
        lam = m.lambda_of(s)
        assert lam == r.witness.lambda_value < r.witness.k == r.tau
        assert len(s) >= r.tau and 3 * g.n - len(s) >= r.tau
        # cyclic at the same level: both sides dependent
        assert m.is_dependent(s)
        assert m.is_dependent(m.ground_set() - s)


def test_kappa_fixtures():
    assert kappa(fixture("c5"))[0] == 5
    assert kappa(fixture("w5"))[0] == 6
    assert kappa(fixture("w7"))[0] == 7
    assert kappa(Graph.from_edges(0))[0] == 0
    assert kappa(Graph.from_edges(1))[0] == 1


def test_kappa_disconnected():
    g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    k, x = kappa(g)
    assert k == 1
    assert cut_rank(g, x) == 0  # a union of components


def test_kappa_connected_nonprime_is_three():
    rng = random.Random(42)
    seen = 0
    while seen < 40:
        g = random_graph(rng, rng.randint(4, 7), with_loops=False)
        if not g.is_connected() or find_split(g) is None:
            continue
        assert kappa(g)[0] == 3
        seen += 1


def test_kappa_witness_is_separating():
    rng = random.Random(43)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 7))
        k, x = kappa(g)
        n = g.n
        assert k % 2 == 1 or k == n
        if x is None:
            assert k == n
            continue
        c = (k - 1) // 2
        assert cut_rank(g, x) == c
        assert c < min(len(x), n - len(x))
        # tau(X) really is a vertical k-separation
        m = build(g)
        tx = tau(x)
        assert m.lambda_of(tx) == 2 * c < k
        assert m.rank_of(tx) >= k
        assert m.rank_of(m.ground_set() - tx) >= k


def test_kappa_b():
    assert kappa_b(fixture("w5")) == math.inf
    assert kappa_b(fixture("w7")) == 4
    assert kappa_b(Graph.from_edges(4, [(0, 1)])) == 1
    assert kappa_b(Graph.from_edges(0)) == math.inf


def test_purechar_both_directions():
    rng = random.Random(44)
    for _ in range(300):
        n = rng.randint(1, 7)
        g = random_graph(rng, n)
        x = [v for v in range(n) if rng.random() < 0.5]
        m = build(g)
        tx = tau(x)
        c = cut_rank(g, x)
        comp = m.ground_set() - tx

        def is_vertical(k):
            return (
                m.lambda_of(tx) < k and m.rank_of(tx) >= k and m.rank_of(comp) >= k
            )

        qualifies = c < min(len(x), n - len(x))
        assert any(is_vertical(k) for k in range(1, n + 1)) == qualifies
        if qualifies:
            assert is_vertical(2 * c + 1)
            assert not any(is_vertical(k) for k in range(1, 2 * c + 1))


def test_smallcirc_bound():
    rng = random.Random(45)
    for _ in range(120):
        n = rng.randint(1, 7)
        g = random_graph(rng, n)
        q = build(g).min_transverse_circuit()[0]
        if 2 * q < n + 1:
            assert 2 * q - 1 >= kappa(g)[0]
    # the bound is strict for the K4,4 interlacement graph
    k44 = fixture("k44")
    assert build(k44).min_transverse_circuit()[0] == 4
    assert kappa(k44)[0] == 5


def test_diameter_bound_when_kappa_is_n():
    def diameter_le_2(g):
        full = (1 << g.n) - 1
        for v in range(g.n):
            ball = g.adj[v] | (1 << v)
            two = ball
            for w in range(g.n):
                if (ball >> w) & 1:
                    two |= g.adj[w]
            if two != full:
                return False
        return True

    for n in range(1, 6):
        for code in range(1 << (n * (n - 1) // 2)):
            g = Graph.from_encoding(n, code)
            if kappa(g)[0] == n:
                assert diameter_le_2(g), g.to_hex()


def test_classify_vconnect():
    assert classify_vconnect(fixture("k2")) == 1
    assert kappa(fixture("k2"))[0] == 2
    assert classify_vconnect(Graph.from_edges(2)) == 2
    assert classify_vconnect(fixture("p4")) == 3
    assert classify_vconnect(fixture("w7")) == 4
    assert classify_vconnect(fixture("k44")) == 4
    assert classify_vconnect(fixture("c5")) == 5
    assert classify_vconnect(fixture("w5")) == 5


def test_brute_force_limits():
    with pytest.raises(ValueError):
        brute_force_connectivity(build(fixture("w7")))
    with pytest.raises(ValueError):
        brute_force_separations(build(fixture("c5")), "nonsense", 1)
    with pytest.raises(ValueError):
        brute_force_separations(build(fixture("c5")), "ordinary", 0)


def test_brute_force_single_vertex():
    m = build(Graph.from_edges(1))
    seps = brute_force_separations(m, "ordinary", 1)
    assert frozenset({chi(0)}) in [w.elements for w in seps]


def test_brute_force_postconditions():
    rng = random.Random(46)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 4))
        m = build(g)
        k = rng.randint(1, 4)
        for w in brute_force_separations(m, "vertical", k):
            s = w.elements
            assert m.rank_of(s) >= k
            assert m.rank_of(m.ground_set() - s) >= k
            assert m.lambda_of(s) == w.lambda_value < k
        for w in brute_force_separations(m, "cyclic", k):
            assert m.is_dependent(w.elements)
            assert m.is_dependent(m.ground_set() - w.elements)
        for w in brute_force_separations(m, "isotropic", k):
            x = w.vertex_set
            assert min(len(x), g.n - len(x)) >= k
            assert cut_rank(g, x) == w.lambda_value < k


def test_brute_force_oracle_sample():
    rng = random.Random(47)
    for _ in range(40):
        g = random_graph(rng, rng.randint(0, 4))
        bf = brute_force_connectivity(build(g))
        r = tau_and_kappa_star(g)
        assert bf.tau == r.tau
        assert bf.kappa_star == r.kappa_star
        assert bf.kappa == kappa(g)[0]


def test_isotropic_separations_match_kappa_b():
    rng = random.Random(48)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 6))
        m = build(g)
        kb = kappa_b(g)
        levels = [
            k
            for k in range(1, g.n + 1)
            if brute_force_separations(m, "isotropic", k)
        ]
        assert (min(levels) if levels else math.inf) == kb


def test_report_json():
    report = analyze(fixture("c5"))
    data = report.to_json_dict()
    assert data["tau"] == 3 and data["kappa_star"] == 3
    assert data["kappa"] == 5 and data["kappa_B"] == "inf"
    assert data["case_thm1"] == 4 and data["case_thm2"] == 5
    json.dumps(data)  # serializable

    w7 = analyze(fixture("w7")).to_json_dict()
    assert w7["kappa"] == 7 and w7["kappa_B"] == 4
    wit = w7["witnesses"]["kappa"]
    assert wit["kind"] == "vertical" and wit["k"] == 7
    assert wit["vertex_set"] == sorted(wit["vertex_set"])

    empty = analyze(Graph.from_edges(0)).to_json_dict()
    assert empty == {
        "n": 0,
        "tau": "inf",
        "kappa_star": 0,
        "kappa": 0,
        "kappa_B": "inf",
        "case_thm1": 1,
        "case_thm2": 1,
        "witnesses": {},
    }


def test_report_invariants_random():
    rng = random.Random(49)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 6))
        r = analyze(g)
        assert r.kappa_star == r.tau
        assert r.kappa >= r.tau
        assert r.kappa % 2 == 1 or r.kappa == g.n


def test_conn_value_json_round_trip():
    for v in (0, 1, 7, math.inf):
        assert conn_value_from_json(conn_value_to_json(v)) == v
