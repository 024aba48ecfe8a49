import random

import pytest

from conftest import random_equivalent, random_graph
from isomat.fixtures import cycle_graph, fixture, path_graph
from isomat.graph import (
    Graph,
    adjacency_matrix,
    connected_components,
    cut_rank,
    find_pendant_or_twins,
    find_split,
    loop_complement,
    nonsimple_local_complement,
    simple_local_complement,
)
from isomat.gf2 import rank


def test_adjacency_matrix_basic():
    assert adjacency_matrix(Graph.from_edges(2)).bits == (0, 0)
    k2 = adjacency_matrix(fixture("k2"))
    assert k2.dense() == [[0, 1], [1, 0]]
    looped = adjacency_matrix(Graph.from_edges(1, loops=[0]))
    assert looped.dense() == [[1]]


def test_validation_rejects_bad_graphs():
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (1,))  # diagonal bit
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_loop_complement():
    g = Graph.from_edges(1)
    looped = loop_complement(g, 0)
    assert looped.has_loop(0) and looped.adj == g.adj
    assert loop_complement(looped, 0) == g
    c5 = fixture("c5")
    out = loop_complement(c5, 1)
    assert out.adj == c5.adj and out.loops == 0b00010


def test_simple_local_complement():
    iso = Graph.from_edges(3, [(1, 2)])
    assert simple_local_complement(iso, 0) == iso
    c5 = fixture("c5")
    out = simple_local_complement(c5, 0)  # neighbors 1 and 4 become adjacent
    toggled = {
        (u, v)
        for u in range(5)
        for v in range(u + 1, 5)
        if out.has_edge(u, v) != c5.has_edge(u, v)
    }
    assert toggled == {(1, 4)}
    assert out.loops == 0
    assert simple_local_complement(out, 0) == c5


def test_nonsimple_local_complement():
    iso = Graph.from_edges(2)
    assert nonsimple_local_complement(iso, 0) == iso
    k2 = fixture("k2")
    out = nonsimple_local_complement(k2, 0)
    assert out.adj == k2.adj and out.loops == 0b10
    assert nonsimple_local_complement(out, 0) == k2


def test_cut_rank_examples():
    c5 = fixture("c5")
    assert cut_rank(c5, []) == 0
    two_parts = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)])
    assert cut_rank(two_parts, [0, 1]) == 0
    assert cut_rank(fixture("k44"), [4, 5, 6, 7]) == 2


def test_cut_rank_symmetry_and_loop_invariance():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 8)
        g = random_graph(rng, n)
        x = [v for v in range(n) if rng.random() < 0.5]
        comp = [v for v in range(n) if v not in set(x)]
        c = cut_rank(g, x)
        assert c == cut_rank(g, comp)
        assert c <= min(len(x), n - len(x))
        assert cut_rank(loop_complement(g, rng.randrange(n)), x) == c


def test_cut_rank_local_equivalence_invariance():
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(1, 7)
        g = random_graph(rng, n)
        h = random_equivalent(rng, g, rng.randint(1, 12))
        for xmask in range(1 << n):
            x = [v for v in range(n) if (xmask >> v) & 1]
            assert cut_rank(g, x) == cut_rank(h, x)


def test_find_pendant_or_twins():
    p3 = path_graph(3)
    w = find_pendant_or_twins(p3)
    assert (w.kind, w.v, w.w) == ("pendant", 0, 1)
    c4 = cycle_graph(4)
    w = find_pendant_or_twins(c4)
    assert w.kind == "twins" and {w.v, w.w} in ({0, 2}, {1, 3})
    assert find_pendant_or_twins(fixture("c5")) is None


def test_twins_ignore_loops():
    g = Graph.from_edges(4, [(0, 2), (1, 2), (0, 3), (1, 3)], loops=[0])
    w = find_pendant_or_twins(g)
    assert w.kind == "twins" and {w.v, w.w} == {0, 1}


def test_find_split():
    for n in range(4):
        g = random_graph(random.Random(n), n)
        assert find_split(g) is None
    s = find_split(fixture("p4"))
    assert s is not None
    assert s.v1 == frozenset({0, 1})
    assert find_split(fixture("c5")) is None


def test_split_structure_random():
    rng = random.Random(9)
    found = 0
    for _ in range(300):
        g = random_graph(rng, rng.randint(4, 7), with_loops=False)
        s = find_split(g)
        if s is None:
            # prime: every balanced-enough bipartition has cut-rank >= 2
            n = g.n
            for xmask in range(1 << n):
                k = xmask.bit_count()
                if 2 <= k <= n - 2:
                    x = [v for v in range(n) if (xmask >> v) & 1]
                    assert cut_rank(g, x) >= 2
            continue
        found += 1
        assert len(s.v1) >= 2 and len(s.v2) >= 2
        assert s.w1 <= s.v1 and s.w2 <= s.v2
        for v in s.v1:
            expected = s.w2 if v in s.w1 else frozenset()
            assert g.neighbors(v) & s.v2 == expected
    assert found > 50


def test_connectivity_degree_neighbors():
    looped = Graph.from_edges(1, loops=[0])
    assert looped.degree(0) == 0 and looped.neighbors(0) == frozenset()
    assert all(fixture("c5").degree(v) == 2 for v in range(5))
    assert not Graph.from_edges(2).is_connected()
    assert Graph.from_edges(0).is_connected()
    assert connected_components(Graph.from_edges(3, [(1, 2)])) == [
        frozenset({0}),
        frozenset({1, 2}),
    ]


def test_text_format_round_trip():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)], loops=[1, 4])
    text = g.to_text()
    assert text.splitlines()[0] == "n=5 loops=01001"
    assert Graph.from_text(text) == g
    assert Graph.from_text("n=0 loops=") == Graph.from_edges(0)


def test_text_format_rejects_garbage():
    for bad in ("", "n=2 loops=1", "n=2 loops=00\n0", "loops=0 n=1", "n=1 loops=2"):
        with pytest.raises(ValueError):
            Graph.from_text(bad)


def test_hex_encoding_round_trip():
    rng = random.Random(12)
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 8))
        assert Graph.from_hex(g.to_hex()) == g
    with pytest.raises(ValueError):
        Graph.from_hex("5")
    with pytest.raises(ValueError):
        Graph.from_hex("2:zz")


def test_encoding_layout():
    # pair bits in lexicographic order, then loop bits above them
    g = Graph.from_edges(3, [(0, 1), (1, 2)], loops=[2])
    assert g.encoding() == 0b100_101
    assert Graph.from_encoding(3, 0b100_101) == g


def test_permuted_preserves_structure():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(1, 7)
        g = random_graph(rng, n)
        sigma = list(range(n))
        rng.shuffle(sigma)
        h = g.permuted(sigma)
        assert sorted(g.degree(v) for v in range(n)) == sorted(
            h.degree(v) for v in range(n)
        )
        assert g.loops.bit_count() == h.loops.bit_count()
        assert g.permuted(range(n)) == g
