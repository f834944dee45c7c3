import random

import pytest

from bicliq import (
    Biclique,
    BicliquePartition,
    Graph,
    ParseError,
    canonical_clique_order,
    format_graph,
    maximal_cliques,
    parse_graph,
    partition_from_dict,
    partition_to_dict,
    verify_biclique_partition,
)

import oracles

RNG_SEED = 96721


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph(n, edges)


def test_graph_basic():
    g = Graph(4, [(1, 2), (2, 3), (1, 3)])
    assert g.n == 4
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(1, 4)
    assert g.degree(2) == 2
    assert g.neighbors(1) == (2, 3)
    assert g.edges == ((1, 2), (1, 3), (2, 3))


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 4)])
    # reversed duplicates are normalized, not rejected
    assert Graph(3, [(1, 2), (2, 1)]).edges == ((1, 2),)


def test_complement_involution():
    rng = random.Random(RNG_SEED)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert g.complement().complement() == g
        assert len(g.edges) + len(g.complement().edges) == g.n * (g.n - 1) // 2


def test_biclique_validation():
    b = Biclique(frozenset({1, 2}), frozenset({3}))
    assert set(b.pairs()) == {(1, 3), (2, 3)}
    assert b.swap() == Biclique(frozenset({3}), frozenset({1, 2}))
    with pytest.raises(ValueError):
        Biclique(frozenset(), frozenset({1}))
    with pytest.raises(ValueError):
        Biclique(frozenset({1}), frozenset({1, 2}))


def test_verify_partition_accepts_valid():
    g = Graph(4, [(1, 2), (1, 3), (1, 4), (2, 3)])
    p = BicliquePartition(
        (
            Biclique(frozenset({1}), frozenset({2, 3, 4})),
            Biclique(frozenset({2}), frozenset({3})),
        )
    )
    report = verify_biclique_partition(g, p)
    assert report.valid
    assert report.to_dict() == {
        "valid": True,
        "illegal_bicliques": [],
        "uncovered_edges": [],
        "overcovered_edges": [],
    }


def test_verify_partition_reports_all_defects():
    g = Graph(4, [(1, 2), (1, 3), (2, 3)])
    # biclique 0 claims the non-edge (1,4); edge (2,3) is never covered;
    # edge (1,2) is covered twice
    p = BicliquePartition(
        (
            Biclique(frozenset({1}), frozenset({2, 4})),
            Biclique(frozenset({2, 3}), frozenset({1})),
        )
    )
    report = verify_biclique_partition(g, p)
    assert not report.valid
    assert [i for i, _ in report.illegal_bicliques] == [0]
    assert report.uncovered_edges == ((2, 3),)
    assert report.overcovered_edges == ((1, 2),)


def test_verify_partition_sum_law():
    # valid partition => sum of |U||V| equals the edge count
    rng = random.Random(RNG_SEED + 1)
    from bicliq import bp_exact

    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 7), 0.5)
        res = bp_exact(g)
        assert res.status == "optimal"
        total = sum(len(b.left) * len(b.right) for b in res.witness)
        assert total == len(g.edges)


def test_verify_partition_order_independent():
    g = Graph(4, [(1, 2), (1, 3), (1, 4), (2, 3)])
    bs = [
        Biclique(frozenset({1}), frozenset({2, 3, 4})),
        Biclique(frozenset({2}), frozenset({3})),
    ]
    for order in ((0, 1), (1, 0)):
        p = BicliquePartition(tuple(bs[i] for i in order))
        assert verify_biclique_partition(g, p).valid


@pytest.mark.parametrize("n,p", [(5, 0.3), (6, 0.5), (7, 0.7), (8, 0.5)])
def test_maximal_cliques_match_brute(n, p):
    rng = random.Random(RNG_SEED + n)
    for _ in range(20):
        g = random_graph(rng, n, p)
        ours = set(maximal_cliques(g))
        assert ours == oracles.maximal_cliques(g)


def test_maximal_cliques_canonical_order():
    g = Graph(5, [(1, 2), (2, 3), (1, 3), (4, 5)])
    cliques = maximal_cliques(g)
    assert tuple(cliques) == canonical_clique_order(cliques)
    sizes = [len(c) for c in cliques]
    assert sizes == sorted(sizes, reverse=True)


def test_parse_format_roundtrip():
    rng = random.Random(RNG_SEED + 2)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        assert parse_graph(format_graph(g)) == g


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 1"):
        parse_graph("q 3 1\ne 1 2\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_graph("p 3 1\ne 1 9\n")
    with pytest.raises(ParseError, match="duplicate"):
        parse_graph("p 3 2\ne 1 2\ne 1 2\n")
    with pytest.raises(ParseError):
        parse_graph("p 3 2\ne 1 2\n")  # header promises two edges


def test_parse_allows_comments():
    g = parse_graph("c a triangle\np 3 3\ne 1 2\nc mid-stream comment\ne 1 3\ne 2 3\n")
    assert g == Graph(3, [(1, 2), (1, 3), (2, 3)])


def test_partition_dict_roundtrip():
    p = BicliquePartition(
        (
            Biclique(frozenset({1, 7}), frozenset({2, 4, 5, 6, 9})),
            Biclique(frozenset({2}), frozenset({3})),
        )
    )
    d = partition_to_dict(p)
    assert d["bicliques"][0]["left"] == [1, 7]
    assert partition_from_dict(d) == p
