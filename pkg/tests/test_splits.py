import random
from itertools import combinations

import pytest

from bicliq import (
    Graph,
    NotSplit,
    PreconditionError,
    SplitKind,
    SplitPartition,
    classify_split,
    maximal_cliques,
    mc_complement_split,
    random_split_graph,
    recognize_split,
    validate_split_partition,
)

import oracles

RNG_SEED = 40417


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph(n, edges)


def assert_certificate_induced(g: Graph, cert: NotSplit) -> None:
    vs = cert.vertices
    induced = {(u, v) for u, v in combinations(sorted(vs), 2) if g.has_edge(u, v)}
    if cert.kind == "2K2":
        assert len(vs) == 4 and len(induced) == 2
        (a, b), (c, d) = sorted(induced)
        assert {a, b} | {c, d} == set(vs) and not ({a, b} & {c, d})
    elif cert.kind == "C4":
        assert len(vs) == 4 and len(induced) == 4
        assert all(len([e for e in induced if v in e]) == 2 for v in vs)
    elif cert.kind == "C5":
        assert len(vs) == 5 and len(induced) == 5
        assert all(len([e for e in induced if v in e]) == 2 for v in vs)
    else:
        pytest.fail(f"unknown certificate kind {cert.kind}")


def test_recognize_matches_brute():
    rng = random.Random(RNG_SEED)
    split_seen = nonsplit_seen = 0
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        rec = recognize_split(g)
        if isinstance(rec, NotSplit):
            nonsplit_seen += 1
            assert not oracles.is_split(g)
            assert_certificate_induced(g, rec)
        else:
            split_seen += 1
            assert oracles.is_split(g)
            assert validate_split_partition(g, rec) is None
    assert split_seen > 50 and nonsplit_seen > 50


def test_recognize_known_graphs():
    # 2K2, C4, C5 themselves
    for edges, kind, n in (
        ([(1, 2), (3, 4)], "2K2", 4),
        ([(1, 2), (2, 3), (3, 4), (1, 4)], "C4", 4),
        ([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)], "C5", 5),
    ):
        rec = recognize_split(Graph(n, edges))
        assert isinstance(rec, NotSplit)
        assert rec.kind == kind
    # complete, empty, and single-vertex graphs are split
    for g in (
        Graph(4, [(u, v) for u, v in combinations(range(1, 5), 2)]),
        Graph(4),
        Graph(1),
    ):
        assert isinstance(recognize_split(g), SplitPartition)


def test_validate_split_partition_rejects():
    g = Graph(4, [(1, 2), (3, 4)])
    with pytest.raises(PreconditionError, match="1.*2|2.*1"):
        # K side misses the edge 3-4? no: S side contains the edge 1-2
        validate_split_partition(g, SplitPartition(frozenset({3, 4}), frozenset({1, 2})))
    with pytest.raises(PreconditionError):
        # K side not a clique: 1 and 3 are nonadjacent
        validate_split_partition(g, SplitPartition(frozenset({1, 3}), frozenset({2, 4})))
    with pytest.raises(PreconditionError):
        # not a partition of the vertex set
        validate_split_partition(g, SplitPartition(frozenset({1, 2}), frozenset({3})))


def test_classify_trichotomy_and_brute_omega_alpha():
    rng = random.Random(RNG_SEED + 1)
    kinds_seen = set()
    for _ in range(200):
        k = rng.randint(1, 5)
        s = rng.randint(1, 5)
        g, sp = random_split_graph(k, s, rng.random(), rng.randrange(1 << 30))
        cls = classify_split(g, sp)
        kinds_seen.add(cls.kind)
        assert cls.omega == oracles.max_clique(g)
        assert cls.alpha == oracles.max_independent_set(g)
        # balance is a property of the graph, not the partition handed in
        assert (cls.kind is SplitKind.BALANCED) == (cls.omega + cls.alpha == g.n)
        if cls.kind is SplitKind.UNBALANCED_S_MAX:
            w = cls.witness
            assert w in sp.independent_side
            assert all(g.has_edge(w, v) for v in sp.clique_side)
        if cls.kind is SplitKind.UNBALANCED_K_MAX:
            w = cls.witness
            assert w in sp.clique_side
            assert not any(g.has_edge(w, v) for v in sp.independent_side)
    assert kinds_seen == {
        SplitKind.BALANCED,
        SplitKind.UNBALANCED_S_MAX,
        SplitKind.UNBALANCED_K_MAX,
    }


def test_classify_small_cases():
    # P3 with K = {1,2}: omega + alpha = 4 = n + 1, so unbalanced; vertex 1
    # has no S-neighbor, making the partition K-max
    g = Graph(3, [(1, 2), (2, 3)])
    sp = SplitPartition(frozenset({1, 2}), frozenset({3}))
    cls = classify_split(g, sp)
    assert cls.kind is SplitKind.UNBALANCED_K_MAX
    assert (cls.omega, cls.alpha, cls.witness) == (2, 2, 1)

    # star K_{1,3} with K = {1}: every leaf sees all of K, so S-max
    g = Graph(4, [(1, 2), (1, 3), (1, 4)])
    sp = SplitPartition(frozenset({1}), frozenset({2, 3, 4}))
    cls = classify_split(g, sp)
    assert cls.kind is SplitKind.UNBALANCED_S_MAX
    assert cls.omega == 2 and cls.alpha == 3

    # triangle plus an isolated vertex: omega + alpha = 5 = n + 1, K-max
    g = Graph(4, [(1, 2), (1, 3), (2, 3)])
    sp = SplitPartition(frozenset({1, 2, 3}), frozenset({4}))
    cls = classify_split(g, sp)
    assert cls.kind is SplitKind.UNBALANCED_K_MAX
    assert cls.omega == 3 and cls.alpha == 2

    # P4 with K = {2,3}: omega + alpha = 4 = n, balanced
    g = Graph(4, [(1, 2), (2, 3), (3, 4)])
    sp = SplitPartition(frozenset({2, 3}), frozenset({1, 4}))
    cls = classify_split(g, sp)
    assert cls.kind is SplitKind.BALANCED
    assert cls.omega == 2 and cls.alpha == 2 and cls.witness is None


def test_mc_complement_matches_bron_kerbosch():
    rng = random.Random(RNG_SEED + 2)
    for _ in range(150):
        k = rng.randint(1, 5)
        s = rng.randint(1, 4)
        g, sp = random_split_graph(k, s, rng.random(), rng.randrange(1 << 30))
        structural = {frozenset(c) for c in mc_complement_split(g, sp)}
        enumerated = set(maximal_cliques(g.complement()))
        assert structural == enumerated
        assert enumerated == oracles.maximal_cliques(g.complement())


def test_mc_complement_s_max_count():
    # for S-max instances mc(G^c) = |K| + 1 = omega
    rng = random.Random(RNG_SEED + 3)
    seen = 0
    for _ in range(300):
        k = rng.randint(1, 5)
        s = rng.randint(1, 4)
        g, sp = random_split_graph(k, s, rng.random(), rng.randrange(1 << 30))
        cls = classify_split(g, sp)
        if cls.kind is SplitKind.UNBALANCED_S_MAX:
            seen += 1
            assert len(mc_complement_split(g, sp)) == len(sp.clique_side) + 1
            assert len(sp.clique_side) + 1 == cls.omega
    assert seen > 30


def test_split_partition_dict_roundtrip():
    sp = SplitPartition(frozenset({1, 2}), frozenset({3, 4}))
    d = sp.to_dict()
    assert d == {"K": [1, 2], "S": [3, 4]}
    assert SplitPartition.from_dict(d) == sp
