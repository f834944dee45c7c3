import random
from itertools import combinations

import pytest

from bicliq import (
    AddressFamily,
    Graph,
    PreconditionError,
    addressing_to_partition,
    balanced_addressing_report,
    bp_exact,
    counterexample_fixture,
    distance,
    joker_count,
    neighborly_check,
    partition_to_addressing,
    random_split_graph,
    recognize_split,
    star_partition,
    subcube_union_size,
    volume,
)

RNG_SEED = 83137

# the seven clique-side addresses induced by B_1..B_6
FK = {
    1: "1110**",
    2: "*1*100",
    3: "*10*1*",
    4: "0***01",
    5: "0*10*0",
    6: "10****",
    7: "*10000",
}


def test_distance_and_jokers():
    assert distance("01*", "0*1") == 0
    assert distance("01*", "10*") == 2
    assert distance("", "") == 0
    assert joker_count("0*1**") == 3
    with pytest.raises(ValueError):
        distance("01", "011")
    with pytest.raises(ValueError):
        distance("0x", "01")


def test_volume_arithmetic():
    assert volume(["00", "01"]) == 2
    assert volume(["**"]) == 4
    assert volume([]) == 0
    fam = AddressFamily(2, {1: "0*", 2: "11"})
    assert volume(fam) == 3


def test_address_family_validation():
    with pytest.raises(ValueError):
        AddressFamily(2, {1: "011"})
    with pytest.raises(ValueError):
        AddressFamily(2, {1: "0x"})
    fam = AddressFamily(3, {2: "01*", 5: "1*0"})
    assert fam.strings() == ("01*", "1*0")
    assert AddressFamily.from_dict(fam.to_dict()) == fam


def test_neighborly_check_labels():
    # vertex labels for a family, positional indices for raw strings
    fam = AddressFamily(2, {3: "00", 7: "01", 9: "00"})
    ok, pair = neighborly_check(fam)
    assert not ok and pair == (3, 9)
    ok, pair = neighborly_check(["00", "01", "00"])
    assert not ok and pair == (0, 2)
    ok, pair = neighborly_check(["00", "01", "11"], k=2)
    assert ok and pair is None
    with pytest.raises(ValueError):
        neighborly_check(["00"], k=0)


def test_subcube_union_size_matches_volume_when_disjoint():
    rng = random.Random(RNG_SEED)
    for _ in range(100):
        # random 1-neighborly family: star-partition addressing of a split
        # graph restricted to K is always 1-neighborly
        k = rng.randint(2, 5)
        s = rng.randint(1, 4)
        g, sp = random_split_graph(k, s, rng.random(), rng.randrange(1 << 30))
        p = star_partition(g, sp)
        if not len(p):
            continue
        fam = partition_to_addressing(g, sp, p).restrict(sp.clique_side)
        ok, _ = neighborly_check(fam)
        assert ok
        assert subcube_union_size(fam) == volume(fam)


def test_subcube_union_size_overlap():
    # overlapping subcubes: union strictly below the volume sum
    fam = ["0*", "00"]
    assert volume(fam) == 3
    assert subcube_union_size(fam) == 2
    with pytest.raises(ValueError):
        subcube_union_size(["*" * 17])
    assert subcube_union_size(["*" * 16, "1" * 16], cap=16) == 1 << 16


def test_edge_distance_one():
    # every edge of the host graph separates its endpoints exactly once
    rng = random.Random(RNG_SEED + 1)
    for _ in range(25):
        k = rng.randint(2, 5)
        s = rng.randint(1, 4)
        g, sp = random_split_graph(k, s, rng.random(), rng.randrange(1 << 30))
        res = bp_exact(g)
        if not res.value:
            continue
        fam = partition_to_addressing(g, sp, res.witness)
        for u, v in g.edges:
            assert distance(fam.assignments[u], fam.assignments[v]) == 1
        for u, v in combinations(sorted(g.vertices()), 2):
            if not g.has_edge(u, v):
                assert distance(fam.assignments[u], fam.assignments[v]) == 0


def test_addressing_roundtrip():
    g, sp, p = counterexample_fixture()
    fam = partition_to_addressing(g, sp, p)
    rebuilt = partition_to_addressing(g, sp, addressing_to_partition(fam))
    assert rebuilt == fam  # round trip is exact after one normalization
    rng = random.Random(RNG_SEED + 2)
    for _ in range(20):
        k = rng.randint(2, 5)
        s = rng.randint(1, 4)
        g, sp = random_split_graph(k, s, rng.random(), rng.randrange(1 << 30))
        res = bp_exact(g)
        if not res.value:
            continue
        fam = partition_to_addressing(g, sp, res.witness)
        assert partition_to_addressing(g, sp, addressing_to_partition(fam)) == fam


def test_counterexample_addressing_frozen():
    g, sp, p = counterexample_fixture()
    fam = partition_to_addressing(g, sp, p).restrict(sp.clique_side)
    assert {v: fam.assignments[v] for v in sorted(fam.assignments)} == FK
    assert volume(fam) == 46
    assert subcube_union_size(fam) == 46  # disjoint, and 46 < 64 = 2^6
    for u, v in combinations(sorted(FK), 2):
        assert distance(FK[u], FK[v]) == 1
    assert all("0" in x for x in FK.values())


def test_uncovered_all_ones_point():
    # verdict (a) forces 1^r outside the union of the K-side subcubes
    g, sp, p = counterexample_fixture()
    fam = partition_to_addressing(g, sp, p).restrict(sp.clique_side)
    r = fam.length
    covered = set()
    for x in fam.strings():
        jokers = [i for i, c in enumerate(x) if c == "*"]
        for fill in range(1 << len(jokers)):
            point = list(x)
            for t, pos in enumerate(jokers):
                point[pos] = "01"[fill >> t & 1]
            covered.add("".join(point))
    assert "1" * r not in covered
    assert len(covered) == 46


def test_balanced_report_verdicts():
    g, sp, p = counterexample_fixture()
    report = balanced_addressing_report(g, sp, p)
    assert report.all_pass
    assert report.volume == 46 and report.volume_limit == 63
    d = report.to_dict()
    assert d["neighborly_ok"] and d["zero_coordinate_ok"] and d["volume_ok"]


def test_balanced_report_preconditions():
    # unbalanced instance rejected
    g, sp = random_split_graph(3, 2, 1.0, 5)  # every s sees all of K: S-max
    p = star_partition(g, sp)
    with pytest.raises(PreconditionError):
        balanced_addressing_report(g, sp, p)
    # oversized partition rejected
    g, sp, p = counterexample_fixture()
    from bicliq import BicliquePartition

    doubled = BicliquePartition(tuple(p) + tuple(p))
    with pytest.raises(PreconditionError):
        balanced_addressing_report(g, sp, doubled)


def test_partition_to_addressing_rejects_invalid():
    g, sp, p = counterexample_fixture()
    from bicliq import BicliquePartition

    with pytest.raises(PreconditionError):
        partition_to_addressing(g, sp, BicliquePartition(tuple(p)[:-1]))
