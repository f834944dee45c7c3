"""Squashed-cube addressing: strings over {0, 1, *}, distance, volume.

A biclique partition of size r addresses each vertex with a length-r string:
coordinate i is 0 in the left part of biclique i, 1 in the right part, *
otherwise.  Distance counts 0/1 oppositions; each string x covers the
subcube H(x) of the 2^r binary strings obtained by filling jokers, of size
2^j(x).  For an edge uv the covering biclique contributes the unique
opposition, so restricted to a clique the induced family is 1-neighborly and
its subcubes are pairwise disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import PreconditionError
from .graphs import Biclique, BicliquePartition, Graph, verify_biclique_partition
from .splits import SplitKind, SplitPartition, classify_split

ALPHABET = frozenset("01*")


def _check_string(x: str) -> str:
    bad = next((c for c in x if c not in ALPHABET), None)
    if bad is not None:
        raise ValueError(f"address symbol {bad!r} not in 0/1/*")
    return x


def distance(x: str, y: str) -> int:
    """Number of coordinates where one string has 0 and the other 1."""
    _check_string(x)
    _check_string(y)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(1 for a, b in zip(x, y) if a != b and a != "*" and b != "*")


def joker_count(x: str) -> int:
    return _check_string(x).count("*")


@dataclass(frozen=True)
class AddressFamily:
    """Equal-length address strings assigned to vertices."""

    length: int
    assignments: Mapping[int, str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignments", dict(self.assignments))
        for v, x in self.assignments.items():
            _check_string(x)
            if len(x) != self.length:
                raise ValueError(
                    f"address of vertex {v} has length {len(x)}, expected {self.length}"
                )

    def strings(self) -> tuple[str, ...]:
        return tuple(self.assignments[v] for v in sorted(self.assignments))

    def restrict(self, vertices: Iterable[int]) -> "AddressFamily":
        keep = set(vertices)
        return AddressFamily(
            self.length, {v: x for v, x in self.assignments.items() if v in keep}
        )

    def to_dict(self) -> dict:
        return {
            "length": self.length,
            "addresses": {str(v): self.assignments[v] for v in sorted(self.assignments)},
        }

    @staticmethod
    def from_dict(d: object) -> "AddressFamily":
        if not isinstance(d, dict) or "length" not in d or "addresses" not in d:
            raise ValueError("address JSON must have 'length' and 'addresses'")
        addr = d["addresses"]
        if not isinstance(addr, dict):
            raise ValueError("'addresses' must be an object")
        return AddressFamily(int(d["length"]), {int(v): x for v, x in addr.items()})


def _as_strings(fam: AddressFamily | Iterable[str]) -> list[str]:
    if isinstance(fam, AddressFamily):
        return list(fam.strings())
    return [_check_string(x) for x in fam]


def volume(fam: AddressFamily | Iterable[str]) -> int:
    """Sum of 2^j(x); equals |union of subcubes| when pairwise distance >= 1."""
    return sum(2 ** joker_count(x) for x in _as_strings(fam))


def neighborly_check(
    fam: AddressFamily | Iterable[str], k: int = 1
) -> tuple[bool, tuple[int, int] | None]:
    """Whether 1 <= d(x, y) <= k for all distinct pairs of the family.

    The offending pair is labelled by vertex for an AddressFamily, by
    positional index for a raw string collection.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if isinstance(fam, AddressFamily):
        labels = sorted(fam.assignments)
        strings = [fam.assignments[v] for v in labels]
    else:
        strings = [_check_string(x) for x in fam]
        labels = list(range(len(strings)))
    for i in range(len(strings)):
        for j in range(i + 1, len(strings)):
            if not 1 <= distance(strings[i], strings[j]) <= k:
                return False, (labels[i], labels[j])
    return True, None


def subcube_union_size(fam: AddressFamily | Iterable[str], cap: int = 16) -> int:
    """Cardinality of the union of the subcubes H(x), by explicit enumeration.

    Independent of the volume arithmetic on purpose: this is the oracle the
    disjointness property is checked against.  Refuses r > cap.
    """
    strings = _as_strings(fam)
    if not strings:
        return 0
    r = len(strings[0])
    if r > cap:
        raise ValueError(f"enumeration capped at length {cap}, got {r}")
    points: set[int] = set()
    for x in strings:
        if len(x) != r:
            raise ValueError("family strings must share one length")
        fixed = 0
        jokers = []
        for pos, c in enumerate(x):
            if c == "1":
                fixed |= 1 << pos
            elif c == "*":
                jokers.append(pos)
        for fill in range(1 << len(jokers)):
            p = fixed
            for t, pos in enumerate(jokers):
                if fill >> t & 1:
                    p |= 1 << pos
            points.add(p)
    return len(points)


def partition_to_addressing(
    g: Graph, sp: SplitPartition, p: BicliquePartition
) -> AddressFamily:
    """Address every vertex of g from a valid biclique partition.

    Bicliques are first normalized: any S-vertices must sit in the right
    part (their part is swapped over if not), and all-K bicliques keep the
    orientation that puts their minimum vertex on the left.  Coordinate i of
    f(v) is then 0/1/* by membership in the left/right/neither part of
    biclique i.

    Raises:
        PreconditionError: p does not validate against g, or a biclique has
            S-vertices in both parts (impossible for valid p; defensive).
    """
    report = verify_biclique_partition(g, p)
    if not report.valid:
        raise PreconditionError(
            "partition does not validate against the graph: " + str(report.to_dict())
        )
    s_set = sp.independent_side
    normalized = []
    for i, b in enumerate(p):
        left_s, right_s = b.left & s_set, b.right & s_set
        if left_s and right_s:
            raise PreconditionError(
                f"biclique {i} has S-vertices in both parts: "
                f"{sorted(left_s)} | {sorted(right_s)}"
            )
        if left_s:
            b = b.swap()
        elif not right_s and min(b.left | b.right) not in b.left:
            b = b.swap()
        normalized.append(b)
    assignments = {}
    for v in g.vertices():
        chars = []
        for b in normalized:
            if v in b.left:
                chars.append("0")
            elif v in b.right:
                chars.append("1")
            else:
                chars.append("*")
        assignments[v] = "".join(chars)
    return AddressFamily(len(normalized), assignments)


def addressing_to_partition(fam: AddressFamily) -> BicliquePartition:
    """Rebuild the partition: coordinate i's 0-set / 1-set as left / right."""
    out = []
    for i in range(fam.length):
        left = frozenset(v for v, x in fam.assignments.items() if x[i] == "0")
        right = frozenset(v for v, x in fam.assignments.items() if x[i] == "1")
        if not left or not right:
            raise ValueError(f"coordinate {i} lacks a 0-set or a 1-set")
        out.append(Biclique(left, right))
    return BicliquePartition(tuple(out))


@dataclass(frozen=True)
class AddressingReport:
    """Verdicts of the two addressing lemmas on the clique-side family F_K.

    (a) every clique vertex has a 0 coordinate; (b) F_K is 1-neighborly;
    (c) vol(F_K) <= 2^r - 1.  All three hold whenever the preconditions do;
    witnesses identify any violation.
    """

    zero_coordinate_ok: bool
    zero_violator: int | None
    neighborly_ok: bool
    neighborly_violator: tuple[int, int] | None
    volume: int
    volume_limit: int
    volume_ok: bool

    @property
    def all_pass(self) -> bool:
        return self.zero_coordinate_ok and self.neighborly_ok and self.volume_ok

    def to_dict(self) -> dict:
        return {
            "zero_coordinate_ok": self.zero_coordinate_ok,
            "zero_violator": self.zero_violator,
            "neighborly_ok": self.neighborly_ok,
            "neighborly_violator": (
                list(self.neighborly_violator) if self.neighborly_violator else None
            ),
            "volume": self.volume,
            "volume_limit": self.volume_limit,
            "volume_ok": self.volume_ok,
        }


def balanced_addressing_report(
    g: Graph, sp: SplitPartition, p: BicliquePartition
) -> AddressingReport:
    """Check the addressing lemmas for a small partition of a balanced graph.

    Raises:
        PreconditionError: sp not balanced, p invalid, or |p| > omega - 1.
    """
    cls = classify_split(g, sp)
    if cls.kind is not SplitKind.BALANCED:
        raise PreconditionError(f"split partition classifies as {cls.kind.value}")
    r = len(p)
    if r > cls.omega - 1:
        raise PreconditionError(
            f"partition size {r} exceeds omega - 1 = {cls.omega - 1}"
        )
    fam = partition_to_addressing(g, sp, p)  # validates p
    k_fam = fam.restrict(sp.clique_side)
    zero_violator = next(
        (v for v in sorted(sp.clique_side) if "0" not in k_fam.assignments[v]), None
    )
    neigh_ok, neigh_pair = neighborly_check(k_fam, 1)
    vol = volume(k_fam)
    limit = 2**r - 1
    return AddressingReport(
        zero_violator is None,
        zero_violator,
        neigh_ok,
        neigh_pair,
        vol,
        limit,
        vol <= limit,
    )
