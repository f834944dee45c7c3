"""Split graph recognition, classification, and complement clique counting.

A split graph is one whose vertex set divides into a clique K and an
independent set S.  Recognition uses the degree-sequence criterion: with
degrees d_1 >= ... >= d_n and h = max{i : d_i >= i-1}, the graph is split
iff sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i, in which case the h highest
degree vertices form a maximum clique side.  Non-split graphs get an induced
2K2, C4, or C5 certificate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError
from .graphs import CliqueSet, Graph


@dataclass(frozen=True)
class SplitPartition:
    """A witness split of the vertex set: clique side K, independent side S."""

    clique_side: frozenset[int]
    independent_side: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "clique_side", frozenset(self.clique_side))
        object.__setattr__(self, "independent_side", frozenset(self.independent_side))

    def to_dict(self) -> dict:
        return {"K": sorted(self.clique_side), "S": sorted(self.independent_side)}

    @staticmethod
    def from_dict(d: object) -> "SplitPartition":
        if not isinstance(d, dict) or "K" not in d or "S" not in d:
            raise ValueError("split JSON must be an object with 'K' and 'S' keys")
        if not isinstance(d["K"], list) or not isinstance(d["S"], list):
            raise ValueError("'K' and 'S' must be lists")
        return SplitPartition(frozenset(d["K"]), frozenset(d["S"]))


@dataclass(frozen=True)
class NotSplit:
    """Certificate that a graph is not split: an induced 2K2, C4, or C5.

    For 2K2 the vertices are (a, b, c, d) with edges ab, cd; for cycles they
    are listed in cycle order.
    """

    kind: str
    vertices: tuple[int, ...]


class SplitKind(enum.Enum):
    BALANCED = "balanced"
    UNBALANCED_S_MAX = "unbalanced_s_max"
    UNBALANCED_K_MAX = "unbalanced_k_max"


@dataclass(frozen=True)
class SplitClass:
    """Classification of a split partition.

    Balanced: omega = |K| and alpha = |S| (no witness).  Unbalanced S-max:
    some s in S sees all of K, so omega = |K| + 1; witness is the smallest
    such s.  Unbalanced K-max: some k in K has no neighbor in S, so
    alpha = |S| + 1; witness is the smallest such k.  The two unbalanced
    witnesses cannot coexist for one partition (s would be adjacent to k).
    """

    kind: SplitKind
    omega: int
    alpha: int
    witness: int | None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "omega": self.omega,
            "alpha": self.alpha,
            "witness": self.witness,
        }


def validate_split_partition(g: Graph, sp: SplitPartition) -> None:
    """Raise PreconditionError unless (K, S) is a split partition of g."""
    k_side, s_side = sp.clique_side, sp.independent_side
    if k_side & s_side:
        v = min(k_side & s_side)
        raise PreconditionError(f"vertex {v} appears on both sides")
    allv = k_side | s_side
    if allv != set(g.vertices()):
        missing = sorted(set(g.vertices()) ^ allv)
        raise PreconditionError(f"sides do not partition 1..{g.n}: see {missing}")
    for u, v in combinations(sorted(k_side), 2):
        if not g.has_edge(u, v):
            raise PreconditionError(f"clique side misses edge ({u},{v})")
    for u, v in combinations(sorted(s_side), 2):
        if g.has_edge(u, v):
            raise PreconditionError(f"independent side contains edge ({u},{v})")


def _forbidden_certificate(g: Graph) -> NotSplit:
    # Induced 2K2: two vertex-disjoint edges with no connecting edge.
    edges = g.edges
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1 :]:
            if c in (a, b) or d in (a, b):
                continue
            if not (
                g.has_edge(a, c)
                or g.has_edge(a, d)
                or g.has_edge(b, c)
                or g.has_edge(b, d)
            ):
                return NotSplit("2K2", (a, b, c, d))
    # Induced C4: nonadjacent u, v with two nonadjacent common neighbors.
    for u, v in combinations(g.vertices(), 2):
        if g.has_edge(u, v):
            continue
        common = [w for w in g.neighbors(u) if g.has_edge(w, v)]
        for x, y in combinations(common, 2):
            if not g.has_edge(x, y):
                return NotSplit("C4", (u, x, v, y))
    # Induced C5: chordless 5-cycle grown edge by edge.
    for a in g.vertices():
        for b in g.neighbors(a):
            for c in g.neighbors(b):
                if c == a or g.has_edge(a, c):
                    continue
                for d in g.neighbors(c):
                    if d in (a, b) or g.has_edge(a, d) or g.has_edge(b, d):
                        continue
                    for e in g.neighbors(d):
                        if (
                            e not in (b, c)
                            and g.has_edge(a, e)
                            and not g.has_edge(b, e)
                            and not g.has_edge(c, e)
                        ):
                            return NotSplit("C5", (a, b, c, d, e))
    raise AssertionError("degree test said not split but no certificate found")


def recognize_split(g: Graph) -> SplitPartition | NotSplit:
    """Decide splitness by the degree-sequence criterion.

    Returns a SplitPartition whose clique side is the h highest-degree
    vertices (ties broken by index), or a NotSplit certificate.
    """
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    h = 0
    for i in range(1, g.n + 1):
        if degs[i - 1] >= i - 1:
            h = i
        else:
            break
    if sum(degs[:h]) != h * (h - 1) + sum(degs[h:]):
        return _forbidden_certificate(g)
    sp = SplitPartition(frozenset(order[:h]), frozenset(order[h:]))
    validate_split_partition(g, sp)
    return sp


def classify_split(g: Graph, sp: SplitPartition) -> SplitClass:
    """Classify a validated split partition as balanced or unbalanced.

    Raises:
        PreconditionError: if sp is not a split partition of g.
    """
    validate_split_partition(g, sp)
    k_side = sorted(sp.clique_side)
    s_side = sorted(sp.independent_side)
    k_bits = 0
    for k in k_side:
        k_bits |= 1 << k
    s_bits = 0
    for s in s_side:
        s_bits |= 1 << s
    s_witness = next(
        (s for s in s_side if g.adjacency_bits(s) & k_bits == k_bits), None
    )
    if s_witness is not None:
        return SplitClass(
            SplitKind.UNBALANCED_S_MAX, len(k_side) + 1, len(s_side), s_witness
        )
    k_witness = next((k for k in k_side if not g.adjacency_bits(k) & s_bits), None)
    if k_witness is not None:
        return SplitClass(
            SplitKind.UNBALANCED_K_MAX, len(k_side), len(s_side) + 1, k_witness
        )
    return SplitClass(SplitKind.BALANCED, len(k_side), len(s_side), None)


def mc_complement_split(g: Graph, sp: SplitPartition) -> CliqueSet:
    """Maximal cliques of the complement, counted structurally from (K, S).

    In the complement, S becomes a clique and K an independent set.  The
    maximal cliques are exactly {k} u (S \\ N_g(k)) for each k in K, plus S
    itself unless some k has no g-neighbor in S (which makes {k} u S a
    strictly larger complement clique absorbing S).

    Raises:
        PreconditionError: if sp is not a split partition of g.
    """
    validate_split_partition(g, sp)
    s_set = sp.independent_side
    out = [
        frozenset({k}) | (s_set - set(g.neighbors(k)))
        for k in sorted(sp.clique_side)
    ]
    s_absorbed = any(
        not (set(g.neighbors(k)) & s_set) for k in sp.clique_side
    )
    if s_set and not s_absorbed:
        out.append(frozenset(s_set))
    return CliqueSet(tuple(out))
