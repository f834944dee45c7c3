"""Exact biclique partition numbers, star constructions, and the lift.

The lower bound is always omega(G) - 1 (a partition must separate every pair
of a maximum clique, and n - 1 bicliques are needed to partition K_n).  Upper
bounds come from star partitions; the gap is closed by the exact backtracking
search in _kernels via iterative deepening on the target size.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import _kernels
from .errors import BudgetError, PreconditionError
from .graphs import (
    Biclique,
    BicliquePartition,
    Graph,
    partition_to_dict,
    verify_biclique_partition,
)
from .splits import (
    NotSplit,
    SplitKind,
    SplitPartition,
    classify_split,
    recognize_split,
    validate_split_partition,
)


def clique_number(g: Graph, limit: int = 64) -> int:
    """Exact omega(G): split-structure shortcut, branch-and-bound otherwise.

    Raises:
        BudgetError: non-split input with more than `limit` vertices.
    """
    rec = recognize_split(g)
    if isinstance(rec, SplitPartition):
        return classify_split(g, rec).omega
    if g.n > limit:
        raise BudgetError(
            f"clique number of a non-split graph limited to {limit} vertices, got {g.n}"
        )
    adj = [g.adjacency_bits(v) for v in range(g.n + 1)]
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & adj[v])

    full = 0
    for v in g.vertices():
        full |= 1 << v
    expand(0, full)
    return best


def gp_lower_bound(g: Graph) -> int:
    """omega(G) - 1, a lower bound on bp(G)."""
    return clique_number(g) - 1


def shift_to_s_max(g: Graph, sp: SplitPartition) -> SplitPartition:
    """Rewrite a K-max split partition into an S-max one.

    The K-max witness k has no neighbor in S, so moving it across keeps K
    complete and S independent while k now sees all of the new clique side.
    Balanced and already-S-max partitions are returned unchanged.
    """
    cls = classify_split(g, sp)
    if cls.kind is not SplitKind.UNBALANCED_K_MAX:
        return sp
    k = cls.witness
    return SplitPartition(
        sp.clique_side - {k}, sp.independent_side | {k}
    )


def star_partition(
    g: Graph, sp: SplitPartition, order: Sequence[int] | None = None
) -> BicliquePartition:
    """Greedy star partition centered on the clique side.

    Processes K in the given order (ascending index by default); each center
    takes all its still-uncovered incident edges as one star; empty stars are
    dropped.  Every edge of a split graph has an endpoint in K, so the result
    is always a valid partition of size at most |K|.  For an S-max partition
    the size is exactly omega(G) - 1.

    Raises:
        PreconditionError: sp invalid, or order not a permutation of K.
    """
    validate_split_partition(g, sp)
    if order is None:
        centers = sorted(sp.clique_side)
    else:
        centers = list(order)
        if sorted(centers) != sorted(sp.clique_side):
            raise PreconditionError("order must be a permutation of the clique side")
    covered: set[tuple[int, int]] = set()
    stars = []
    for c in centers:
        leaves = []
        for w in g.neighbors(c):
            e = (c, w) if c < w else (w, c)
            if e not in covered:
                leaves.append(w)
                covered.add(e)
        if leaves:
            stars.append(Biclique(frozenset({c}), frozenset(leaves)))
    return BicliquePartition(tuple(stars))


def _greedy_star_partition(g: Graph) -> BicliquePartition:
    # Works on any graph: vertex-ascending stars over uncovered edges.
    covered: set[tuple[int, int]] = set()
    stars = []
    for c in g.vertices():
        leaves = []
        for w in g.neighbors(c):
            e = (c, w) if c < w else (w, c)
            if e not in covered:
                leaves.append(w)
                covered.add(e)
        if leaves:
            stars.append(Biclique(frozenset({c}), frozenset(leaves)))
    return BicliquePartition(tuple(stars))


@dataclass(frozen=True)
class BpResult:
    """bp(G) outcome: proven value, or a [lower, upper] interval.

    status "optimal": value = bp(G) and witness is a minimum partition.
    status "bounds": the search was cut short (budget or edge limit); witness
    realizes upper.
    """

    value: int
    witness: BicliquePartition
    status: str
    lower: int
    upper: int

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "status": self.status,
            "lower": self.lower,
            "upper": self.upper,
            "witness": partition_to_dict(self.witness),
        }


def _partition_from_slots(slots) -> BicliquePartition:
    return BicliquePartition(
        tuple(Biclique(frozenset(left), frozenset(right)) for left, right in slots)
    )


def bp_exact(
    g: Graph, budget_ms: int | None = None, edge_limit: int = 64
) -> BpResult:
    """Exact bp(G) by iterative deepening between the bounds.

    Split inputs classify first: unbalanced graphs settle immediately, since
    the S-max star partition meets the omega - 1 lower bound with no search.
    Otherwise target sizes run from gp_lower_bound upward; each size is an
    exact feasibility search assigning edges to biclique slots in canonical
    order.  Inputs above edge_limit, and searches that outlive the budget,
    degrade to status "bounds" instead of raising.
    """
    if g.edge_count == 0:
        return BpResult(0, BicliquePartition(()), "optimal", 0, 0)
    rec = recognize_split(g)
    if isinstance(rec, SplitPartition):
        cls = classify_split(g, rec)
        lower = cls.omega - 1
        if cls.kind is not SplitKind.BALANCED:
            witness = star_partition(g, shift_to_s_max(g, rec))
            if len(witness) != lower:
                raise AssertionError(
                    f"S-max star partition has size {len(witness)}, expected {lower}"
                )
            return BpResult(lower, witness, "optimal", lower, lower)
        upper_witness = star_partition(g, rec)
    else:
        lower = clique_number(g) - 1
        upper_witness = _greedy_star_partition(g)
    upper = len(upper_witness)
    if lower >= upper:
        return BpResult(upper, upper_witness, "optimal", upper, upper)
    if g.edge_count > edge_limit:
        return BpResult(upper, upper_witness, "bounds", lower, upper)
    deadline = None
    if budget_ms is not None:
        deadline = time.monotonic_ns() + budget_ms * 1_000_000
    adj = [g.adjacency_bits(v) for v in range(g.n + 1)]
    for k in range(lower, upper):
        status, slots = _kernels.biclique_partition(g.n, g.edges, adj, k, deadline)
        if status == "found":
            witness = _partition_from_slots(slots)
            return BpResult(k, witness, "optimal", k, k)
        if status == "aborted":
            return BpResult(upper, upper_witness, "bounds", k, upper)
    return BpResult(upper, upper_witness, "optimal", upper, upper)


def lift_bipartite_partition(
    g: Graph,
    sp: SplitPartition,
    pairing: Mapping[int, int],
    cross: BicliquePartition,
) -> BicliquePartition:
    """Lift a partition of the K-S edges to a partition of all of E(g).

    Requires |K| = |S| with `pairing` a bijection K -> S whose biadjacency
    matrix A (A[i][j] = 1 iff k_i ~ pairing[k_j]) is a tournament matrix, and
    `cross` a valid partition of exactly the K-S edges with each left part
    inside K (flipped bicliques are normalized).  Each right part V_i then
    absorbs the partners of its members: V'_i = V_i + {u_j : pairing[u_j] in
    V_i}.  The tournament identity makes the result cover every K-K edge
    exactly once, so the output partitions E(g) at unchanged size.

    Raises:
        PreconditionError: bad pairing, tournament identity violated (the
            offending entry pair is named), or cross not a valid partition
            of the K-S edges.
    """
    validate_split_partition(g, sp)
    ks = sorted(sp.clique_side)
    ss = sorted(sp.independent_side)
    if len(ks) != len(ss):
        raise PreconditionError(f"|K| = {len(ks)} != |S| = {len(ss)}")
    if sorted(pairing.keys()) != ks or sorted(pairing.values()) != ss:
        raise PreconditionError("pairing must be a bijection from K onto S")
    n = len(ks)
    partner = dict(pairing)
    # Tournament identity of the biadjacency under the pairing.
    for a in range(n):
        if g.has_edge(ks[a], partner[ks[a]]):
            raise PreconditionError(
                f"diagonal entry ({a + 1},{a + 1}) is 1: edge "
                f"({ks[a]},{partner[ks[a]]}) present"
            )
        for b in range(a + 1, n):
            ab = int(g.has_edge(ks[a], partner[ks[b]]))
            ba = int(g.has_edge(ks[b], partner[ks[a]]))
            if ab + ba != 1:
                raise PreconditionError(
                    f"entries ({a + 1},{b + 1}) and ({b + 1},{a + 1}) sum to "
                    f"{ab + ba}, not 1"
                )
    k_set, s_set = set(ks), set(ss)
    normalized = []
    for b in cross:
        if b.left <= k_set and b.right <= s_set:
            normalized.append(b)
        elif b.left <= s_set and b.right <= k_set:
            normalized.append(b.swap())
        else:
            raise PreconditionError(
                "cross partition contains a biclique not of the form U in K, V in S"
            )
    cross_edges = [
        (u, v) for u, v in g.edges if (u in k_set) != (v in k_set)
    ]
    gb = Graph(g.n, cross_edges)
    report = verify_biclique_partition(gb, BicliquePartition(tuple(normalized)))
    if not report.valid:
        raise PreconditionError(
            "cross is not a valid partition of the K-S edges: " + str(report.to_dict())
        )
    inverse = {v: u for u, v in partner.items()}
    lifted = tuple(
        Biclique(b.left, b.right | {inverse[v] for v in b.right})
        for b in normalized
    )
    return BicliquePartition(lifted)


@dataclass(frozen=True)
class StructuralReport:
    """Minimum-partition structure checks for balanced split graphs.

    Both properties are theorems for any valid partition of size at most
    omega - 1, so a False flag signals an inconsistency; the offending
    biclique index is carried for diagnosis.
    """

    no_star_centered_in_s: bool
    star_index: int | None
    no_part_inside_s: bool
    part_index: int | None

    @property
    def all_pass(self) -> bool:
        return self.no_star_centered_in_s and self.no_part_inside_s

    def to_dict(self) -> dict:
        return {
            "no_star_centered_in_S": self.no_star_centered_in_s,
            "star_index": self.star_index,
            "no_part_inside_S": self.no_part_inside_s,
            "part_index": self.part_index,
        }


def structural_checks(
    g: Graph, sp: SplitPartition, p: BicliquePartition
) -> StructuralReport:
    """Evaluate the two structural lemmas on a partition of a balanced graph.

    Raises:
        PreconditionError: sp not balanced, p invalid, or |p| > omega - 1
            (the lemmas say nothing outside these hypotheses).
    """
    cls = classify_split(g, sp)
    if cls.kind is not SplitKind.BALANCED:
        raise PreconditionError(f"split partition classifies as {cls.kind.value}")
    report = verify_biclique_partition(g, p)
    if not report.valid:
        raise PreconditionError("partition does not validate against the graph")
    if len(p) > cls.omega - 1:
        raise PreconditionError(
            f"partition size {len(p)} exceeds omega - 1 = {cls.omega - 1}"
        )
    s_set = sp.independent_side
    star_index = None
    part_index = None
    for i, b in enumerate(p):
        if star_index is None and (
            (len(b.left) == 1 and b.left <= s_set)
            or (len(b.right) == 1 and b.right <= s_set)
        ):
            star_index = i
        if part_index is None and (b.left <= s_set or b.right <= s_set):
            part_index = i
    return StructuralReport(
        star_index is None, star_index, part_index is None, part_index
    )
