"""Generators and literal fixtures for every object the toolkit studies.

The parity tournament U_m, the bordered tournament A_n (border of three
leading rows/columns and one trailing, around a U_{n-4} core), the 2n-vertex
balanced split graph whose K-S block is A_n, the 14-vertex counterexample
with its 6-biclique partition, the singular 9-vertex tournament, and seeded
random split graphs for property tests.

The counterexample and the 9-tournament are embedded as literal data, not
reconstructed, so nothing downstream depends on a rederivation being right.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graphs import Biclique, BicliquePartition, Graph
from .ranks import BinaryMatrix
from .splits import SplitPartition


def parity_tournament(m: int) -> BinaryMatrix:
    """The m x m tournament U with U[i,j] = 1 iff j - i is even and positive
    or odd and negative (1-indexed).

    Regular for odd m (all row sums (m-1)/2), near-regular for even m (row
    sums m/2 - 1 on odd-indexed rows, m/2 on even-indexed ones).
    """
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    return BinaryMatrix(
        [
            [
                1 if ((j - i) % 2 == 0 and j > i) or ((j - i) % 2 == 1 and j < i) else 0
                for j in range(1, m + 1)
            ]
            for i in range(1, m + 1)
        ]
    )


def bordered_tournament(n: int) -> BinaryMatrix:
    """The n x n tournament A_n: a U_{n-4} core framed by four border lines.

    Row 1 = e_2, row 2 = e_n, row 3 has 1s in columns {1, 2, n}, rows
    4..n-1 have 1s in columns {1, 2, 3, n} plus the U_{n-4} pattern in
    columns 4..n-1, and row n = e_1.  Every row has a 1; every column has a
    1 only from n = 7 on (column 4 of A_5 and column 5 of A_6 are zero).
    """
    if n < 5:
        raise ValueError(f"order must be at least 5, got {n}")
    m = n - 4
    u = parity_tournament(m).data
    a = [[0] * n for _ in range(n)]
    a[0][1] = 1
    a[1][n - 1] = 1
    a[2][0] = a[2][1] = a[2][n - 1] = 1
    for i in range(3, n - 1):
        a[i][0] = a[i][1] = a[i][2] = a[i][n - 1] = 1
        for j in range(3, n - 1):
            a[i][j] = u[i - 3][j - 3]
    a[n - 1][0] = 1
    return BinaryMatrix(a)


@dataclass(frozen=True)
class FamilyInstance:
    """A balanced split graph on 2n vertices built from the tournament A_n.

    Vertices 1..n form the clique side (u_1..u_n), n+1..2n the independent
    side (v_1..v_n); u_i ~ v_j iff tournament[i, j] = 1, so the adjacency
    matrix is the block matrix [[J - I, A], [A^T, 0]].
    """

    n: int
    tournament: BinaryMatrix
    graph: Graph
    partition: SplitPartition
    pairing: dict[int, int]


def family_graph(n: int) -> FamilyInstance:
    """The 2n-vertex instance whose K-S biadjacency is A_n."""
    a = bordered_tournament(n)
    edges = [(u, v) for u, v in combinations(range(1, n + 1), 2)]
    for i in range(n):
        for j in range(n):
            if a.data[i][j]:
                edges.append((i + 1, n + 1 + j))
    sp = SplitPartition(
        frozenset(range(1, n + 1)), frozenset(range(n + 1, 2 * n + 1))
    )
    pairing = {i: n + i for i in range(1, n + 1)}
    return FamilyInstance(n, a, Graph(2 * n, edges), sp, pairing)


# 14-vertex counterexample: K = 1..7 complete; S-neighborhoods of the clique
# vertices, read off the adjacency table's upper triangle.
_CROSS = {
    1: (9,),
    2: (10, 11),
    3: (8, 12),
    4: (8, 10, 13),
    5: (8, 9, 11, 13),
    6: (8, 9, 10, 14),
    7: (8, 9, 10, 11, 12),
}

_PARTITION = (
    ((4, 5), (1, 6, 8, 13)),
    ((6,), (1, 2, 3, 7, 8, 9, 10, 14)),
    ((3, 7), (1, 5, 8, 12)),
    ((1, 5, 7), (2, 9)),
    ((2, 4, 7), (3, 10)),
    ((2, 5, 7), (4, 11)),
)


def counterexample_fixture() -> tuple[Graph, SplitPartition, BicliquePartition]:
    """The 14-vertex split graph with bp = 6 < 7 = mc(G^c) - 1, its split
    partition (K = 1..7, S = 8..14), and its 6-biclique partition."""
    edges = list(combinations(range(1, 8), 2))
    for k, ss in _CROSS.items():
        edges.extend((k, s) for s in ss)
    g = Graph(14, edges)
    sp = SplitPartition(frozenset(range(1, 8)), frozenset(range(8, 15)))
    p = BicliquePartition(
        tuple(Biclique(frozenset(u), frozenset(v)) for u, v in _PARTITION)
    )
    return g, sp, p


_SINGULAR_9 = (
    "010010011",
    "001001101",
    "100100110",
    "110010111",
    "011001111",
    "101100111",
    "100000010",
    "010000001",
    "001000100",
)


def singular_tournament_9() -> BinaryMatrix:
    """The 9-vertex tournament with real rank 8 (kernel vector
    (1,1,1,1,1,1,-1,-1,-1)) whose binary rank is nevertheless 9."""
    return BinaryMatrix([[int(c) for c in row] for row in _SINGULAR_9])


def random_split_graph(
    k_size: int, s_size: int, edge_prob: float, seed: int
) -> tuple[Graph, SplitPartition]:
    """Seeded random split graph: K complete, S empty, each K-S pair an edge
    independently with probability edge_prob.  Same seed, same graph."""
    if k_size < 0 or s_size < 0:
        raise ValueError("sizes must be nonnegative")
    if not 0 <= edge_prob <= 1:
        raise ValueError(f"edge_prob must be in [0, 1], got {edge_prob}")
    n = k_size + s_size
    if n == 0:
        raise ValueError("graph needs at least one vertex")
    rng = random.Random(seed)
    edges = list(combinations(range(1, k_size + 1), 2))
    for k in range(1, k_size + 1):
        for s in range(k_size + 1, n + 1):
            if rng.random() < edge_prob:
                edges.append((k, s))
    sp = SplitPartition(
        frozenset(range(1, k_size + 1)), frozenset(range(k_size + 1, n + 1))
    )
    return Graph(n, edges), sp
