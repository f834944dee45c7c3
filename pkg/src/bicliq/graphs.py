"""Undirected graphs on vertices 1..n, bicliques, and partition validation.

Graphs are simple (no loops, no multi-edges); duplicate and reversed edge
pairs are merged on construction.  Adjacency is kept as per-vertex bitmasks,
with bit v standing for vertex v, so neighborhood intersections used by the
clique and validation routines are single integer ANDs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import BudgetError, ParseError


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on the vertex set {1, ..., n}."""

    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            seen.add((u, v) if u < v else (v, u))
        adj = [0] * (n + 1)
        for u, v in seen:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._edges = tuple(sorted(seen))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            return False
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def adjacency_bits(self, v: int) -> int:
        """Neighborhood of v as a bitmask (bit u set iff u ~ v)."""
        return self._adj[v]

    def complement(self) -> "Graph":
        n = self.n
        comp = [
            (u, v)
            for u, v in combinations(range(1, n + 1), 2)
            if not self._adj[u] >> v & 1
        ]
        return Graph(n, comp)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self._edges)})"


def _vertex_set(vs: Iterable[int], what: str) -> frozenset[int]:
    out = frozenset(vs)
    if not out:
        raise ValueError(f"{what} must be nonempty")
    for v in out:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"{what} contains invalid vertex {v!r}")
    return out


@dataclass(frozen=True)
class Biclique:
    """A complete bipartite block: every left vertex joined to every right one.

    Parts must be nonempty and disjoint.  Parts are unordered internally but
    the (left, right) orientation is preserved because downstream addressing
    assigns 0 to the left part and 1 to the right.
    """

    left: frozenset[int]
    right: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "left", _vertex_set(self.left, "left part"))
        object.__setattr__(self, "right", _vertex_set(self.right, "right part"))
        if self.left & self.right:
            both = sorted(self.left & self.right)
            raise ValueError(f"parts intersect at {both}")

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All covered pairs, normalized to (min, max)."""
        for u in self.left:
            for v in self.right:
                yield (u, v) if u < v else (v, u)

    def vertices(self) -> frozenset[int]:
        return self.left | self.right

    def swap(self) -> "Biclique":
        return Biclique(self.right, self.left)


@dataclass(frozen=True)
class BicliquePartition:
    """An ordered collection of bicliques proposed as an edge partition."""

    bicliques: tuple[Biclique, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bicliques", tuple(self.bicliques))

    def __len__(self) -> int:
        return len(self.bicliques)

    def __iter__(self) -> Iterator[Biclique]:
        return iter(self.bicliques)

    def __getitem__(self, i: int) -> Biclique:
        return self.bicliques[i]


def canonical_clique_order(cliques: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    """Sort vertex sets by decreasing size, ties broken lexicographically."""
    return tuple(sorted(cliques, key=lambda c: (-len(c), sorted(c))))


@dataclass(frozen=True)
class CliqueSet:
    """Vertex subsets in canonical order (size-descending, then lexicographic)."""

    cliques: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cliques", canonical_clique_order(self.cliques))

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.cliques)

    def largest(self) -> int:
        return max((len(c) for c in self.cliques), default=0)


@dataclass(frozen=True)
class ValidationReport:
    """Full defect list for a proposed biclique partition.

    valid is True iff there are no illegal bicliques, every edge of the host
    graph is covered, and no pair is covered twice.  Defects are enumerated
    exhaustively rather than fail-fast.
    """

    valid: bool
    illegal_bicliques: tuple[tuple[int, str], ...]
    uncovered_edges: tuple[tuple[int, int], ...]
    overcovered_edges: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "illegal_bicliques": [
                {"index": i, "reason": reason} for i, reason in self.illegal_bicliques
            ],
            "uncovered_edges": [list(e) for e in self.uncovered_edges],
            "overcovered_edges": [list(e) for e in self.overcovered_edges],
        }


def verify_biclique_partition(g: Graph, partition: BicliquePartition) -> ValidationReport:
    """Check that the bicliques exactly partition E(g).

    Every biclique must live inside g (vertices in range, all left-right
    pairs actual edges); the union of the covered pair sets must hit every
    edge exactly once.  Pairs from illegal bicliques still count toward
    coverage when they are real edges, so a report can carry several kinds
    of defect at once.
    """
    illegal: list[tuple[int, str]] = []
    coverage: dict[tuple[int, int], int] = {}
    for i, b in enumerate(partition):
        bad_vertex = next((v for v in sorted(b.vertices()) if v > g.n), None)
        if bad_vertex is not None:
            illegal.append((i, f"vertex {bad_vertex} out of range 1..{g.n}"))
        non_edge = None
        for u, v in b.pairs():
            if g.has_edge(u, v):
                coverage[(u, v)] = coverage.get((u, v), 0) + 1
            elif non_edge is None and u <= g.n and v <= g.n:
                non_edge = (u, v)
        if non_edge is not None:
            illegal.append((i, f"pair ({non_edge[0]},{non_edge[1]}) is not an edge"))
    uncovered = tuple(e for e in g.edges if e not in coverage)
    overcovered = tuple(sorted(e for e, c in coverage.items() if c > 1))
    valid = not illegal and not uncovered and not overcovered
    return ValidationReport(valid, tuple(illegal), uncovered, overcovered)


def maximal_cliques(g: Graph, limit: int = 32) -> CliqueSet:
    """All maximal cliques via Bron-Kerbosch with greedy pivoting.

    Exponential in the worst case, so refuses graphs above `limit` vertices.

    Args:
        g: host graph.
        limit: largest admissible vertex count.

    Returns:
        CliqueSet in canonical order.

    Raises:
        BudgetError: if g.n exceeds limit.
    """
    if g.n > limit:
        raise BudgetError(
            f"maximal clique enumeration limited to {limit} vertices, got {g.n}"
        )
    adj = g._adj
    out: list[frozenset[int]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(frozenset(_bits(r)))
            return
        pivot = max(_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in _bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    full = 0
    for v in g.vertices():
        full |= 1 << v
    expand(0, full, 0)
    return CliqueSet(tuple(out))


# --- text format: "p <n> <m>" header then m "e <u> <v>" lines, "c" comments ---

def parse_graph(text: str) -> Graph:
    """Parse the graph text format, reporting the offending line on failure."""
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate p line", lineno)
            if len(fields) != 3:
                raise ParseError("expected 'p <n> <m>'", lineno)
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("p line fields must be integers", lineno) from None
            if n < 1 or m < 0:
                raise ParseError(f"invalid sizes n={n} m={m}", lineno)
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge before p line", lineno)
            if len(fields) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise ParseError(f"illegal edge ({u},{v}) for n={n}", lineno)
            edges.append((u, v))
        else:
            raise ParseError(f"unknown record {fields[0]!r}", lineno)
    if n is None:
        raise ParseError("missing p line")
    if m != len(edges):
        raise ParseError(f"p line promises {m} edges, found {len(edges)}")
    g = Graph(n, edges)
    if g.edge_count != len(edges):
        raise ParseError("duplicate edges in input")
    return g


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# --- partition JSON: {"bicliques": [{"left": [...], "right": [...]}, ...]} ---

def partition_to_dict(p: BicliquePartition) -> dict:
    return {
        "bicliques": [
            {"left": sorted(b.left), "right": sorted(b.right)} for b in p
        ]
    }


def partition_from_dict(d: object) -> BicliquePartition:
    if not isinstance(d, dict) or "bicliques" not in d:
        raise ParseError("partition JSON must be an object with a 'bicliques' key")
    items = d["bicliques"]
    if not isinstance(items, list):
        raise ParseError("'bicliques' must be a list")
    out = []
    for i, item in enumerate(items):
        if not isinstance(item, dict) or "left" not in item or "right" not in item:
            raise ParseError(f"biclique {i} must be an object with 'left' and 'right'")
        left, right = item["left"], item["right"]
        if not isinstance(left, list) or not isinstance(right, list):
            raise ParseError(f"biclique {i}: parts must be lists")
        try:
            out.append(Biclique(frozenset(left), frozenset(right)))
        except (ValueError, TypeError) as exc:
            raise ParseError(f"biclique {i}: {exc}") from None
    return BicliquePartition(tuple(out))
