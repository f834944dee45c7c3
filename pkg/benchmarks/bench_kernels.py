"""Native vs pure kernel timings on the workloads that dominate verify-paper.

Run from the repo root:

    python benchmarks/bench_kernels.py

Both backends are imported directly (bypassing the import-time selection), so
one process measures both.  Each workload is a decision query the solvers
actually issue: the infeasibility proofs are the expensive side, the witness
searches the cheap one.  Results also cross-check that the two backends
return identical outcomes and witnesses.
"""

from __future__ import annotations

import sys
import time

from bicliq._kernels import _native, pure
from bicliq.generators import bordered_tournament, counterexample_fixture, singular_tournament_9


def _graph_args(g):
    adj = [g.adjacency_bits(v) for v in range(g.n + 1)]
    return g.n, g.edges, adj


def _matrix_args(m):
    return m.rows, m.cols, m.row_bits()


def workloads():
    g, _, _ = counterexample_fixture()
    n, edges, adj = _graph_args(g)
    a9 = singular_tournament_9()
    a8 = bordered_tournament(8)
    yield (
        "counterexample bp: no partition into 5",
        "biclique",
        (n, edges, adj, 5),
    )
    yield (
        "counterexample bp: find partition into 6",
        "biclique",
        (n, edges, adj, 6),
    )
    yield (
        "singular 9-tournament: no 8 rectangles",
        "rectangle",
        (*_matrix_args(a9), 8),
    )
    yield (
        "singular 9-tournament: find 9 rectangles",
        "rectangle",
        (*_matrix_args(a9), 9),
    )
    yield (
        "A_8: find 7 rectangles",
        "rectangle",
        (*_matrix_args(a8), 7),
    )
    yield (
        "A_8: no 6 rectangles",
        "rectangle",
        (*_matrix_args(a8), 6),
    )


def run_one(impl, kind, args):
    fn = impl.biclique_partition if kind == "biclique" else impl.rectangle_partition
    start = time.perf_counter()
    status, slots = fn(*args, None)
    return time.perf_counter() - start, status, slots


def main() -> int:
    if _native is None:
        print("native backend not built; run pip install -e . first", file=sys.stderr)
        return 1
    print(f"{'workload':<44} {'pure':>9} {'native':>9} {'speedup':>8}")
    total_pure = total_native = 0.0
    for name, kind, args in workloads():
        t_pure, s_pure, w_pure = run_one(pure, kind, args)
        t_native, s_native, w_native = run_one(_native, kind, args)
        if (s_pure, w_pure) != (s_native, w_native):
            print(f"MISMATCH on {name}: pure={s_pure} native={s_native}", file=sys.stderr)
            return 1
        total_pure += t_pure
        total_native += t_native
        print(
            f"{name:<44} {t_pure:>8.3f}s {t_native:>8.3f}s {t_pure / t_native:>7.1f}x"
        )
    print(
        f"{'total':<44} {total_pure:>8.3f}s {total_native:>8.3f}s "
        f"{total_pure / total_native:>7.1f}x"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
