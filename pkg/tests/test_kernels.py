import random
import subprocess
import sys
import time

import pytest

from bicliq import KERNEL_BACKEND, Graph, random_split_graph
from bicliq._kernels import _native, pure

RNG_SEED = 60923


def graph_args(g: Graph):
    adj = [g.adjacency_bits(v) for v in range(g.n + 1)]
    return g.n, g.edges, adj


def random_matrix_bits(rng: random.Random, rows: int, cols: int, p: float):
    return [
        sum(1 << j for j in range(cols) if rng.random() < p) for _ in range(rows)
    ]


def test_native_backend_is_active():
    # the build ships the extension; the fallback is exercised separately
    assert KERNEL_BACKEND == "native"
    assert _native is not None


def test_backends_agree_on_rectangles():
    rng = random.Random(RNG_SEED)
    for _ in range(150):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        bits = random_matrix_bits(rng, rows, cols, rng.random())
        for k in range(0, 7):
            got_p = pure.rectangle_partition(rows, cols, list(bits), k, None)
            got_n = _native.rectangle_partition(rows, cols, list(bits), k, None)
            assert got_p == got_n


def test_backends_agree_on_bicliques():
    rng = random.Random(RNG_SEED + 1)
    for _ in range(60):
        k_size = rng.randint(1, 4)
        s_size = rng.randint(1, 4)
        g, _ = random_split_graph(k_size, s_size, rng.random(), rng.randrange(1 << 30))
        args = graph_args(g)
        for k in range(0, 5):
            got_p = pure.biclique_partition(*args, k, None)
            got_n = _native.biclique_partition(*args, k, None)
            assert got_p == got_n


def test_backends_identical_witness_midsize():
    from bicliq import family_graph, singular_tournament_9

    a = singular_tournament_9()
    bits = a.row_bits()
    # the infeasibility proof and the witness search, both compared exactly
    assert pure.rectangle_partition(9, 9, bits, 8, None) == _native.rectangle_partition(
        9, 9, bits, 8, None
    ) == ("exhausted", None)
    got_p = pure.rectangle_partition(9, 9, bits, 9, None)
    got_n = _native.rectangle_partition(9, 9, bits, 9, None)
    assert got_p == got_n and got_p[0] == "found"

    g = family_graph(5).graph
    args = graph_args(g)
    got_p = pure.biclique_partition(*args, 4, None)
    got_n = _native.biclique_partition(*args, 4, None)
    assert got_p == got_n and got_p[0] == "found"


def test_abort_on_expired_deadline():
    from bicliq import counterexample_fixture, singular_tournament_9

    g, _, _ = counterexample_fixture()
    args = graph_args(g)
    past = time.monotonic_ns()  # already elapsed by call time
    assert pure.biclique_partition(*args, 6, past) == ("aborted", None)
    assert _native.biclique_partition(*args, 6, past) == ("aborted", None)
    a = singular_tournament_9()
    bits = a.row_bits()
    assert pure.rectangle_partition(9, 9, bits, 8, past) == ("aborted", None)
    assert _native.rectangle_partition(9, 9, bits, 8, past) == ("aborted", None)


def test_infeasible_exhausts():
    # bp(K_4) = 3: asking for 2 must exhaust, not abort
    from itertools import combinations

    g = Graph(4, list(combinations(range(1, 5), 2)))
    args = graph_args(g)
    assert pure.biclique_partition(*args, 2, None) == ("exhausted", None)
    assert _native.biclique_partition(*args, 2, None) == ("exhausted", None)


def test_pure_env_override():
    # P4 is balanced, so bp_exact must actually run the selected kernel
    code = (
        "import bicliq\n"
        "print(bicliq.KERNEL_BACKEND)\n"
        "g = bicliq.Graph(4, [(1, 2), (2, 3), (3, 4)])\n"
        "print(bicliq.bp_exact(g).value)\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"BICLIQ_PURE": "1", "PATH": "/usr/bin:/bin"},
        check=True,
    )
    assert out.stdout.split() == ["pure", "2"]
