import json
import shutil
import subprocess

import pytest

BICLIQ = shutil.which("bicliq")
pytestmark = pytest.mark.skipif(BICLIQ is None, reason="console script not installed")


def run(*args, expect: int = 0):
    proc = subprocess.run(
        [BICLIQ, *args], capture_output=True, text=True, timeout=300
    )
    assert proc.returncode == expect, proc.stderr
    return proc


def test_recognize_counterexample(fixtures_dir):
    out = run("recognize", str(fixtures_dir / "counterexample.graph")).stdout
    d = json.loads(out)
    assert d["split"] is True
    assert d["K"] == list(range(1, 8))
    assert d["S"] == list(range(8, 15))


def test_classify_text_format(fixtures_dir):
    out = run(
        "classify", str(fixtures_dir / "counterexample.graph"), "--format", "text"
    ).stdout
    assert 'kind: "balanced"' in out
    assert "omega: 7" in out


def test_bp_value_and_byte_stability(fixtures_dir):
    args = ("bp", str(fixtures_dir / "counterexample.graph"))
    first = run(*args).stdout
    second = run(*args).stdout
    assert first == second  # byte-stable across runs
    d = json.loads(first)
    assert d["value"] == 6 and d["status"] == "optimal"
    assert len(d["witness"]["bicliques"]) == 6


def test_bp_thread_flag_does_not_change_bytes(fixtures_dir):
    base = run("bp", str(fixtures_dir / "counterexample.graph")).stdout
    threaded = run(
        "bp", str(fixtures_dir / "counterexample.graph"), "--threads", "4"
    ).stdout
    assert base == threaded


def test_verify_partition(fixtures_dir):
    out = run(
        "verify-partition",
        str(fixtures_dir / "counterexample.graph"),
        str(fixtures_dir / "counterexample.partition.json"),
    ).stdout
    assert json.loads(out)["valid"] is True


def test_mc_complement(fixtures_dir):
    out = run("mc-complement", str(fixtures_dir / "counterexample.graph")).stdout
    d = json.loads(out)
    assert d["count"] == 8
    assert sorted(map(tuple, d["cliques"]))[-1] == tuple(range(8, 15))


def test_rank_default_and_all(fixtures_dir):
    out = run("rank", str(fixtures_dir / "singular9.matrix")).stdout
    d = json.loads(out)
    assert d["real_rank"] == 8 and d["term_rank"] == 9
    assert "binary_rank" not in d
    out = run("rank", "--all", str(fixtures_dir / "singular9.matrix")).stdout
    d = json.loads(out)
    assert d["binary_rank"] == d["nonneg_integer_rank"] == 9
    assert d["binary_status"] == "proven"


def test_gen_u_and_a():
    out = run("gen", "u", "--m", "3").stdout
    assert out == "3 3\n0 0 1\n1 0 0\n0 1 0\n"
    out = run("gen", "a", "--n", "5").stdout
    assert out.splitlines()[0] == "5 5"


def test_gen_family_with_split(tmp_path):
    split_out = tmp_path / "split.json"
    out = run("gen", "family", "--n", "5", "--split-out", str(split_out)).stdout
    assert out.startswith("p 10 ")
    d = json.loads(split_out.read_text())
    assert d["K"] == [1, 2, 3, 4, 5]


def test_gen_random_deterministic():
    a = run("gen", "random", "--k", "4", "--s", "3", "--p", "0.5", "--seed", "9").stdout
    b = run("gen", "random", "--k", "4", "--s", "3", "--p", "0.5", "--seed", "9").stdout
    assert a == b
    c = run("gen", "random", "--k", "4", "--s", "3", "--p", "0.5", "--seed", "10").stdout
    assert c != a


def test_gen_fixtures_reproduces_committed(tmp_path, fixtures_dir):
    run("gen", "fixtures", "--dir", str(tmp_path))
    names = sorted(p.name for p in fixtures_dir.iterdir())
    assert sorted(p.name for p in tmp_path.iterdir()) == names
    for name in names:
        assert (tmp_path / name).read_bytes() == (fixtures_dir / name).read_bytes()


def test_address_pipeline(fixtures_dir, tmp_path):
    addr_file = tmp_path / "addr.json"
    run(
        "address",
        "convert",
        str(fixtures_dir / "counterexample.graph"),
        str(fixtures_dir / "counterexample.partition.json"),
        "--output",
        str(addr_file),
    )
    d = json.loads(addr_file.read_text())
    assert d["length"] == 6 and len(d["addresses"]) == 14
    out = run("address", "check", str(addr_file)).stdout
    check = json.loads(out)
    # the full family includes nonadjacent pairs at distance 0
    assert check["neighborly"] is False
    out = run(
        "address",
        "report",
        str(fixtures_dir / "counterexample.graph"),
        str(fixtures_dir / "counterexample.partition.json"),
    ).stdout
    report = json.loads(out)
    assert report["volume"] == 46 and report["neighborly_ok"] is True


def test_output_flag_writes_file(fixtures_dir, tmp_path):
    target = tmp_path / "out.json"
    proc = run(
        "recognize",
        str(fixtures_dir / "counterexample.graph"),
        "--output",
        str(target),
    )
    assert proc.stdout == ""
    assert json.loads(target.read_text())["split"] is True


def test_exit_codes(tmp_path, fixtures_dir):
    bad = tmp_path / "bad.graph"
    bad.write_text("p 3 1\ne 1 9\n")
    proc = run("recognize", str(bad), expect=2)
    assert "line 2" in proc.stderr
    run("bp", str(tmp_path / "missing.graph"), expect=1)
    proc = subprocess.run([BICLIQ, "frobnicate"], capture_output=True, text=True)
    assert proc.returncode == 2
    # negative budgets are a usage error, same as the env var path
    g14 = fixtures_dir / "counterexample.graph"
    proc = subprocess.run(
        [BICLIQ, "bp", str(g14), "--budget-ms", "-5"], capture_output=True, text=True
    )
    assert proc.returncode == 2
    assert "nonnegative" in proc.stderr
    # malformed partition JSON
    notjson = tmp_path / "p.json"
    notjson.write_text("{")
    g = tmp_path / "g.graph"
    g.write_text("p 2 1\ne 1 2\n")
    run("verify-partition", str(g), str(notjson), expect=1)


def test_budget_env_and_flag(fixtures_dir, tmp_path):
    import os

    env = dict(os.environ, BICLIQ_BUDGET_MS="0")
    proc = subprocess.run(
        [BICLIQ, "bp", str(fixtures_dir / "counterexample.graph")],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "bounds"
    # explicit flag beats the environment
    proc = subprocess.run(
        [
            BICLIQ,
            "bp",
            str(fixtures_dir / "counterexample.graph"),
            "--budget-ms",
            "600000",
        ],
        capture_output=True,
        text=True,
        env=env,
    )
    assert json.loads(proc.stdout)["status"] == "optimal"
