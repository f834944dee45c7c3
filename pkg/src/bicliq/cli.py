"""Command-line surface.

JSON is the canonical output; text mode renders the same structure.  All
randomness flows from --seed, all solver budgets from --budget-ms (default
from BICLIQ_BUDGET_MS when set).  --threads is accepted for interface
stability and echoed in reports; execution is sequential either way, which
keeps output byte-stable across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .addressing import (
    AddressFamily,
    balanced_addressing_report,
    neighborly_check,
    partition_to_addressing,
    volume,
)
from .bp import bp_exact, gp_lower_bound
from .errors import BicliqError, ParseError
from .generators import (
    bordered_tournament,
    counterexample_fixture,
    family_graph,
    parity_tournament,
    random_split_graph,
    singular_tournament_9,
)
from .graphs import (
    Graph,
    format_graph,
    parse_graph,
    partition_from_dict,
    partition_to_dict,
    verify_biclique_partition,
)
from .ranks import format_matrix, parse_matrix, rank_report
from .splits import (
    NotSplit,
    SplitPartition,
    classify_split,
    mc_complement_split,
    recognize_split,
)
from .verify import RunConfig, run_verify_paper

_DEFAULT_BUDGET_MS = 900_000


def _budget_ms(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _default_budget() -> int:
    env = os.environ.get("BICLIQ_BUDGET_MS")
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise SystemExit(f"error: BICLIQ_BUDGET_MS={env!r} is not an integer")
        if value < 0:
            raise SystemExit("error: BICLIQ_BUDGET_MS must be nonnegative")
        return value
    return _DEFAULT_BUDGET_MS


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _render_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key, value in obj.items():
            if isinstance(value, dict):
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(value, indent + 1))
            elif isinstance(value, list) and any(
                isinstance(v, (dict, list)) for v in value
            ):
                lines.append(f"{pad}{key}:")
                for v in value:
                    if isinstance(v, (dict, list)):
                        lines.append(_render_text(v, indent + 1))
                    else:
                        lines.append(f"{pad}  {json.dumps(v)}")
            else:
                lines.append(f"{pad}{key}: {json.dumps(value)}")
        return "\n".join(lines)
    return pad + json.dumps(obj)


def _emit(args, payload: dict, text: str | None = None) -> None:
    if args.format == "json":
        out = json.dumps(payload, indent=2) + "\n"
    else:
        out = (text if text is not None else _render_text(payload)) + "\n"
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)


def _emit_raw(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _load_split(args, g: Graph) -> SplitPartition:
    if getattr(args, "split", None):
        d = json.loads(_read(args.split))
        sp = SplitPartition.from_dict(d)
    else:
        rec = recognize_split(g)
        if isinstance(rec, NotSplit):
            raise BicliqError(
                f"graph is not split (induced {rec.kind} on {list(rec.vertices)}); "
                "pass --split to supply a partition"
            )
        sp = rec
    return sp


def _cmd_recognize(args) -> int:
    g = parse_graph(_read(args.graph))
    rec = recognize_split(g)
    if isinstance(rec, NotSplit):
        payload = {
            "split": False,
            "certificate": {"kind": rec.kind, "vertices": list(rec.vertices)},
        }
    else:
        payload = {"split": True, **rec.to_dict()}
    _emit(args, payload)
    return 0


def _cmd_classify(args) -> int:
    g = parse_graph(_read(args.graph))
    sp = _load_split(args, g)
    cls = classify_split(g, sp)
    _emit(args, cls.to_dict())
    return 0


def _cmd_bp(args) -> int:
    g = parse_graph(_read(args.graph))
    res = bp_exact(g, args.budget_ms, args.edge_limit)
    _emit(args, res.to_dict())
    return 0


def _cmd_verify_partition(args) -> int:
    g = parse_graph(_read(args.graph))
    p = partition_from_dict(json.loads(_read(args.partition)))
    report = verify_biclique_partition(g, p)
    _emit(args, report.to_dict())
    return 0


def _cmd_mc_complement(args) -> int:
    g = parse_graph(_read(args.graph))
    sp = _load_split(args, g)
    mc = mc_complement_split(g, sp)
    payload = {"count": len(mc), "cliques": [sorted(c) for c in mc]}
    _emit(args, payload)
    return 0


def _cmd_rank(args) -> int:
    m = parse_matrix(_read(args.matrix))
    report = rank_report(m, args.budget_ms, include_binary=args.all)
    _emit(args, report.to_dict())
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "u":
        _emit_raw(args, format_matrix(parity_tournament(args.m)))
    elif args.kind == "a":
        _emit_raw(args, format_matrix(bordered_tournament(args.n)))
    elif args.kind == "family":
        inst = family_graph(args.n)
        _emit_raw(args, format_graph(inst.graph))
        if args.split_out:
            Path(args.split_out).write_text(
                json.dumps(inst.partition.to_dict(), indent=2) + "\n"
            )
    elif args.kind == "random":
        g, sp = random_split_graph(args.k, args.s, args.p, args.seed)
        _emit_raw(args, format_graph(g))
        if args.split_out:
            Path(args.split_out).write_text(
                json.dumps(sp.to_dict(), indent=2) + "\n"
            )
    elif args.kind == "fixtures":
        _write_fixtures(Path(args.dir))
        sys.stdout.write(f"fixtures written to {args.dir}\n")
    return 0


def _write_fixtures(root: Path) -> None:
    root.mkdir(parents=True, exist_ok=True)
    g, sp, p = counterexample_fixture()
    (root / "counterexample.graph").write_text(format_graph(g))
    (root / "counterexample.split.json").write_text(
        json.dumps(sp.to_dict(), indent=2) + "\n"
    )
    (root / "counterexample.partition.json").write_text(
        json.dumps(partition_to_dict(p), indent=2) + "\n"
    )
    (root / "singular9.matrix").write_text(format_matrix(singular_tournament_9()))
    for m in (4, 5):
        (root / f"u_m{m}.matrix").write_text(format_matrix(parity_tournament(m)))
    for n in (5, 6, 7, 8):
        (root / f"a_n{n}.matrix").write_text(format_matrix(bordered_tournament(n)))
        inst = family_graph(n)
        (root / f"family_n{n}.graph").write_text(format_graph(inst.graph))
        (root / f"family_n{n}.split.json").write_text(
            json.dumps(inst.partition.to_dict(), indent=2) + "\n"
        )


def _cmd_address(args) -> int:
    if args.mode == "convert":
        g = parse_graph(_read(args.graph))
        sp = _load_split(args, g)
        p = partition_from_dict(json.loads(_read(args.partition)))
        fam = partition_to_addressing(g, sp, p)
        _emit(args, fam.to_dict())
    elif args.mode == "check":
        fam = AddressFamily.from_dict(json.loads(_read(args.addresses)))
        ok, pair = neighborly_check(fam, args.k)
        payload = {
            "neighborly": ok,
            "k": args.k,
            "offending_pair": list(pair) if pair else None,
            "volume": volume(fam),
        }
        _emit(args, payload)
    elif args.mode == "report":
        g = parse_graph(_read(args.graph))
        sp = _load_split(args, g)
        p = partition_from_dict(json.loads(_read(args.partition)))
        report = balanced_addressing_report(g, sp, p)
        _emit(args, report.to_dict())
    return 0


def _cmd_verify_paper(args) -> int:
    cfg = RunConfig(
        budget_ms=args.budget_ms,
        threads=args.threads,
        seed=args.seed,
        fmt=args.format,
        edge_limit=args.edge_limit,
    )
    report = run_verify_paper(cfg)
    _emit(args, report.to_dict(), text=report.to_text().rstrip("\n"))
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--budget-ms",
        type=_budget_ms,
        default=_default_budget(),
        help="wall-clock budget per solver call (default 900000, or BICLIQ_BUDGET_MS)",
    )
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="accepted for interface stability; execution is sequential",
    )
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness")
    common.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    common.add_argument("--output", help="write output to a file instead of stdout")
    common.add_argument(
        "--edge-limit",
        type=int,
        default=64,
        help="edge count above which bp falls back to bounds",
    )

    parser = argparse.ArgumentParser(
        prog="bicliq",
        description=(
            "Exact biclique partitions of split graphs, 0/1 matrix ranks, "
            "and squashed-cube addressings."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", parents=[common], help="split recognition")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("classify", parents=[common], help="balanced / unbalanced")
    p.add_argument("graph")
    p.add_argument("--split", help="split partition JSON (default: recognize)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("bp", parents=[common], help="exact biclique partition number")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_bp)

    p = sub.add_parser(
        "verify-partition", parents=[common], help="validate a partition file"
    )
    p.add_argument("graph")
    p.add_argument("partition")
    p.set_defaults(func=_cmd_verify_partition)

    p = sub.add_parser(
        "mc-complement", parents=[common], help="maximal cliques of the complement"
    )
    p.add_argument("graph")
    p.add_argument("--split", help="split partition JSON (default: recognize)")
    p.set_defaults(func=_cmd_mc_complement)

    p = sub.add_parser("rank", parents=[common], help="ranks of a 0/1 matrix")
    p.add_argument("matrix")
    p.add_argument(
        "--all", action="store_true", help="include the exact binary-rank search"
    )
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("gen", parents=[common], help="generators and fixtures")
    gsub = p.add_subparsers(dest="kind", required=True)
    pu = gsub.add_parser("u", parents=[common], help="parity tournament U_m")
    pu.add_argument("--m", type=int, required=True)
    pa = gsub.add_parser("a", parents=[common], help="bordered tournament A_n")
    pa.add_argument("--n", type=int, required=True)
    pf = gsub.add_parser("family", parents=[common], help="2n-vertex family graph")
    pf.add_argument("--n", type=int, required=True)
    pf.add_argument("--split-out", help="also write the split partition JSON here")
    pr = gsub.add_parser("random", parents=[common], help="seeded random split graph")
    pr.add_argument("--k", type=int, required=True, help="clique side size")
    pr.add_argument("--s", type=int, required=True, help="independent side size")
    pr.add_argument("--p", type=float, default=0.5, help="cross-edge probability")
    pr.add_argument("--split-out", help="also write the split partition JSON here")
    px = gsub.add_parser("fixtures", parents=[common], help="write fixture files")
    px.add_argument("--dir", default="fixtures")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("address", parents=[common], help="squashed-cube addressing")
    asub = p.add_subparsers(dest="mode", required=True)
    pc = asub.add_parser("convert", parents=[common], help="partition to addresses")
    pc.add_argument("graph")
    pc.add_argument("partition")
    pc.add_argument("--split", help="split partition JSON (default: recognize)")
    pk = asub.add_parser("check", parents=[common], help="neighborliness and volume")
    pk.add_argument("addresses")
    pk.add_argument("--k", type=int, default=1)
    pp = asub.add_parser("report", parents=[common], help="balanced addressing lemmas")
    pp.add_argument("graph")
    pp.add_argument("partition")
    pp.add_argument("--split", help="split partition JSON (default: recognize)")
    p.set_defaults(func=_cmd_address)

    p = sub.add_parser(
        "verify-paper", parents=[common], help="run the full reproduction suite"
    )
    p.set_defaults(func=_cmd_verify_paper)

    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (BicliqError, ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    raise SystemExit(dispatch())
