"""treereg command line: invariants, tables, verify, census, enumerate."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import census as census_mod
from .bounds import record_for_tree
from .homology import betti_table
from .graphs import (
    TreeWitness,
    WhiskerVector,
    from_edge_list,
    graph_from_edge_spec,
    multi_whisker,
    parse_edge_lines,
)
from .tables import build_table
from .trees import canonical_code, enumerate_trees


def _record_lines(label: str, record) -> list[str]:
    lines = [
        f"{label}: n={record.n} p={record.p} d={record.d} code='{record.tree_code}'",
        f"{label} invariants: im={record.im} alpha={record.alpha}"
        + (f" reg={record.reg}" if record.reg is not None else ""),
    ]
    b = record.bounds
    if b is not None:
        lines.append(
            f"{label} bounds: lb_tree={b.lb_tree} ub_tree={b.ub_tree} "
            f"[n-p={b.ub_tree_np}, floor((2n-p)/3)={b.ub_tree_23}] "
            f"wub={b.wub} [ceil((2n-d-1)/2)={b.wub_d}, floor((2n+p-2)/3)={b.wub_p}]"
        )
        lines.append(
            f"{label} tight: lb={str(record.lb_tight).lower()} "
            f"ub={str(record.ub_tight).lower()} wub={str(record.wub_tight).lower()}"
        )
    return lines


def _cmd_invariants(args: argparse.Namespace) -> int:
    if args.edges_file:
        edges = parse_edge_lines(Path(args.edges_file).read_text().splitlines())
        if not edges and args.order is None:
            raise ValueError("edge file is empty; give --order for an edgeless graph")
        order = args.order or 1 + max(max(u, v) for u, v in edges)
        graph = from_edge_list(edges, order)
    elif args.edges:
        graph = graph_from_edge_spec(args.edges, args.order)
    else:
        raise ValueError("one of --edges or --edges-file is required")
    witness = TreeWitness(graph)
    base = record_for_tree(witness, with_oracle=True)
    whiskered = None
    wgraph = None
    if args.vector:
        entries = tuple(int(tok) for tok in args.vector.split(","))
        wgraph = multi_whisker(graph, WhiskerVector(entries))
        whiskered = record_for_tree(TreeWitness(wgraph), with_oracle=True)
    if args.json:
        payload = {"base": base.to_json_dict()}
        if base.reg is not None:
            payload["base"]["betti"] = betti_table(graph).to_json_dict()
        if whiskered is not None:
            payload["whiskered"] = whiskered.to_json_dict()
            if whiskered.reg is not None:
                payload["whiskered"]["betti"] = betti_table(wgraph).to_json_dict()
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        for line in _record_lines("base", base):
            print(line)
        if whiskered is not None:
            for line in _record_lines("whiskered", whiskered):
                print(line)
    return 0


def _cmd_tables(args: argparse.Namespace) -> int:
    table = build_table(args.which)
    print(table.render_text())
    if args.out:
        Path(args.out).write_text(table.to_csv())
        print(f"wrote {args.out}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = census_mod.VerifyConfig(
        max_order=args.max_order,
        oracle_up_to=args.oracle_up_to,
        out_csv=Path(args.out),
        violations_out=Path(args.violations),
        checkpoint=Path(args.checkpoint) if args.checkpoint else None,
        jobs=args.jobs,
        checkpoint_every=args.checkpoint_every,
        crash_after=args.crash_after,
    )
    report = census_mod.run_verify(cfg)
    print(
        f"verified {report.records} trees up to order {args.max_order}: "
        f"{len(report.violations)} violations ({report.elapsed:.1f}s)"
    )
    print(f"records: {args.out}")
    print(f"violations: {args.violations}")
    return 0 if not report.violations else 1


def _cmd_census(args: argparse.Namespace) -> int:
    cfg = census_mod.CensusConfig(
        max_order=args.max_order, out_path=Path(args.out), fmt=args.format
    )
    summary = census_mod.run_census(cfg)
    for n_str, bucket in sorted(summary["orders"].items(), key=lambda kv: int(kv[0])):
        print(
            f"order {n_str}: {bucket['trees']} trees, "
            f"lb_tight={bucket['lb_tight']} ub_tight={bucket['ub_tight']} "
            f"wub_tight={bucket['wub_tight']}"
        )
    print(f"wrote {summary['total']} records to {args.out}")
    print(f"summary: {args.out}.summary.json")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    for witness in enumerate_trees(args.order):
        code = canonical_code(witness).to_text()
        if args.codes_only:
            print(code)
        else:
            spec = ",".join(f"{u}-{v}" for u, v in witness.graph.edges())
            print(f"{code}\t{spec}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treereg",
        description=(
            "Exact invariants, edge-ideal regularity, and bound verification "
            "for trees and multi-whiskered trees."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariants and bounds of one tree")
    p_inv.add_argument("--edges", help="comma-separated u-v tokens, e.g. 0-1,1-2")
    p_inv.add_argument("--edges-file", help="file with one 'u v' pair per line")
    p_inv.add_argument("--order", type=int, help="override 1 + max label")
    p_inv.add_argument("--vector", help="whisker counts a1,a2,... (one per vertex)")
    p_inv.add_argument("--json", action="store_true", help="machine-readable output")
    p_inv.set_defaults(func=_cmd_invariants)

    p_tab = sub.add_parser("tables", help="print a bundled reference table")
    p_tab.add_argument("--which", type=int, required=True, choices=(1, 2, 3, 4))
    p_tab.add_argument("--out", help="also write the table as CSV")
    p_tab.set_defaults(func=_cmd_tables)

    p_ver = sub.add_parser("verify", help="exhaustively check all bounds")
    p_ver.add_argument("--max-order", type=int, required=True)
    p_ver.add_argument("--oracle-up-to", type=int, default=0,
                       help="also run the homology oracle up to this order (max 10)")
    p_ver.add_argument("--checkpoint", help="JSON checkpoint file for resume")
    p_ver.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_ver.add_argument("--out", default="treereg_verify.csv",
                       help="records CSV (default: %(default)s)")
    p_ver.add_argument("--violations", default="treereg_violations.jsonl",
                       help="violations JSONL (default: %(default)s)")
    p_ver.add_argument("--checkpoint-every", type=int, default=1000,
                       help="trees per checkpoint (default: %(default)s)")
    p_ver.add_argument("--crash-after", type=int, default=None,
                       help="abort after N records (testing hook for resume)")
    p_ver.set_defaults(func=_cmd_verify)

    p_cen = sub.add_parser("census", help="records for every tree up to an order")
    p_cen.add_argument("--max-order", type=int, required=True)
    p_cen.add_argument("--out", required=True)
    p_cen.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p_cen.set_defaults(func=_cmd_census)

    p_enum = sub.add_parser("enumerate", help="all non-isomorphic trees of an order")
    p_enum.add_argument("--order", type=int, required=True)
    p_enum.add_argument("--codes-only", action="store_true")
    p_enum.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except census_mod.CrashRequested as exc:
        print(f"treereg: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"treereg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
