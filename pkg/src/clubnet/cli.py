"""Command-line driver: ingest, analyze, pivot, interlocks, export.

Exit codes: 0 success, 2 usage, 3 parse error, 4 enumeration budget
exceeded, 5 analytic failure under --strict.
"""

from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import borough as borough_mod
from . import clubs as clubs_mod
from . import exports, pivots, store
from .classify import classify
from .graph import IngestError, load_graph, read_edges_csv, read_nodes_csv

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4
EXIT_STRICT = 5


def _load(args) -> "Graph":
    edges = read_edges_csv(args.edges)
    nodes = read_nodes_csv(args.nodes) if args.nodes else None
    return load_graph(edges, nodes,
                      strict=getattr(args, "strict_nodes", False))


def cmd_ingest(args) -> int:
    g = _load(args)
    if g.edge_count() == 0:
        print("warning: no edges", file=sys.stderr)
    if g.self_loop_count:
        print(f"warning: dropped {g.self_loop_count} self-loop(s)",
              file=sys.stderr)
    comps = g.connected_components()
    print(f"nodes: {g.n}")
    print(f"edges: {g.edge_count()}")
    print(f"components: {len(comps)}")
    if comps:
        sizes = ",".join(str(len(c)) for c in comps[:10])
        more = "..." if len(comps) > 10 else ""
        print(f"component sizes: {sizes}{more}")
        dominant = g.induced(comps[0])
        print(f"dominant component: {len(comps[0])} nodes, "
              f"diameter {dominant.diameter()}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = _load(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    bs = borough_mod.boroughs(g)
    borough_mod.write_boroughs_csv(g, bs, out / "boroughs.csv")

    cfg = clubs_mod.EnumConfig(min_size=args.min_size,
                               maximality_universe=args.universe,
                               node_budget=args.node_budget)

    def run(b):
        return clubs_mod.enumerate_max_2clubs(g, b, cfg)

    budget_hit = None
    per_borough = []
    try:
        if args.threads > 1 and len(bs) > 1:
            with ThreadPoolExecutor(max_workers=args.threads) as pool:
                per_borough = list(pool.map(run, bs))
        else:
            per_borough = [run(b) for b in bs]
    except clubs_mod.BudgetExceeded as exc:
        budget_hit = exc
        per_borough.append(exc.partial)

    records = []
    for found in per_borough:
        for club in found:
            records.append(store.record_for(classify(g, club), g))
    store.persist(records, out / "clubs.jsonl")

    if bs and records:
        st = store.ClubStore(records, known_nodes=g.node_ids())
        summary = store.stats(st, bs[0])
        store.write_stats_csv(summary, out / "stats.csv")
        print(f"boroughs: {len(bs)} (dominant size {bs[0].size})")
        print("type,count,node_coverage_pct,median_size")
        for kind, row in summary.per_type.items():
            print(f"{kind},{row.count},{row.node_coverage_pct},"
                  f"{row.median_size if row.median_size is not None else ''}")
        print(f"total,{summary.total.count},{summary.total.node_coverage_pct},"
              f"{summary.total.median_size}")
    else:
        with open(out / "stats.csv", "w", newline="", encoding="utf-8") as fh:
            csv.writer(fh).writerow(
                ["type", "count", "node_coverage_pct", "median_size"])
        print(f"boroughs: {len(bs)}; clubs: 0")

    if budget_hit is not None:
        print(f"warning: {budget_hit}; artifacts are partial", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def cmd_pivot(args) -> int:
    g = _load(args)
    bs = borough_mod.boroughs(g)
    if not bs:
        print("error: graph has no boroughs", file=sys.stderr)
        return EXIT_STRICT if args.strict else EXIT_OK
    target = bs[args.borough]
    st = store.ClubStore.from_file(args.clubs, known_nodes=g.node_ids())
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    reports = []
    failures = []
    for region in args.regions.split(","):
        region = region.strip()
        try:
            ranking = pivots.coterie_ranking(st, g, region)
            reports.append(pivots.select_pivot(st, target, region, ranking,
                                               policy=args.pivot_policy))
        except ValueError as exc:
            failures.append((region, str(exc)))

    pivots.write_pivots_csv(reports, out / "pivots.csv")
    if failures:
        with open(out / "pivots.csv", "a", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            for region, msg in failures:
                w.writerow([region, "error", "", "", "", "", msg])
        for region, msg in failures:
            print(f"error: {region}: {msg}", file=sys.stderr)
        if args.strict:
            return EXIT_STRICT
    for r in reports:
        print(f"{r.region}: {r.pivot.type} size {r.pivot.size} "
              f"scope {r.scope.count}/{r.scope.total} ({r.scope.pct}%) "
              f"rule {r.rule}")
    return EXIT_OK


def _read_pivot_rows(path):
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        for rec in reader:
            if rec["pivot_type"] == "error":
                continue
            rows.append((rec["region"], rec["pivot_type"],
                         tuple(rec["node_ids"].split(";"))))
    return rows


def cmd_interlocks(args) -> int:
    rows = _read_pivot_rows(args.pivots)
    if len(rows) < 2:
        print("error: need at least two pivots", file=sys.stderr)
        return EXIT_STRICT if args.strict else EXIT_OK
    regions = tuple(r for r, _, _ in rows)
    sets = [set(nodes) for _, _, nodes in rows]
    entries = tuple(tuple(len(a & b) for b in sets) for a in sets)
    matrix = pivots.InterlockMatrix(regions=regions, entries=entries)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    pivots.write_interlocks_csv(matrix, out / "interlocks.csv")
    for region in regions:
        partners = ", ".join(f"{other} ({n})"
                             for other, n in matrix.partners(region))
        print(f"{region}: {partners if partners else '-'}")
    return EXIT_OK


def cmd_export(args) -> int:
    g = _load(args)
    st = store.ClubStore.from_file(args.clubs, known_nodes=g.node_ids())
    club_id = args.club_id
    if club_id is None:
        for region, _, nodes in _read_pivot_rows(args.pivots):
            if region == args.region:
                club_id = store.club_id_for(nodes)
                break
        if club_id is None:
            print(f"error: region {args.region!r} not in {args.pivots}",
                  file=sys.stderr)
            return EXIT_USAGE
    try:
        record = st.by_id(club_id)
    except KeyError:
        print(f"error: unknown club id {club_id!r}", file=sys.stderr)
        return EXIT_USAGE
    text = (exports.to_dot(g, record) if args.format == "dot"
            else exports.to_graphml(g, record))
    Path(args.out).write_text(text, encoding="utf-8")
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="clubnet",
        description="Borough decomposition and maximal 2-club mining")
    sub = p.add_subparsers(dest="command", required=True)

    def add_io(sp, nodes_required=False):
        sp.add_argument("--edges", required=True,
                        help="edges CSV (source,target[,weight])")
        sp.add_argument("--nodes", required=nodes_required,
                        help="nodes CSV (id,name,country,sector[,rank])")
        sp.add_argument("--strict", action="store_true",
                        help="nonzero exit on analytic failures")
        sp.add_argument("--strict-nodes", action="store_true",
                        dest="strict_nodes",
                        help="reject attribute rows for nodes absent from edges")

    sp = sub.add_parser("ingest", help="load a graph and print a summary")
    add_io(sp)
    sp.set_defaults(func=cmd_ingest)

    sp = sub.add_parser("analyze",
                        help="find boroughs, enumerate and classify clubs")
    add_io(sp)
    sp.add_argument("--out", required=True, help="output directory")
    sp.add_argument("--min-size", type=int, default=4, dest="min_size")
    sp.add_argument("--universe", choices=["borough", "global"],
                    default="borough")
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--node-budget", type=int, default=None,
                    dest="node_budget")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("pivot", help="select regional pivotal clubs")
    add_io(sp, nodes_required=True)
    sp.add_argument("--clubs", required=True, help="clubs.jsonl from analyze")
    sp.add_argument("--out", required=True)
    sp.add_argument("--regions", required=True,
                    help="comma-separated country codes")
    sp.add_argument("--pivot-policy", choices=["stop", "skip"],
                    default="stop", dest="pivot_policy")
    sp.add_argument("--borough", type=int, default=0,
                    help="borough index (0 = largest)")
    sp.set_defaults(func=cmd_pivot)

    sp = sub.add_parser("interlocks", help="pivot overlap matrix")
    sp.add_argument("--pivots", required=True, help="pivots.csv from pivot")
    sp.add_argument("--out", required=True)
    sp.add_argument("--strict", action="store_true")
    sp.set_defaults(func=cmd_interlocks)

    sp = sub.add_parser("export", help="export one club as DOT or GraphML")
    add_io(sp)
    sp.add_argument("--clubs", required=True)
    sp.add_argument("--club-id", dest="club_id")
    sp.add_argument("--region")
    sp.add_argument("--pivots", help="pivots.csv, needed with --region")
    sp.add_argument("--format", choices=["dot", "graphml"], default="dot")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "export" and not args.club_id and not (
            args.region and args.pivots):
        parser.error("export needs --club-id or --region with --pivots")
    try:
        return args.func(args)
    except (IngestError, store.StoreFormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except clubs_mod.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
