"""Command-line interface: ``msnet <command> FILE [options]``.

Exit status is 0 on success, 1 for usage and validation errors, 2 for I/O
and parse errors. Results go to stdout as an aligned table (default) or CSV
(``--format csv``); diagnostics go to stderr. ``MSN_COLOR=1`` emphasises
table headers.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from typing import List, Optional, Sequence, TextIO

from . import __version__
from .core import MSN, Direction
from .dimensions import (
    AggregationPolicy,
    SnapshotKey,
    aggregate_layers,
    compare_aggregations,
    snapshot,
    time_series,
)
from .errors import MSNError, ParseError
from .formats import (
    read_events,
    read_membership,
    read_network,
    read_node_mapping,
    write_edge_list,
    write_pillar,
)
from .measures import degree, density_report, neighbourhood_report
from .models import coarsen, to_pillar
from .representations import adjacency_matrix, to_multigraph, to_repeated_list

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _csv_list(value: str) -> List[str]:
    return [item for item in value.split(",") if item]


def _color_enabled() -> bool:
    return os.environ.get("MSN_COLOR", "0") == "1"


def render(header: Sequence[str], rows: Sequence[Sequence[object]], fmt: str) -> str:
    cells = [[str(c) for c in row] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return buf.getvalue()
    widths = [len(h) for h in header]
    for row in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]

    def line(items: Sequence[str]) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(items, widths)).rstrip()

    head = line(header)
    if _color_enabled():
        head = f"\x1b[1m{head}\x1b[0m"
    out = [head, line(["-" * w for w in widths])]
    out.extend(line(row) for row in cells)
    return "\n".join(out) + "\n"


def _load(args: argparse.Namespace) -> MSN:
    return read_network(args.file, args.layers)


def _selection(args: argparse.Namespace, g: MSN) -> List[str]:
    return args.select if args.select else list(g.layers)


def _fmt_ratio(value: float) -> str:
    return f"{value:.6f}"


def cmd_stats(args: argparse.Namespace, out: TextIO) -> None:
    g = _load(args)
    rows = [
        ("actors", g.number_of_actors()),
        ("layers", g.number_of_layers()),
        ("edges", g.number_of_edges()),
    ]
    rows.extend((f"edges[{layer}]", n) for layer, n in g.layer_sizes().items())
    out.write(render(("metric", "value"), rows, args.format))


def cmd_project(args: argparse.Namespace, out: TextIO) -> None:
    view = _load(args).layer_projection(args.layer)
    out.write(render(("source", "target"), view.sorted_edges(), args.format))


def cmd_aggregate(args: argparse.Namespace, out: TextIO) -> None:
    g = _load(args)
    view = aggregate_layers(g, _selection(args, g), args.policy)
    if view.counts is not None:
        rows = [(s, t, c) for (s, t), c in sorted(view.counts.items())]
        out.write(render(("source", "target", "count"), rows, args.format))
    else:
        out.write(render(("source", "target"), view.sorted_edges(), args.format))


def cmd_compare(args: argparse.Namespace, out: TextIO) -> None:
    g = _load(args)
    report = compare_aggregations(g, args.a, args.b)
    if args.pairs:
        rows = [("shared", s, t) for s, t in sorted(report.shared)]
        rows += [("a_only", s, t) for s, t in sorted(report.a_only)]
        rows += [("b_only", s, t) for s, t in sorted(report.b_only)]
        out.write(render(("set", "source", "target"), rows, args.format))
        return
    rows = [
        ("shared", len(report.shared)),
        ("a_only", len(report.a_only)),
        ("b_only", len(report.b_only)),
        ("jaccard", _fmt_ratio(report.jaccard)),
    ]
    out.write(render(("metric", "value"), rows, args.format))


def cmd_degree(args: argparse.Namespace, out: TextIO) -> None:
    g = _load(args)
    layers = _selection(args, g)
    actors = [args.actor] if args.actor else list(g.actors)
    rows = []
    for a in actors:
        per_layer = [g.layer_degree(a, args.direction, l) for l in layers]
        rows.append((a, *per_layer, degree(g, a, args.direction, layers, args.policy)))
    out.write(render(("actor", *layers, args.policy), rows, args.format))


def cmd_density(args: argparse.Namespace, out: TextIO) -> None:
    g = _load(args)
    n = g.number_of_actors()
    rows = [
        (r.layer, r.edges, f"{r.edges}/{n * (n - 1)}", _fmt_ratio(float(r.density)))
        for r in density_report(g)
    ]
    out.write(render(("layer", "edges", "ratio", "density"), rows, args.format))


def cmd_neighbourhood(args: argparse.Namespace, out: TextIO) -> None:
    g = _load(args)
    report = neighbourhood_report(g, args.actor)

    def joined(items) -> str:
        return " ".join(sorted(items))

    rows = [
        (layer, joined(report.out_neighbors[layer]), joined(report.in_neighbors[layer]))
        for layer in g.layers
    ]
    rows.append(("(union)", joined(report.union), ""))
    rows.append(("(intersection)", joined(report.intersection), ""))
    out.write(render(("layer", "out", "in"), rows, args.format))


def cmd_convert(args: argparse.Namespace, out: TextIO) -> None:
    g = _load(args)
    if args.to == "canonical":
        out.write(write_edge_list(g))
    elif args.to == "multigraph":
        out.write(render(("source", "target", "count"), to_multigraph(g).rows(), args.format))
    elif args.to == "adjlist":
        lists = to_repeated_list(to_multigraph(g))
        rows = [(a, " ".join(nbrs)) for a, nbrs in lists.items()]
        out.write(render(("actor", "neighbors"), rows, args.format))
    elif args.to == "matrix":
        mg = to_multigraph(g)
        mat = adjacency_matrix(mg)
        rows = [(a, *mat[i].tolist()) for i, a in enumerate(mg.actors)]
        out.write(render(("actor", *mg.actors), rows, args.format))
    elif args.to == "pillar":
        if not args.out:
            raise UsageError("convert --to pillar requires --out DIRECTORY")
        paths = write_pillar(to_pillar(g), args.out)
        out.write(render(("file",), [(str(p),) for p in paths], args.format))


def cmd_coarsen(args: argparse.Namespace, out: TextIO) -> None:
    g = _load(args)
    mapping = read_node_mapping(args.mapping)
    cg = coarsen(g.layer_projection(args.layer), mapping)
    out.write(render(("source", "target", "count"), cg.rows(), args.format))


def _membership(args: argparse.Namespace):
    if args.group and not args.membership:
        raise UsageError("--group requires --membership FILE")
    return read_membership(args.membership) if args.membership else None


def cmd_snapshot(args: argparse.Namespace, out: TextIO) -> None:
    log = read_events(args.file, args.layers)
    membership = _membership(args)
    key = SnapshotKey(tuple(args.select or log.layers), (args.start, args.end), args.group)
    g = snapshot(log.events, membership, key, layers=log.layers, actors=log.actors)
    if args.format == "csv":
        out.write(write_edge_list(g))
    else:
        out.write(render(("source", "target", "layer"), list(g.edges()), args.format))


def cmd_timeseries(args: argparse.Namespace, out: TextIO) -> None:
    log = read_events(args.file, args.layers)
    membership = _membership(args)
    series = time_series(
        log.events,
        membership,
        args.select or None,
        args.window,
        args.step,
        group=args.group,
        start=args.start,
        end=args.end,
        all_layers=log.layers,
        actors=log.actors,
    )
    layers = list(args.select or log.layers)
    rows = [
        (t0, t1, g.number_of_edges(), *(g.number_of_edges(l) for l in layers))
        for (t0, t1), g in series
    ]
    out.write(render(("start", "end", "edges", *layers), rows, args.format))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="msnet", description="Multi-layered social network toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, metavar="COMMAND")
    sub.required = True

    common = _Parser(add_help=False)
    common.add_argument("file", help="edge-list file")
    common.add_argument(
        "--layers",
        type=_csv_list,
        default=None,
        help="declare the full layer set (comma separated); other layers are rejected",
    )
    common.add_argument("--format", choices=("text", "csv"), default="text")

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    def add_select(p: argparse.ArgumentParser) -> None:
        p.add_argument("--select", type=_csv_list, default=None, help="layer subset (default: all)")

    policy = dict(choices=[p.value for p in AggregationPolicy], required=True)

    add("stats", cmd_stats, "actor, layer and edge counts")

    p = add("project", cmd_project, "edges of one layer")
    p.add_argument("--layer", required=True)

    p = add("aggregate", cmd_aggregate, "merge several layers into one view")
    add_select(p)
    p.add_argument("--policy", **policy)

    p = add("compare", cmd_compare, "overlap of two layer aggregations")
    p.add_argument("--a", type=_csv_list, required=True, help="first layer subset")
    p.add_argument("--b", type=_csv_list, required=True, help="second layer subset")
    p.add_argument("--pairs", action="store_true", help="list the pairs instead of counts")

    p = add("degree", cmd_degree, "per-layer and aggregated degrees")
    p.add_argument("--actor")
    p.add_argument("--direction", choices=[d.value for d in Direction], default="out")
    add_select(p)
    p.add_argument("--policy", **policy)

    add("density", cmd_density, "per-layer density, densest first")

    p = add("neighbourhood", cmd_neighbourhood, "per-layer neighbours of one actor")
    p.add_argument("--actor", required=True)

    p = add("convert", cmd_convert, "convert to another representation")
    p.add_argument(
        "--to", choices=("canonical", "multigraph", "adjlist", "matrix", "pillar"), required=True
    )
    p.add_argument("--out", help="output directory (pillar)")

    p = add("coarsen", cmd_coarsen, "collapse actors of one layer through a fine,coarse map")
    p.add_argument("--layer", required=True)
    p.add_argument("--mapping", required=True, help="fine,coarse mapping file")

    for name, func, help in (
        ("snapshot", cmd_snapshot, "sub-network for a layer/time/group selection"),
        ("timeseries", cmd_timeseries, "snapshots over sliding windows"),
    ):
        p = add(name, func, help)
        add_select(p)
        p.add_argument("--group")
        p.add_argument("--membership", help="actor,group file")
        if name == "snapshot":
            p.add_argument("--start", type=int, required=True)
            p.add_argument("--end", type=int, required=True, help="exclusive")
        else:
            p.add_argument("--window", type=int, required=True)
            p.add_argument("--step", type=int, required=True)
            p.add_argument("--start", type=int)
            p.add_argument("--end", type=int, help="last window start")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args, sys.stdout)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except MSNError as exc:
        if exc.line is not None:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
