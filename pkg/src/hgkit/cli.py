"""Batch command line interface.

Subcommands: stats, convert, communities, nmi, betweenness, forecast,
correlate, rerun.  Data goes to stdout or to --output; diagnostics go
to stderr.  Exit code 0 means success; malformed documents exit 3, bad
ids or mismatched domains exit 4, degenerate inputs exit 5, usage
errors exit 2.

Every command that writes an output file also writes a sibling
``<output>.manifest.json`` recording the arguments plus input and
output digests; ``hgkit rerun`` replays a manifest and verifies the
outputs come back byte-identical.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from collections import Counter
from pathlib import Path
from typing import Any

from . import __version__
from .analytics import (
    connected_components,
    graph_modularity,
    hypergraph_modularity,
)
from .centrality import pearson, s_betweenness
from .community import LpConfig, graph_label_propagation, hypergraph_label_propagation, nmi
from .errors import (
    DegenerateInputError,
    EmptyEvaluationSetError,
    FormatError,
    HgkitError,
)
from .forecast import average_error, evaluation_size, forecast_graph, forecast_hypergraph
from .hgio import (
    build_from_reviews,
    build_from_scenes,
    read_hgf,
    read_json,
    read_reviews_csv,
    read_scenes_json,
    write_hgf,
    write_json,
)
from .hypercore import Hypergraph
from .partition import Partition
from .views import BipartiteView, MaterializedGraph, TwoSectionView, materialize

INPUT_FORMATS = ("hgf", "json", "reviews-csv", "scenes-json")
OUTPUT_FORMATS = ("hgf", "json", "dot-bipartite", "dot-twosection")


def _fmt(x: float, full: bool) -> str:
    return repr(x) if full else f"{x:.6g}"


def _infer_format(path: str) -> str:
    suffix = Path(path).suffix.lower()
    return {".hgf": "hgf", ".json": "json", ".csv": "reviews-csv"}.get(suffix, "hgf")


def _load_hypergraph(path: str, fmt: str | None) -> Hypergraph:
    text = Path(path).read_text(encoding="utf-8")
    fmt = fmt or _infer_format(path)
    # An entirely empty file stands for the empty structure in any format.
    if not text.strip():
        return Hypergraph(0, 0)
    if fmt == "hgf":
        return read_hgf(text)
    if fmt == "json":
        return read_json(text)
    if fmt == "reviews-csv":
        h, _, _ = build_from_reviews(read_reviews_csv(text))
        return h
    if fmt == "scenes-json":
        h, _ = build_from_scenes(read_scenes_json(text))
        return h
    raise FormatError(f"unknown input format {fmt!r}")


def _load_partition(path: str) -> Partition:
    text = Path(path).read_text(encoding="utf-8")
    if Path(path).suffix.lower() == ".csv":
        return Partition.from_csv_text(text)
    return Partition.from_json_text(text)


def _sha256_file(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _write_manifest(args: argparse.Namespace, inputs: list[str], outputs: list[str]) -> None:
    primary = outputs[0]
    parameters = {
        key: value
        for key, value in vars(args).items()
        if key not in ("func", "argv_snapshot") and isinstance(value, (str, int, float, bool, list, type(None)))
    }
    doc = {
        "manifest_version": 1,
        "tool": "hgkit",
        "tool_version": __version__,
        "command": args.command,
        "argv": args.argv_snapshot,
        "parameters": parameters,
        "inputs": [{"path": p, "sha256": _sha256_file(p)} for p in inputs],
        "outputs": [{"path": p, "sha256": _sha256_file(p)} for p in outputs],
    }
    Path(primary + ".manifest.json").write_text(
        json.dumps(doc, indent=2) + "\n", encoding="utf-8"
    )


def _emit(args: argparse.Namespace, text: str, inputs: list[str]) -> None:
    """Send a document to --output (with manifest) or stdout."""
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        _write_manifest(args, inputs, [args.output])
    else:
        sys.stdout.write(text)


# --- stats ------------------------------------------------------------------


def _histogram_line(counts: Counter[int]) -> str:
    return " ".join(f"{key}:{counts[key]}" for key in sorted(counts))


def cmd_stats(args: argparse.Namespace) -> int:
    h = _load_hypergraph(args.input, args.format)
    components = connected_components(h)
    sizes = Counter(h.hyperedge_size(e) for e in h.hyperedges())
    degrees = Counter(h.degree(v) for v in h.vertices())
    lines = [
        f"vertices: {h.nhv}",
        f"hyperedges: {h.nhe}",
        f"incidences: {h.incidence_count}",
        f"components: {len(components)}",
        "component-sizes: "
        + " ".join(str(s) for s in sorted((len(c) for c in components), reverse=True)),
        "hyperedge-size-histogram: " + _histogram_line(sizes),
        "degree-histogram: " + _histogram_line(degrees),
    ]
    report = "\n".join(line.rstrip() for line in lines) + "\n"
    sys.stdout.write(report)
    if args.output:
        Path(args.output).write_text(report, encoding="utf-8")
        _write_manifest(args, [args.input], [args.output])
    return 0


# --- convert ----------------------------------------------------------------


def _dot_text(g: MaterializedGraph, name: str) -> str:
    def num(w: float) -> str:
        return str(int(w)) if float(w).is_integer() else repr(float(w))

    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(1, g.n_nodes + 1)]
    lines += [f"  {u} -- {v} [weight={num(w)}];" for u, v, w in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_convert(args: argparse.Namespace) -> int:
    h = _load_hypergraph(args.input, args.from_fmt)
    to = args.to_fmt
    if to == "hgf":
        text = write_hgf(h)
    elif to == "json":
        text = write_json(h)
    elif to == "dot-bipartite":
        text = _dot_text(materialize(BipartiteView(h)), "bipartite")
    elif to == "dot-twosection":
        text = _dot_text(materialize(TwoSectionView(h)), "twosection")
    else:
        raise FormatError(f"unknown output format {to!r}")
    _emit(args, text, [args.input])
    return 0


# --- communities ------------------------------------------------------------


def cmd_communities(args: argparse.Namespace) -> int:
    h = _load_hypergraph(args.input, args.format)
    cfg = LpConfig(max_iterations=args.max_iter, seed=args.seed)
    if args.algo == "hyper-lp":
        part, iterations = hypergraph_label_propagation(h, cfg)
        score = lambda: hypergraph_modularity(h, part)  # noqa: E731
    else:
        view = TwoSectionView(h)
        part, iterations = graph_label_propagation(view, cfg)
        score = lambda: graph_modularity(view, part)  # noqa: E731
    try:
        modularity = _fmt(score(), args.full_precision)
    except DegenerateInputError:
        modularity = "n/a"
    text = (
        part.to_csv_text()
        if args.output and args.output.lower().endswith(".csv")
        else part.to_json_text()
    )
    _emit(args, text, [args.input])
    print(f"algorithm: {args.algo}")
    print(f"communities: {part.community_count}")
    print(f"iterations: {iterations}")
    print(f"modularity: {modularity}")
    return 0


# --- nmi ----------------------------------------------------------------------


def cmd_nmi(args: argparse.Namespace) -> int:
    score = nmi(_load_partition(args.partition_a), _load_partition(args.partition_b))
    print(_fmt(score, args.full_precision))
    return 0


# --- betweenness ----------------------------------------------------------------


def _scores_csv(h: Hypergraph, ranked: list[tuple[int, float]], full: bool) -> str:
    lines = ["vertex,label,score"]
    for v, score in ranked:
        meta = h.get_vertex_meta(v)
        label = meta if isinstance(meta, str) else ""
        lines.append(f"{v},{label},{_fmt(score, full)}")
    return "\n".join(lines) + "\n"


def cmd_betweenness(args: argparse.Namespace) -> int:
    h = _load_hypergraph(args.input, args.format)
    vector = s_betweenness(h, args.s)
    ranked = vector.top(args.top_k) if args.top_k is not None else vector.ranked()
    _emit(args, _scores_csv(h, ranked, args.full_precision), [args.input])
    return 0


# --- forecast --------------------------------------------------------------------


def cmd_forecast(args: argparse.Namespace) -> int:
    records = read_reviews_csv(Path(args.input).read_text(encoding="utf-8"))
    h, item_labels, _ = build_from_reviews(records, star_filter=args.stars)
    # Ratings are in-sample item means over every record, unfiltered;
    # the star filter shapes only the hypergraph.
    totals: dict[str, int] = {}
    tallies: dict[str, int] = {}
    for record in records:
        totals[record.item_id] = totals.get(record.item_id, 0) + record.stars
        tallies[record.item_id] = tallies.get(record.item_id, 0) + 1
    ratings = {
        v: totals[label] / tallies[label]
        for v, label in enumerate(item_labels, start=1)
    }
    hyper = forecast_hypergraph(h, ratings)
    graph = forecast_graph(TwoSectionView(h), ratings)
    if evaluation_size(hyper) == 0 and evaluation_size(graph) == 0:
        raise EmptyEvaluationSetError("no vertex received a defined prediction")
    full = args.full_precision
    lines = ["vertex,label,stars,forecast_hyper,forecast_graph"]
    for v in h.vertices():
        cells = [
            str(v),
            item_labels[v - 1],
            _fmt(ratings[v], full),
            _fmt(hyper[v], full) if hyper[v] is not None else "",
            _fmt(graph[v], full) if graph[v] is not None else "",
        ]
        lines.append(",".join(cells))
    _emit(args, "\n".join(lines) + "\n", [args.input])
    print(
        f"err-hypergraph: {_fmt(average_error(hyper, ratings), full)}"
        f" (defined {evaluation_size(hyper)}/{h.nhv})"
    )
    print(
        f"err-graph: {_fmt(average_error(graph, ratings), full)}"
        f" (defined {evaluation_size(graph)}/{h.nhv})"
    )
    return 0


# --- correlate ---------------------------------------------------------------------


def _read_scores_csv(path: str) -> dict[int, float]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0].strip() != "vertex,label,score":
        raise FormatError(f"{path}: expected header vertex,label,score")
    scores: dict[int, float] = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        cells = line.split(",")
        if len(cells) != 3:
            raise FormatError(f"{path}: row {line!r} must have three fields")
        try:
            scores[int(cells[0])] = float(cells[2])
        except ValueError:
            raise FormatError(f"{path}: row {line!r} is not vertex,label,score") from None
    return scores


def cmd_correlate(args: argparse.Namespace) -> int:
    rho = pearson(_read_scores_csv(args.csv_a), _read_scores_csv(args.csv_b))
    print(_fmt(rho, args.full_precision))
    return 0


# --- rerun -----------------------------------------------------------------------


def cmd_rerun(args: argparse.Namespace) -> int:
    doc = json.loads(Path(args.manifest).read_text(encoding="utf-8"))
    rc = main(list(doc["argv"]))
    if rc != 0:
        return rc
    for record in doc["outputs"]:
        fresh = _sha256_file(record["path"])
        if fresh != record["sha256"]:
            print(
                f"error: {record['path']} digest changed "
                f"({record['sha256'][:12]} -> {fresh[:12]})",
                file=sys.stderr,
            )
            return 1
    return 0


# --- parser ----------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hgkit", description="Hypergraph analytics toolbox"
    )
    parser.add_argument("--version", action="version", version=f"hgkit {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--full-precision",
        action="store_true",
        help="print floats at full precision instead of 6 significant digits",
    )
    common.add_argument(
        "--deterministic",
        action="store_true",
        help="force a reproducible run (always on in this single-threaded build)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="structural summary of a hypergraph")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=INPUT_FORMATS)
    p.add_argument("--output")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("convert", parents=[common], help="rewrite a hypergraph in another format")
    p.add_argument("--input", required=True)
    p.add_argument("--from", dest="from_fmt", choices=INPUT_FORMATS)
    p.add_argument("--to", dest="to_fmt", required=True, choices=OUTPUT_FORMATS)
    p.add_argument("--output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("communities", parents=[common], help="label propagation communities")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=INPUT_FORMATS)
    p.add_argument("--algo", choices=("hyper-lp", "graph-lp"), default="hyper-lp")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--output")
    p.set_defaults(func=cmd_communities)

    p = sub.add_parser("nmi", parents=[common], help="compare two partition files")
    p.add_argument("partition_a")
    p.add_argument("partition_b")
    p.set_defaults(func=cmd_nmi)

    p = sub.add_parser("betweenness", parents=[common], help="s-betweenness ranking as CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=INPUT_FORMATS)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--top-k", type=int)
    p.add_argument("--output")
    p.set_defaults(func=cmd_betweenness)

    p = sub.add_parser("forecast", parents=[common], help="rating forecasts from a review CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--stars", type=int, nargs="+")
    p.add_argument("--output")
    p.set_defaults(func=cmd_forecast)

    p = sub.add_parser("correlate", parents=[common], help="Pearson correlation of two score CSVs")
    p.add_argument("csv_a")
    p.add_argument("csv_b")
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("rerun", parents=[common], help="replay a run manifest and verify digests")
    p.add_argument("manifest")
    p.set_defaults(func=cmd_rerun)

    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(argv)
    args.argv_snapshot = list(argv)
    try:
        return args.func(args)
    except HgkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
