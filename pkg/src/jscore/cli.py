"""Command-line interface: score label files, match similarity tables, run sweeps.

Commands
--------
score  <file> [--tsv] [--verbose] [--json]
    Score a two-column (or id-prefixed three-column) label file and print
    all measures; optionally the bidirectional matching tables or a
    machine-readable JSON report.
match  <file>
    Bidirectional best-match tables for an arbitrary similarity matrix
    given as a headed CSV.
sweep  inference|baseline --n INT --classes INT --k-min INT --k-max INT
       --reps INT --seed INT [--measures LIST] [--out PATH]
    Monte-Carlo sweep over cluster counts; emits plot-ready CSV rows
    ``measure,k,mean,sd,reps`` followed by ``# argmax`` summary lines.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import __version__
from .matching import BidirectionalMatching, match_sets
from .measures import ScoreReport, score_labelings
from .partition import Labeling, SimilarityMatrix, build_labeling
from .simulation import (
    DEFAULT_SWEEP_MEASURES,
    MEASURES,
    SweepConfig,
    run_baseline_sweep,
    run_inference_sweep,
)


class CliError(Exception):
    """User-facing input error; printed to stderr with nonzero exit."""


def _read_label_file(path: str, delimiter: str) -> tuple[Labeling, Labeling]:
    try:
        handle = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    truth_labels: list[str] = []
    cluster_labels: list[str] = []
    with handle:
        reader = csv.reader(handle, delimiter=delimiter)
        header = next(reader, None)
        if header is None:
            raise CliError(f"{path}: empty file (header required)")
        width = len(header)
        if width not in (2, 3):
            raise CliError(f"{path}: expected 2 or 3 columns, found {width} in header")
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != width:
                raise CliError(f"{path}: line {lineno}: expected {width} columns, found {len(row)}")
            true_label, cluster_label = row[-2], row[-1]
            if not true_label or not cluster_label:
                raise CliError(f"{path}: line {lineno}: empty label cell")
            truth_labels.append(true_label)
            cluster_labels.append(cluster_label)
    if not truth_labels:
        raise CliError(f"{path}: no data rows")
    return build_labeling(truth_labels), build_labeling(cluster_labels)


def _read_similarity_file(path: str) -> SimilarityMatrix:
    try:
        handle = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    with handle:
        numbered = [(lineno, row) for lineno, row in enumerate(csv.reader(handle), start=1) if row]
    if len(numbered) < 2:
        raise CliError(f"{path}: need a header row and at least one data row")
    col_names = tuple(name.strip() for name in numbered[0][1][1:])
    if not col_names:
        raise CliError(f"{path}: header row has no column names")
    row_names = []
    values = []
    for lineno, row in numbered[1:]:
        if len(row) != len(col_names) + 1:
            raise CliError(
                f"{path}: line {lineno}: expected {len(col_names) + 1} cells, found {len(row)}"
            )
        row_names.append(row[0].strip())
        parsed = []
        for j, cell in enumerate(row[1:]):
            try:
                parsed.append(float(cell))
            except ValueError:
                raise CliError(
                    f"{path}: line {lineno}, column {j + 2}: not a number: {cell!r}"
                ) from None
        values.append(parsed)
    return SimilarityMatrix(
        values=np.array(values, dtype=float),
        row_names=tuple(row_names),
        col_names=col_names,
    )


def _matching_lines(matching: BidirectionalMatching) -> list[str]:
    lines = ["class -> cluster:"]
    for m in matching.class_to_cluster:
        lines.append(f"  {m.reference_group} -> {m.matched_group}  ({m.similarity:.4f})")
    lines.append("cluster -> class:")
    for m in matching.cluster_to_class:
        lines.append(f"  {m.reference_group} -> {m.matched_group}  ({m.similarity:.4f})")
    return lines


def _report_document(report: ScoreReport, n: int, t: int, k: int) -> dict:
    return {
        "tool_version": __version__,
        "n_points": n,
        "n_classes": t,
        "n_clusters": k,
        "scores": {
            "j": report.j,
            "h": report.h_score,
            "f": report.f_score,
            "ri": report.ri,
            "ari": report.ari,
            "nmi": report.nmi,
            "v": report.v_measure,
            "vi": report.vi,
            "nvi": report.nvi,
            "recall_sum": report.recall_sum,
            "precision_sum": report.precision_sum,
        },
        "matching": {
            "class_to_cluster": [
                {"reference": m.reference_group, "matched": m.matched_group, "similarity": m.similarity}
                for m in report.matching.class_to_cluster
            ],
            "cluster_to_class": [
                {"reference": m.reference_group, "matched": m.matched_group, "similarity": m.similarity}
                for m in report.matching.cluster_to_class
            ],
        },
    }


def _cmd_score(args: argparse.Namespace) -> int:
    truth, hypo = _read_label_file(args.file, "\t" if args.tsv else ",")
    report = score_labelings(truth, hypo)
    if args.json:
        doc = _report_document(report, truth.n_points, truth.n_groups, hypo.n_groups)
        print(json.dumps(doc, indent=2))
        return 0
    print(f"points: {truth.n_points}  classes: {truth.n_groups}  clusters: {hypo.n_groups}")
    for name, value in [
        ("J-score", report.j),
        ("H-score", report.h_score),
        ("F-score", report.f_score),
        ("RI", report.ri),
        ("ARI", report.ari),
        ("NMI", report.nmi),
        ("V-measure", report.v_measure),
        ("VI", report.vi),
        ("NVI", report.nvi),
    ]:
        print(f"{name:10s} {value:.2f}")
    if args.verbose:
        print(f"{'R':10s} {report.recall_sum:.4f}")
        print(f"{'P':10s} {report.precision_sum:.4f}")
        for line in _matching_lines(report.matching):
            print(line)
    return 0


def _cmd_match(args: argparse.Namespace) -> int:
    sim = _read_similarity_file(args.file)
    try:
        matching = match_sets(sim)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    for line in _matching_lines(matching):
        print(line)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    measures = DEFAULT_SWEEP_MEASURES
    if args.measures:
        measures = tuple(m.strip() for m in args.measures.split(",") if m.strip())
        unknown = [m for m in measures if m not in MEASURES]
        if unknown:
            raise CliError(
                f"unknown measures: {', '.join(unknown)} (choose from {', '.join(MEASURES)})"
            )
    try:
        config = SweepConfig(
            n_points=args.n,
            n_true_classes=args.classes,
            k_range=(args.k_min, args.k_max),
            repetitions=args.reps,
            generator="split_merge" if args.kind == "inference" else "random",
            measures=measures,
            seed=args.seed,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if args.kind == "inference":
        result = run_inference_sweep(config)
    else:
        result = run_baseline_sweep(config)
    text = "\n".join(result.csv_lines()) + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(text)
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc.strerror}") from exc
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jscore",
        description="Clustering accuracy scoring via bidirectional set matching.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser("score", help="score a label file (true vs. cluster labels)")
    p_score.add_argument("file", help="CSV with header; columns [id,]true_label,cluster_label")
    p_score.add_argument("--tsv", action="store_true", help="tab-delimited input")
    p_score.add_argument("--verbose", action="store_true", help="include matching tables")
    p_score.add_argument("--json", action="store_true", help="full-precision JSON report")
    p_score.set_defaults(func=_cmd_score)

    p_match = sub.add_parser("match", help="bidirectional matching of a similarity table")
    p_match.add_argument("file", help="CSV matrix with row and column headers")
    p_match.set_defaults(func=_cmd_match)

    p_sweep = sub.add_parser("sweep", help="Monte-Carlo sweep over cluster counts")
    p_sweep.add_argument("kind", choices=("inference", "baseline"))
    p_sweep.add_argument("--n", type=int, required=True, help="number of data points")
    p_sweep.add_argument("--classes", type=int, default=1, help="true class count (inference)")
    p_sweep.add_argument("--k-min", type=int, required=True)
    p_sweep.add_argument("--k-max", type=int, required=True)
    p_sweep.add_argument("--reps", type=int, required=True, help="repetitions per k")
    p_sweep.add_argument("--seed", type=int, required=True)
    p_sweep.add_argument("--measures", help="comma-separated subset of measures")
    p_sweep.add_argument("--out", help="write CSV here instead of stdout")
    p_sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
