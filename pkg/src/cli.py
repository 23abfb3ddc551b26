#!/usr/bin/env python3
"""
Command-line entry point: analyze, compare, snf, census and find-mates.

Exit codes: 0 success, 1 a checked identity or theorem failed, 2 usage or input error.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from src.algebra.gaussint import format_gauss, format_rat
from src.algebra.matrix import parse_matrix
from src.algebra.smith import snf
from src.census.census import Census
from src.errors import InvariantViolation
from src.graphs.graph_io import read_graph
from src.graphs.isomorphism import SearchBoundError, is_self_converse, isomorphic
from src.spectra.unitary import SingularWalkMatrixError, transfer_unitary
from src.spectra.walk import generalized_spectrum, walk_report

JOBS_ENV = "MIXED_DGS_JOBS"
SUBCOMMANDS = ("analyze", "compare", "snf", "census", "find-mates")


@dataclass
class CliConfig:
    subcommand: str
    paths: list = field(default_factory=list)
    n: int = None
    jobs: int = 1
    allow_long: bool = False
    out: str = None
    format: str = "csv"
    progress: bool = False

    def validate(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {self.subcommand!r}")
        if self.jobs < 1:
            raise ValueError(f"--jobs must be at least 1, got {self.jobs}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"--format must be csv or json, got {self.format!r}")
        if self.subcommand in ("census", "find-mates") and self.n == 6 and not self.allow_long:
            raise ValueError("n=6 scans about 10^9 codes; pass --allow-long to run it")
        return self


def default_jobs():
    value = os.environ.get(JOBS_ENV, "1")
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{JOBS_ENV} must be an integer, got {value!r}")


def build_parser():
    parser = argparse.ArgumentParser(prog="mixed-dgs",
                                     description="Exact generalized-spectrum tools for mixed graphs")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("analyze", help="Walk-matrix report of one graph file")
    p.add_argument("path", help="Graph file")

    p = sub.add_parser("compare", help="R-cospectrality, isomorphism and transfer unitary of two graphs")
    p.add_argument("path_g", help="Graph file for G")
    p.add_argument("path_h", help="Graph file for H")

    p = sub.add_parser("snf", help="Smith Normal Form of a Gaussian-integer matrix file")
    p.add_argument("path", help="Matrix file")

    for name, text in (("census", "Self-converse census row for n vertices"),
                       ("find-mates", "Non-singleton generalized-spectrum buckets for n vertices")):
        p = sub.add_parser(name, help=text)
        p.add_argument("n", type=int, help="Number of vertices (2..6)")
        p.add_argument("--jobs", type=int, default=None, help=f"Parallel workers (default ${JOBS_ENV} or 1)")
        p.add_argument("--allow-long", action="store_true", help="Permit the n=6 scan")
        p.add_argument("--progress", action="store_true", help="Show progress on stderr")
        if name == "census":
            p.add_argument("--out", type=str, default=None, help="Directory for CSV/JSON results")
            p.add_argument("--format", type=str, default="csv", help="Row format: csv or json")
    return parser


def parse_config(argv=None):
    args = build_parser().parse_args(argv)
    config = CliConfig(subcommand=args.subcommand)
    if args.subcommand in ("analyze", "snf"):
        config.paths = [args.path]
    elif args.subcommand == "compare":
        config.paths = [args.path_g, args.path_h]
    else:
        config.n = args.n
        config.jobs = args.jobs if args.jobs is not None else default_jobs()
        config.allow_long = args.allow_long
        config.progress = args.progress
        config.out = getattr(args, "out", None)
        config.format = getattr(args, "format", "csv")
    return config.validate()


def bounded_search(search, *graphs):
    """Whether an isomorphism search succeeds; None when the order is past its bound."""
    try:
        return search(*graphs) is not None
    except SearchBoundError as exc:
        print(f"⚠️ {exc}; reporting null", file=sys.stderr)
        return None


def analyze(path):
    graph = read_graph(path)
    report = walk_report(graph)
    return {
        **report.to_dict(),
        **generalized_spectrum(graph).to_dict(),
        "self_converse": bounded_search(is_self_converse, graph),
    }


def compare(path_g, path_h):
    g, h = read_graph(path_g), read_graph(path_h)
    if g.n != h.n:
        raise ValueError(f"graphs have different orders: {g.n} and {h.n}")
    cospectral = generalized_spectrum(g) == generalized_spectrum(h)
    verdict = {"r_cospectral": cospectral, "isomorphic": bounded_search(isomorphic, g, h)}
    if not cospectral:
        return verdict
    try:
        tu = transfer_unitary(g, h)
    except SingularWalkMatrixError:
        verdict["unitary"] = "undetermined"
        return verdict
    verdict["unitary"] = [[format_rat(x) for x in tu.u.row(i)] for i in range(tu.u.rows)]
    verdict["level"] = format_gauss(tu.level)
    verdict["level_in_{1,1+i}"] = tu.level_in_one_or_one_plus_i()
    return verdict


def smith(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise OSError(f"cannot read matrix file {path}: {exc.strerror}") from exc
    result = snf(parse_matrix(text))
    if result.reconstruct() != parse_matrix(text):
        raise InvariantViolation("v1 * diag(d) * v2 does not reproduce the input")
    return result


def run_census(config):
    census = Census(config.n, jobs=config.jobs, allow_long=config.allow_long,
                    progress=config.progress, results_dir=config.out or "./results/census")
    row = census.table_row()
    census.verify_conjecture()
    census.verify_main_theorem()
    if config.out:
        row_file, bucket_file = census.save_results()
        print(f"✅ Results saved to {row_file} and {bucket_file}", file=sys.stderr)
    return row


def main(argv=None):
    try:
        config = parse_config(argv)
        if config.subcommand == "analyze":
            print(json.dumps(analyze(config.paths[0]), indent=2))
        elif config.subcommand == "compare":
            print(json.dumps(compare(*config.paths), indent=2))
        elif config.subcommand == "snf":
            result = smith(config.paths[0])
            print(",".join(format_gauss(d) for d in result.d))
            print(f"unimodular: {'true' if result.is_unimodular() else 'false'}")
        elif config.subcommand == "census":
            row = run_census(config)
            print(row.csv_line() if config.format == "csv" else json.dumps(row.to_dict()))
        else:
            census = Census(config.n, jobs=config.jobs, allow_long=config.allow_long,
                            progress=config.progress)
            print(json.dumps([b.to_dict() for b in census.find_cospectral_mates()], indent=2))
    except InvariantViolation as exc:
        print(f"❌ Invariant violated: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
