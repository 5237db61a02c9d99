"""Command-line interface.

Exit codes: 0 success / bound holds, 1 bound violated, 2 input error,
3 numerical failure.
"""

import argparse
import logging
import os
import sys

import numpy as np

from . import report
from .errors import InputError, NumericalError
from .graphs import spectra_compare
from .io import format_matrix, read_edge_list, read_matrix, write_matrix
from .ritz import dilate_to_projector, embed_trial, ritz_perturbation_check, ritz_values
from .subspaces import principal_angles, projector_difference_singvals, subspace_from_columns
from .verify import DimConfig, check, parse_theorem_list

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3

STRUCTURE_TOL = 1e-8
DILATION_TOL = 1e-9


def _positive(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {text}")
    return value


def _emit(args, payload, lines):
    if args.json:
        print(report.dumps(payload))
    else:
        print("\n".join(lines))


def _subspace(path):
    return subspace_from_columns(read_matrix(path))


def cmd_angles(args):
    x, y = _subspace(args.x), _subspace(args.y)
    angles = principal_angles(x, y)
    pdiff = projector_difference_singvals(x, y)
    tol = args.tol or STRUCTURE_TOL
    agrees = pdiff.agrees(tol)
    lines = [
        f"angles:  {report.human_vec(angles.angles)}",
        f"cosines: {report.human_vec(angles.cosines)}",
        f"sines:   {report.human_vec(angles.sines)}",
        f"projector difference singular values: {report.human_vec(pdiff.values)}",
        f"cross-check against sines: {'ok' if agrees else 'MISMATCH'} "
        f"(max deviation {report.human(pdiff.max_deviation)})",
    ]
    _emit(args, report.angles_payload(angles, pdiff, agrees), lines)
    return EXIT_OK if agrees else EXIT_VIOLATED


def cmd_ritz(args):
    a = read_matrix(args.a)
    x, y = _subspace(args.x), _subspace(args.y)
    res = ritz_perturbation_check(a, x, y, use_local_spread=args.local_spread, tol=args.tol)
    kind = "local" if res.local else "global"
    lines = [
        f"ritz values on X: {report.human_vec(res.ritz_x)}",
        f"ritz values on Y: {report.human_vec(res.ritz_y)}",
        f"|difference| sorted: {report.human_vec(res.lhs)}",
        f"bound ({kind} spread {report.human(res.spread)} x sines): {report.human_vec(res.rhs)}",
        f"prefix margins: {report.human_vec(res.report.margins)}",
        f"full-sum consequence: {'holds' if res.full_sum_holds else 'violated'}",
        f"largest-change consequence: {'holds' if res.max_gap_holds else 'violated'}",
        f"verdict: {'holds' if res.holds else 'violated'}",
    ]
    _emit(args, report.ritz_payload(res), lines)
    return EXIT_OK if res.holds else EXIT_VIOLATED


def cmd_graph_compare(args):
    g1, g2 = read_edge_list(args.g1), read_edge_list(args.g2)
    rep = spectra_compare(g1, g2, tol=args.tol)
    lines = [
        f"spectrum 1: {report.human_vec(rep.spectrum1)}",
        f"spectrum 2: {report.human_vec(rep.spectrum2)}",
        f"union-graph bound: {report.human(rep.sharp_bound)} "
        f"(lambda_max {report.human(rep.union_lambda_max)}) {'holds' if rep.sharp_holds else 'violated'}",
        f"lhs={report.human(rep.lhs)} l={rep.differing_edges} bound={rep.bound} "
        f"{'holds' if rep.holds else 'violated'}",
    ]
    _emit(args, report.graph_payload(rep), lines)
    return EXIT_OK if rep.holds and rep.sharp_holds else EXIT_VIOLATED


def cmd_dilate(args):
    a = read_matrix(args.a)
    d = dilate_to_projector(a, normalize=args.normalize)
    residual = d.idempotency_residual()
    tol = args.tol or DILATION_TOL
    ok = residual <= tol
    ritz = None
    lines = [f"dilation of a {d.original_dim}x{d.original_dim} operator (shift {report.human(d.shift)}, scale {report.human(d.scale)})"]
    lines.append(f"idempotency residual: {report.human(residual)}")
    if args.trial:
        x = _subspace(args.trial)
        original = ritz_values(d.upper_left, x).values
        dilated = ritz_values(d.projector_matrix, embed_trial(x)).values
        deviation = float(np.max(np.abs(original - dilated)))
        ok = ok and deviation <= tol
        ritz = (original, dilated, deviation)
        lines.append(f"ritz values preserved: {'yes' if deviation <= tol else 'NO'} (max deviation {report.human(deviation)})")
    if args.out:
        write_matrix(args.out, d.projector_matrix)
        lines.append(f"projector written to {args.out}")
    else:
        lines.append(format_matrix(d.projector_matrix, digits=6).rstrip("\n"))
    _emit(args, report.dilation_payload(d, residual, args.out, ritz), lines)
    return EXIT_OK if ok else EXIT_VIOLATED


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("SUBMAJ_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise InputError(f"SUBMAJ_SEED must be an integer, got {env!r}") from None


def cmd_verify(args):
    theorems = parse_theorem_list(args.theorems)
    dims = DimConfig(args.n_min, args.n_max)
    seed = _seed(args)
    reports = [
        check(t, trials=args.trials, dims=dims, seed=seed, repro_dir=args.repro_dir, jobs=args.jobs)
        for t in theorems
    ]
    lines = [report.check_line(r, args.timing) for r in reports]
    failed = sum(r.failures > 0 for r in reports)
    lines.append(f"{len(reports)} theorems checked, {failed} with failures")
    _emit(args, report.suite_payload(reports, args.timing), lines)
    return EXIT_OK if failed == 0 else EXIT_VIOLATED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="submaj",
        description="Principal angles, Ritz values and Laplacian spectra with weak-majorization bound checks.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--tol", type=_positive, default=None, help="tolerance override")
        p.set_defaults(func=func)
        return p

    p = add("angles", cmd_angles, "principal angles between two column spans")
    p.add_argument("x", help="matrix file whose columns span X")
    p.add_argument("y", help="matrix file whose columns span Y")

    p = add("ritz", cmd_ritz, "Ritz-value perturbation bound for two trial subspaces")
    p.add_argument("a", help="symmetric matrix file")
    p.add_argument("x", help="matrix file spanning trial subspace X")
    p.add_argument("y", help="matrix file spanning trial subspace Y")
    p.add_argument("--local-spread", action="store_true", help="use the Rayleigh-quotient spread over X+Y")

    p = add("graph-compare", cmd_graph_compare, "compare Laplacian spectra of two graphs")
    p.add_argument("g1", help="edge-list file")
    p.add_argument("g2", help="edge-list file")

    p = add("dilate", cmd_dilate, "dilate a [0,1]-spectrum operator to an orthogonal projector")
    p.add_argument("a", help="symmetric matrix file")
    p.add_argument("--normalize", action="store_true", help="shift and scale the spectrum onto [0, 1] first")
    p.add_argument("--out", help="write the 2n x 2n projector to this file")
    p.add_argument("--trial", help="matrix file spanning a trial subspace for the Ritz-preservation check")

    p = add("verify", cmd_verify, "run the randomized theorem suite")
    p.add_argument("--theorems", default="all", help="'all' or comma-separated theorem ids")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None, help="master seed (falls back to $SUBMAJ_SEED, then 0)")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--repro-dir", help="directory for reproduction files of failing trials")
    p.add_argument("--timing", action="store_true", help="include elapsed times (output no longer byte-stable)")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
