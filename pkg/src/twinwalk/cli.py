"""Command-line interface.

Subcommands: twins, check, scan, family, verify-identities. Every command
reads a JSON input file and writes one JSON document to stdout (or --out).
Times are printed with 15 significant digits and fidelities with 12 so runs
can be frozen as regression fixtures. Exit codes: 0 success / witness found,
1 witness not found, 2 input error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .errors import ConvergenceFailureError, ParseError, TwinWalkError
from .families import verify_family
from .graphs import list_twin_pairs
from .identities import run_identity_checks
from .jsonio import load_family, load_graph
from .walk import (
    DEFAULT_EPSILONS,
    DEFAULT_LPST_TOL,
    DEFAULT_QMAX,
    DEFAULT_SCAN_GRID,
    TransferKind,
    TransferReport,
    check_lpst,
    check_periodic,
    pgst_scan,
    pst_time_scan,
)

EXIT_OK = 0
EXIT_NO_WITNESS = 1
EXIT_INPUT = 2
EXIT_NUMERIC = 3


def _sig(x: float, digits: int) -> float:
    return float(f"{x:.{digits}g}")


def _report_obj(r: TransferReport) -> dict:
    return {
        "kind": r.kind.value,
        "from": r.source,
        "to": r.target,
        "time": _sig(r.time, 15),
        "fidelity": _sig(r.fidelity, 12),
        "phase_re": _sig(r.phase.real, 15),
        "phase_im": _sig(r.phase.imag, 15),
        "tolerance": r.tolerance,
    }


def _emit(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _resolve_time(args: argparse.Namespace) -> float:
    if args.pi_multiple is not None:
        return args.pi_multiple * math.pi
    if args.time is not None:
        return args.time
    raise ParseError("provide --time or --pi-multiple")


def _cmd_twins(args: argparse.Namespace) -> int:
    G = load_graph(args.input)
    pairs = [[tw.a, tw.b] for tw in list_twin_pairs(G)]
    _emit({"twin_pairs": pairs}, args.out)
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    G = load_graph(args.input)
    t = _resolve_time(args)
    if args.from_vertex == args.to_vertex:
        report = check_periodic(G, args.from_vertex, t, args.tol)
    else:
        report = check_lpst(G, args.from_vertex, args.to_vertex, t, args.tol)
    _emit(_report_obj(report), args.out)
    return EXIT_OK if report.kind is not TransferKind.NONE else EXIT_NO_WITNESS


def _cmd_scan(args: argparse.Namespace) -> int:
    G = load_graph(args.input)
    a, b = args.from_vertex, args.to_vertex
    if args.mode == "pst":
        t_max = args.t_max if args.t_max is not None else args.t_max_pi * math.pi
        report = pst_time_scan(G, a, b, t_max, args.grid, args.tol)
        obj = _report_obj(report)
        obj["mode"] = "pst"
        _emit(obj, args.out)
        return EXIT_OK if report.kind is not TransferKind.NONE else EXIT_NO_WITNESS
    epsilons = tuple(float(e) for e in args.epsilons.split(","))
    witness = pgst_scan(G, a, b, args.q_max, epsilons)
    found = witness.achieved(epsilons[-1]) is not None
    obj = {
        "mode": "pgst",
        "kind": "PGST" if found else "NONE",
        "from": a,
        "to": b,
        "best_times": [_sig(t, 15) for t in witness.times],
        "best_fidelities": [_sig(f, 12) for f in witness.fidelities],
        "ladder": [
            {
                "epsilon": hit.epsilon,
                "q": hit.q,
                "time": _sig(hit.time, 15),
                "fidelity": _sig(hit.fidelity, 12),
            }
            for hit in witness.epsilon_ladder
        ],
    }
    _emit(obj, args.out)
    return EXIT_OK if found else EXIT_NO_WITNESS


def _cmd_family(args: argparse.Namespace) -> int:
    fi = load_family(args.input)
    try:
        reports = verify_family(fi, args.tol, args.q_max)
    except TwinWalkError as exc:
        _emit(
            {"provenance": fi.provenance, "all_passed": False, "error": str(exc)},
            args.out,
        )
        return EXIT_NO_WITNESS
    _emit(
        {
            "provenance": fi.provenance,
            "all_passed": True,
            "reports": [_report_obj(r) for r in reports],
        },
        args.out,
    )
    return EXIT_OK


def _cmd_verify_identities(args: argparse.Namespace) -> int:
    G = load_graph(args.input) if args.input else None
    devs = run_identity_checks(G, args.seed, args.trials)
    _emit(
        {
            "seed": args.seed,
            "trials": args.trials,
            "identities": {k: _sig(v, 6) for k, v in devs.items()},
        },
        args.out,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twinwalk",
        description="Quantum-walk state transfer checks on graph Laplacians",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="graph or family JSON file")
        p.add_argument("--out", default=None, help="write JSON here instead of stdout")

    p = sub.add_parser("twins", help="list all twin pairs")
    add_common(p)
    p.set_defaults(func=_cmd_twins)

    p = sub.add_parser("check", help="transfer/periodicity check at one time")
    add_common(p)
    p.add_argument("--from", dest="from_vertex", type=int, required=True)
    p.add_argument("--to", dest="to_vertex", type=int, required=True)
    p.add_argument("--time", type=float, default=None)
    p.add_argument("--pi-multiple", type=float, default=None,
                   help="time as a multiple of pi")
    p.add_argument("--tol", type=float, default=DEFAULT_LPST_TOL)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("scan", help="search transfer times")
    add_common(p)
    p.add_argument("--from", dest="from_vertex", type=int, required=True)
    p.add_argument("--to", dest="to_vertex", type=int, required=True)
    p.add_argument("--mode", choices=("pst", "pgst"), default="pst")
    p.add_argument("--t-max", type=float, default=None)
    p.add_argument("--t-max-pi", type=float, default=4.0,
                   help="scan horizon as a multiple of pi (pst mode)")
    p.add_argument("--grid", type=int, default=DEFAULT_SCAN_GRID)
    p.add_argument("--q-max", type=int, default=DEFAULT_QMAX)
    p.add_argument("--epsilons", default=",".join(str(e) for e in DEFAULT_EPSILONS),
                   help="comma-separated decreasing thresholds (pgst mode)")
    p.add_argument("--tol", type=float, default=DEFAULT_LPST_TOL)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("family", help="verify a family's expected witnesses")
    add_common(p)
    p.add_argument("--tol", type=float, default=DEFAULT_LPST_TOL)
    p.add_argument("--q-max", type=int, default=DEFAULT_QMAX)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("verify-identities", help="run the identity battery")
    p.add_argument("--input", default=None, help="optional graph JSON file")
    p.add_argument("--out", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10)
    p.set_defaults(func=_cmd_verify_identities)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConvergenceFailureError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_NUMERIC
    except (TwinWalkError, ValueError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
