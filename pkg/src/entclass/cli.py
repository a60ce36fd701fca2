"""Command-line front end.

    entclass classify --input state.json [--optimize] [--tolerance T] [--seed S]
    entclass scan --step 0.01 --output scan.csv [--optimize] [--threads K] [--seed S]
    entclass pauli {In,I2,InMinus1,tuple3} N [--mode verbatim|coarse]
    entclass proptest --n 3 4 --samples 200 [--seed S] [--output DIR]

Exit codes: 0 success, 1 proptest found counterexamples, 2 bad usage or
malformed input, 3 physically invalid state data.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import criteria, optimizer, pauli, proptest, scan, statefile
from .qstate import InvariantViolation


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entclass",
        description="Classify multiqubit entanglement families and scan noise planes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="evaluate all four witnesses on a state file")
    p_classify.add_argument("--input", required=True, help="JSON state file")
    p_classify.add_argument("--optimize", action="store_true", help="search local unitaries first")
    p_classify.add_argument("--tolerance", type=float, default=1e-9)
    p_classify.add_argument("--seed", type=int, default=0)
    p_classify.add_argument("--restarts", type=int, default=20, help="optimizer starting points")
    p_classify.add_argument("--max-evals", type=int, default=2000, help="optimizer evaluations per start")

    p_scan = sub.add_parser("scan", help="scan the four-qubit GHZ/W/noise plane to CSV")
    p_scan.add_argument("--step", type=float, default=0.01)
    p_scan.add_argument("--output", default="scan.csv")
    p_scan.add_argument("--optimize", action="store_true")
    p_scan.add_argument("--tolerance", type=float, default=1e-9)
    p_scan.add_argument("--seed", type=int, default=0)
    p_scan.add_argument("--threads", type=int, default=1)

    p_pauli = sub.add_parser("pauli", help="print a witness as Pauli terms plus setting counts")
    p_pauli.add_argument("id", choices=["In", "I2", "InMinus1", "GME", "tuple3"])
    p_pauli.add_argument("n", type=int)
    p_pauli.add_argument("--mode", choices=["verbatim", "coarse"], default="verbatim")

    p_prop = sub.add_parser("proptest", help="run the randomized closure suites")
    p_prop.add_argument("--n", type=int, nargs="+", default=[3, 4, 5, 6])
    p_prop.add_argument("--samples", type=int, default=1000)
    p_prop.add_argument("--seed", type=int, default=42)
    p_prop.add_argument("--tolerance", type=float, default=1e-9)
    p_prop.add_argument("--output", default="counterexamples")
    return parser


def cmd_classify(args) -> int:
    rho = statefile.load_state(args.input)
    reports = []
    for which in criteria.INEQUALITY_IDS:
        if args.optimize:
            res = optimizer.maximize_violation(
                rho,
                which,
                restarts=args.restarts,
                max_evals=args.max_evals,
                seed=args.seed,
            )
            lhs = res.best_lhs
            report = criteria.InequalityReport(
                inequality=which,
                n=rho.n,
                lhs=lhs,
                tolerance=args.tolerance,
                violated=bool(lhs > args.tolerance),
                conclusion=criteria._CONCLUSIONS[which],
            )
        else:
            report = criteria.evaluate(rho, which, args.tolerance)
        reports.append(report.to_dict())
    doc = {
        "n": rho.n,
        "optimized": bool(args.optimize),
        "tolerance": args.tolerance,
        "reports": reports,
    }
    print(json.dumps(doc, indent=2))
    return 0


def cmd_scan(args) -> int:
    rows = scan.scan_grid(
        args.step,
        tolerance=args.tolerance,
        optimize=args.optimize,
        seed=args.seed,
        threads=args.threads,
    )
    try:
        scan.write_csv(rows, args.output)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {len(rows)} grid points to {args.output}")
    return 0


def cmd_pauli(args) -> int:
    if args.id == "GME":
        print("error: the GME witness is nonlinear and has no Pauli expansion", file=sys.stderr)
        return 2
    if args.id == "tuple3":
        if args.n != 3:
            print("error: tuple3 is a fixed three-qubit schedule", file=sys.stderr)
            return 2
        expansion = pauli.three_qubit_tuple_witness()
    else:
        expansion = pauli.expand_inequality(args.id, args.n)
    schedule = pauli.count_settings(expansion, args.mode)
    print(pauli.format_expansion(expansion))
    print(f"settings {args.mode} {len(schedule)}")
    print(f"tomography {pauli.tomography_setting_count(args.n)}")
    return 0


def cmd_proptest(args) -> int:
    results = proptest.run_suites(
        args.n,
        args.samples,
        seed=args.seed,
        tolerance=args.tolerance,
    )
    print(proptest.format_table(results))
    if all(res.ok for res in results):
        return 0
    paths = proptest.dump_counterexamples(results, args.output)
    print(f"counterexamples dumped to: {', '.join(paths)}", file=sys.stderr)
    return 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handlers = {
        "classify": cmd_classify,
        "scan": cmd_scan,
        "pauli": cmd_pauli,
        "proptest": cmd_proptest,
    }
    try:
        return handlers[args.command](args)
    except InvariantViolation as exc:
        print(f"error: invalid state: {exc}", file=sys.stderr)
        return 3
    except (statefile.StateFileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
