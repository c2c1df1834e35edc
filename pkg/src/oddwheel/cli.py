"""Command-line front end.

Every subcommand prints one JSON report on standard output.  Exit codes:

* 0  affirmative: arrows, avoidance ok, verified partition, audit passed
* 1  negative with a witness: counterexample, monochromatic subgraph, violation
* 2  undecided: a search budget ran out
* 64 usage error (bad flags, bad target syntax, bad parameters)
* 65 input data error (unreadable or malformed coloring document)
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import constructions, ramsey
from .decompose import StabilityInput, lemma_audit, stability_partition, verify_stability_partition
from .detect import Budget, Outcome, circumference, cycle_spectrum, girth, is_two_connected
from .errors import (
    BadLength,
    BadParams,
    BadSize,
    BudgetExceeded,
    InputError,
    InternalContradiction,
    NotCovered,
    OddwheelError,
    PreconditionViolated,
)
from .graph import Color, CompleteColoring, Monochromatic
from .serialize import coloring_to_doc, dump_coloring, parse_coloring

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _target(text: str) -> ramsey.Target:
    try:
        return ramsey.Target.parse(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _budget(args) -> Budget:
    return Budget(max_nodes=args.max_nodes, wall_millis=args.wall_ms)


def _load(path: str) -> CompleteColoring:
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise _DataError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_coloring(data)


class _DataError(Exception):
    pass


def _witness_json(w) -> dict | None:
    return None if w is None else w.to_json()


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, report dict)


def cmd_construct(args):
    family = args.family
    params = args.params
    want = {"two-clique": 1, "three-clique": 3, "ns-two-clique": 1, "brandt-gadget": 1, "mutate": 0}[family]
    if len(params) != want:
        raise UsageError(f"construct {family} takes {want} integer parameter(s)")
    report = {"family": family, "parameters": params}
    if family == "two-clique":
        c = constructions.two_clique_coloring(*params)
    elif family == "three-clique":
        c = constructions.three_clique_coloring(*params)
    elif family == "ns-two-clique":
        c = constructions.nikiforov_two_clique(*params)
    elif family == "brandt-gadget":
        # a plain graph, written as the red class of a coloring of K_n
        g = constructions.brandt_gadget(*params)
        c = CompleteColoring(g.n, g.rows)
    else:
        if args.input is None or args.k is None:
            raise UsageError("construct mutate needs --from FILE and --k")
        start = _load(args.input)
        c = constructions.mutate_preserving_avoidance(start, args.k, args.flips, args.seed, _budget(args))
        report.update(k=args.k, flips=args.flips, seed=args.seed, generator=constructions.GENERATOR)
    report["n"] = c.n
    if args.output:
        Path(args.output).write_text(dump_coloring(c), encoding="utf-8")
        report["output"] = args.output
    else:
        report["coloring"] = coloring_to_doc(c)
    return EXIT_OK, report


def cmd_check(args):
    red = args.red or (ramsey.cycle(args.red_cycle) if args.red_cycle else None)
    blue = args.blue or (ramsey.wheel(args.blue_wheel) if args.blue_wheel else None)
    if red is None or blue is None:
        raise UsageError("check needs a red target (--red or --red-cycle) and a blue one (--blue or --blue-wheel)")
    c = _load(args.file)
    found = ramsey.target_check(c, red, blue, _budget(args))
    report = {"n": c.n, "red": str(red), "blue": str(blue)}
    if found is Outcome.OK:
        return EXIT_OK, {**report, "outcome": "ok", "witness": None}
    if found is Outcome.UNKNOWN:
        return EXIT_UNKNOWN, {**report, "outcome": "unknown", "witness": None}
    return EXIT_NEGATIVE, {**report, "outcome": "found", "witness": found.to_json()}


def cmd_spectrum(args):
    c = _load(args.file)
    color = Color(args.color)
    g = c.graph(color)
    lengths = cycle_spectrum(g, _budget(args))
    report = {"n": g.n, "color": color.value, "edges": g.edge_count, **lengths.to_json()}
    shortest = girth(g)
    report["girth"] = None if shortest == float("inf") else int(shortest)
    try:
        report["circumference"] = circumference(g, _budget(args))
    except BudgetExceeded as exc:
        report["circumference"] = None
        report["circumference_lower_bound"] = getattr(exc, "lower_bound", None)
    report["two_connected"] = bool(is_two_connected(g)) if g.n >= 3 else False
    if lengths.exhaustive and report["circumference"] is not None and lengths.present:
        lo, hi = report["girth"], report["circumference"]
        report["weakly_pancyclic"] = all(t in lengths.present for t in range(lo, hi + 1))
        report["pancyclic"] = g.n >= 3 and all(t in lengths.present for t in range(3, g.n + 1))
    code = EXIT_OK if lengths.exhaustive and report["circumference"] is not None else EXIT_UNKNOWN
    return code, report


def _witness_failure(exc, c):
    """Turn a witness-carrying error into an exit-1 report."""
    w = exc.witness
    report = {"outcome": type(exc).__name__, "message": str(exc)}
    if isinstance(w, Monochromatic):
        report["witness"] = w.to_json()
        report["witness_valid"] = w.validate(c)
    else:
        report["witness"] = None
    if isinstance(exc, InternalContradiction):
        report["branch"] = exc.branch
    return EXIT_NEGATIVE, report


def cmd_decompose(args):
    c = _load(args.file)
    inp = StabilityInput(c, args.k)
    try:
        partition, trace = stability_partition(inp, _budget(args))
    except (PreconditionViolated, InternalContradiction) as exc:
        code, report = _witness_failure(exc, c)
        return code, {"n": c.n, "k": args.k, **report}
    verdict = verify_stability_partition(c, partition, args.k)
    if args.trace:
        Path(args.trace).write_text(json.dumps(trace.to_json(), indent=1) + "\n", encoding="utf-8")
    report = {
        "n": c.n,
        "k": args.k,
        "outcome": "verified" if verdict.passed else "violation",
        "branch": trace.branch.value,
        "partition": partition.to_json(),
        "verification": verdict.to_json(),
    }
    if args.trace:
        report["trace_file"] = args.trace
    else:
        report["trace"] = trace.to_json()
    return (EXIT_OK if verdict.passed else EXIT_NEGATIVE), report


def cmd_audit(args):
    c = _load(args.file)
    inp = StabilityInput(c, args.k)
    try:
        partition, trace = stability_partition(inp, _budget(args))
    except (PreconditionViolated, InternalContradiction) as exc:
        code, report = _witness_failure(exc, c)
        return code, {"n": c.n, "k": args.k, **report}
    audit = lemma_audit(inp, trace)
    report = {
        "n": c.n,
        "k": args.k,
        "outcome": "passed" if audit.passed else "failed",
        "branch": trace.branch.value,
        "entries": audit.to_json(),
    }
    return (EXIT_OK if audit.passed else EXIT_NEGATIVE), report


def cmd_arrows(args):
    verdict = ramsey.arrows(
        args.n, args.red, args.blue, _budget(args), symmetry=not args.no_symmetry, threads=args.threads
    )
    report = {"n": args.n, "red": str(args.red), "blue": str(args.blue), "threads": args.threads}
    report.update(verdict.to_json())
    code = {
        ramsey.VerdictKind.ARROWS: EXIT_OK,
        ramsey.VerdictKind.COUNTEREXAMPLE: EXIT_NEGATIVE,
        ramsey.VerdictKind.UNKNOWN: EXIT_UNKNOWN,
    }[verdict.kind]
    return code, report


def cmd_bound(args):
    pair = ramsey.AdmissiblePair(args.alpha, args.beta)
    if args.j_to < args.j_from:
        raise UsageError("--j-to must not be below --j-from")
    rows = [{"j": j, "bound": ramsey.admissible_bound(pair, j)} for j in range(args.j_from, args.j_to + 1)]
    return EXIT_OK, {"alpha": str(pair.alpha), "beta": str(pair.beta), "table": rows}


def cmd_scan(args):
    pair = ramsey.AdmissiblePair(args.alpha, args.beta)
    scan = ramsey.admissible_pair_scan(pair, (args.n_from, args.n_to), args.samples, args.seed, _budget(args))
    report = scan.to_json()
    undecided = sum(s.undecided for s in scan.sizes)
    if scan.violations:
        return EXIT_NEGATIVE, report
    return (EXIT_UNKNOWN if undecided else EXIT_OK), report


def cmd_witness(args):
    try:
        n, c = ramsey.ramsey_lower_bound_witness(args.red, args.blue)
    except NotCovered as exc:
        raise _DataError(str(exc)) from exc
    check = ramsey.target_check(c, args.red, args.blue, _budget(args))
    report = {
        "red": str(args.red),
        "blue": str(args.blue),
        "n": n,
        "lower_bound": n + 1,
        "avoidance": "ok" if check is Outcome.OK else ("unknown" if check is Outcome.UNKNOWN else "found"),
    }
    if args.output:
        Path(args.output).write_text(dump_coloring(c), encoding="utf-8")
        report["output"] = args.output
    else:
        report["coloring"] = coloring_to_doc(c)
    if check is Outcome.OK:
        return EXIT_OK, report
    if check is Outcome.UNKNOWN:
        return EXIT_UNKNOWN, report
    report["witness"] = check.to_json()
    return EXIT_NEGATIVE, report


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--max-nodes", type=int, default=50_000_000, help="search node budget")
    common.add_argument("--wall-ms", type=int, default=None, help="wall-clock budget in milliseconds")

    parser = _Parser(prog="oddwheel", description="Red cycle / blue wheel colorings of complete graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", parents=[common], help="build an extremal or mutated coloring")
    p.add_argument("family", choices=["two-clique", "three-clique", "ns-two-clique", "brandt-gadget", "mutate"])
    p.add_argument("params", type=int, nargs="*", help="family size parameters")
    p.add_argument("--from", dest="input", help="starting coloring for mutate")
    p.add_argument("--k", type=int, help="mutate keeps avoidance of red C_{2k+1} and blue W_{2k+1}")
    p.add_argument("--flips", type=int, default=10)
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", parents=[common], help="look for a red target or a blue target")
    p.add_argument("file")
    p.add_argument("--red-cycle", type=int)
    p.add_argument("--blue-wheel", type=int)
    p.add_argument("--red", type=_target)
    p.add_argument("--blue", type=_target)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spectrum", parents=[common], help="cycle lengths of one color class")
    p.add_argument("file")
    p.add_argument("--color", choices=["red", "blue"], default="red")
    p.set_defaults(func=cmd_spectrum)

    for name, func, text in (
        ("decompose", cmd_decompose, "compute and verify the stability partition"),
        ("audit", cmd_audit, "re-check the intermediate claims of a decomposition"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file")
        p.add_argument("--k", type=int, required=True)
        if name == "decompose":
            p.add_argument("--trace", help="write the trace JSON here instead of inlining it")
        p.set_defaults(func=func)

    p = sub.add_parser("arrows", parents=[common], help="exhaustive arrowing search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--red", type=_target, required=True)
    p.add_argument("--blue", type=_target, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--no-symmetry", action="store_true")
    p.set_defaults(func=cmd_arrows)

    p = sub.add_parser("bound", parents=[common], help="tabulate floor((3j+beta)/(1-alpha))")
    p.add_argument("--alpha", type=_fraction, required=True)
    p.add_argument("--beta", type=_fraction, required=True)
    p.add_argument("--j-from", type=int, default=4)
    p.add_argument("--j-to", type=int, default=20)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("scan", parents=[common], help="sample graphs against an admissible pair")
    p.add_argument("--alpha", type=_fraction, required=True)
    p.add_argument("--beta", type=_fraction, required=True)
    p.add_argument("--n-from", type=int, default=7)
    p.add_argument("--n-to", type=int, default=12)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("witness", parents=[common], help="lower-bound coloring for a target pair")
    p.add_argument("--red", type=_target, required=True)
    p.add_argument("--blue", type=_target, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_witness)
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    started = time.perf_counter()
    args = None
    try:
        args = build_parser().parse_args(argv)
        randomized = args.command == "scan" or getattr(args, "family", None) == "mutate"
        if randomized and args.seed is None:
            raise UsageError(f"{args.command} is randomized and needs an explicit --seed")
        code, report = args.func(args)
    except UsageError as exc:
        code, report = EXIT_USAGE, {"outcome": "usage-error", "message": str(exc)}
    except (BadParams, BadSize, BadLength) as exc:
        # out-of-range numeric flags are usage errors, not bad input documents
        code, report = EXIT_USAGE, {"outcome": "usage-error", "error": type(exc).__name__, "message": str(exc)}
    except (_DataError, InputError) as exc:
        code, report = EXIT_DATA, {"outcome": "input-error", "error": type(exc).__name__, "message": str(exc)}
    except BudgetExceeded as exc:
        code, report = EXIT_UNKNOWN, {"outcome": "unknown", "message": str(exc), "nodes": exc.nodes}
    except PreconditionViolated as exc:
        # raised outside decompose/audit, e.g. mutating a coloring that already fails
        report = {"outcome": type(exc).__name__, "message": str(exc), "witness": _witness_json(exc.witness)}
        code = EXIT_NEGATIVE
    except OddwheelError as exc:
        code, report = EXIT_DATA, {"outcome": "error", "error": type(exc).__name__, "message": str(exc)}
    budget = {"max_nodes": getattr(args, "max_nodes", None), "wall_ms": getattr(args, "wall_ms", None)}
    report = {
        "command": argv,
        "exit": code,
        **report,
        "budget": budget,
        "seconds": round(time.perf_counter() - started, 6),
    }
    out.write(json.dumps(report) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
