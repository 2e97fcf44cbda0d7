"""Command-line front end.

Weights are given as ``--weight n0,n1,...,nN`` meaning n0*w0 - n1*w1 - ... - nN*wN.
Exit codes: 0 pass, 1 mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decomposition import compare, main_theorem
from .module_realization import check_crystal_lattice, check_polarization_contravariance, check_relations
from .roots import AlgebraType, Weight, lift
from .summary import DecompositionSummary
from .super_crystal import (
    TensorCrystal,
    build_omega0,
    crystal_for_weight,
    decompose_super,
    graph_json,
    spin_module_crystal,
    to_dot,
)
from .verification import SUITES, run_suite, with_predicted_multiplicities

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_weight(text: str, t: AlgebraType) -> Weight:
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"weight {text!r} is not a comma-separated list of integers") from exc
    if len(parts) != t.n + 1:
        raise UsageError(f"weight {text!r} needs {t.n + 1} entries for {t}")
    if any(x < 0 for x in parts[1:]):
        raise UsageError("n1..nN must be non-negative")
    return Weight.from_standard(parts[0], parts[1:])


def _type(args) -> AlgebraType:
    try:
        return AlgebraType(args.family, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _target_crystal(args, t):
    cap = args.cap
    if args.crystal == "spin":
        return spin_module_crystal(t, cap)
    if args.crystal == "spin-odd":
        if t.family != "D":
            raise UsageError("spin-odd exists only for family D")
        return spin_module_crystal(t, cap, odd=True)
    if args.crystal == "omega0":
        if cap < 1:
            raise UsageError("omega0 needs cap >= 1")
        return build_omega0(t, cap)
    weights = [parse_weight(w, t) for w in args.weight or []]
    if not weights:
        raise UsageError(f"--crystal {args.crystal} needs --weight")
    try:
        factors = [crystal_for_weight(w, t, cap) for w in weights]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.crystal == "weight":
        if len(factors) != 1:
            raise UsageError("--crystal weight takes exactly one --weight")
        return factors[0]
    return TensorCrystal(factors, cap)


def cmd_graph(args) -> int:
    t = _type(args)
    crystal = _target_crystal(args, t)
    if args.format == "dot":
        _emit(to_dot(crystal), args.output)
    else:
        _emit(json.dumps(graph_json(crystal), indent=1) + "\n", args.output)
    return EXIT_OK


def shifted_theorem(first: Weight, second: Weight, t: AlgebraType, cap: int) -> DecompositionSummary:
    """Closed form for typical factors; each extra omega_0 shifts every summand by omega_0."""
    offset = first.n0 + second.n0 - 2
    base = main_theorem(lift(first.classical, 0), lift(second.classical, 0), t, max(cap - offset, 0))
    w0 = Weight((offset,) + (0,) * t.n)
    summands = [w + w0 for w in base.summands if w.n0 + offset <= cap]
    return DecompositionSummary(summands, cap, cap)


def cmd_decompose(args) -> int:
    t = _type(args)
    weights = [parse_weight(w, t) for w in args.weight or []]
    if len(weights) != 2:
        raise UsageError("decompose needs exactly two --weight options (lam' then lam)")
    try:
        factors = [crystal_for_weight(w, t, args.cap) for w in weights]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    observed = decompose_super(factors, args.cap)
    result = {"observed": observed.to_json()}
    status = EXIT_OK
    if all(w.n0 >= 1 for w in weights):
        pred = shifted_theorem(weights[0], weights[1], t, args.cap)
        pred = with_predicted_multiplicities(pred, observed, t)
        report = compare(pred, observed)
        result["theorem"] = report
        if report["status"] != "match":
            status = EXIT_MISMATCH
    if args.expected:
        with open(args.expected) as fh:
            expected = DecompositionSummary.from_json(json.load(fh))
        try:
            report = compare(expected, observed)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        result["expected"] = report
        if report["status"] != "match":
            status = EXIT_MISMATCH
    _emit(json.dumps(result, indent=1) + "\n", args.output)
    return status


def cmd_verify(args) -> int:
    t = _type(args)
    result = run_suite(args.suite, t, args.cap)
    _emit(json.dumps(result.to_json(), indent=1, default=str) + "\n", args.output)
    return EXIT_OK if result.passed else EXIT_MISMATCH


def cmd_relations(args) -> int:
    t = _type(args)
    reports = {
        "relations": check_relations(t, args.max_level),
        "polarization": check_polarization_contravariance(t, args.max_level),
        "lattice": check_crystal_lattice(t, args.max_level),
    }
    out = {
        name: {"passed": r.passed, "checked": r.checked, "boundary": r.boundary, "failures": r.failures}
        for name, r in reports.items()
    }
    _emit(json.dumps(out, indent=1) + "\n", args.output)
    return EXIT_OK if all(r.passed for r in reports.values()) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supercrystal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, cap_default=6):
        p.add_argument("--family", choices=["D", "B"], default="D")
        p.add_argument("--n", type=int, default=4)
        p.add_argument("--cap", type=int, default=cap_default)
        p.add_argument("--output", "-o")

    g = sub.add_parser("graph", help="export a truncated crystal graph")
    common(g, cap_default=2)
    g.add_argument("--crystal", choices=["spin", "spin-odd", "omega0", "weight", "tensor"], default="spin")
    g.add_argument("--weight", action="append")
    g.add_argument("--format", choices=["dot", "json"], default="dot")
    g.set_defaults(func=cmd_graph)

    d = sub.add_parser("decompose", help="decompose B(lam') (x) B(lam)")
    common(d)
    d.add_argument("--weight", action="append", help="n0,n1,...,nN; give twice")
    d.add_argument("--expected", help="JSON summary to compare against")
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="run an invariant suite")
    common(v)
    v.add_argument("--suite", choices=SUITES, required=True)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("relations", help="check the symbolic module")
    common(r)
    r.add_argument("--max-level", type=int, default=8)
    r.set_defaults(func=cmd_relations)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cap", 0) < 0:
        parser.error("--cap must be non-negative")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"supercrystal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"supercrystal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
