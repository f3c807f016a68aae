"""Command-line surface: gen, reduce, solve, verify, audit, map-back, fuzz.

The CLI is a thin shell over the library: every predicate it reports comes
from the same verifier functions the test suite exercises.  Exit codes:
0 success, 1 verification failure / no solution / counterexample found,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .generators import KINDS, GeneratorConfig, generate
from .lattice import FREE, LatticeError, LatticeSpec
from .reduction import ContractError, map_back, reduce_to_opdc
from .serialization import (
    ParseError,
    hash_instance,
    hash_oracle,
    parse_instance,
    parse_oracle,
    parse_witness,
    serialize_instance,
    serialize_oracle,
    serialize_witness,
)
from .solvers import (
    NonConvergenceError,
    brute_fixed_points,
    brute_sut_audit,
    kleene_gfp,
    kleene_lfp,
)
from .tarski import FixedPoint, verify_sut_solution
from .opdc import verify_opdc_solution
from .fuzzing import run_fuzz


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _parse_target(value: str):
    try:
        return tuple(int(part) for part in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"target must be comma-separated integers, got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sutarski",
        description="Generate, reduce, solve, verify, audit, and fuzz grid fixed-point instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--target", type=_parse_target, help="attractor target, e.g. 2,2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mutations", type=int, default=1)
    p.add_argument("-o", "--output", help="output file (default: stdout)")

    p = sub.add_parser("reduce", help="emit the derived direction-oracle table")
    p.add_argument("instance")
    p.add_argument("-o", "--output")

    p = sub.add_parser("solve", help="find a fixed point and print its witness")
    p.add_argument("instance")
    p.add_argument("--method", choices=("kleene-lfp", "kleene-gfp", "brute"), default="brute")

    p = sub.add_parser("verify", help="check a witness against an instance")
    p.add_argument("instance")
    p.add_argument("witness")

    p = sub.add_parser("audit", help="run the exhaustive slice-uniqueness audit")
    p.add_argument("instance")

    p = sub.add_parser("map-back", help="map a direction-oracle witness to an instance witness")
    p.add_argument("instance")
    p.add_argument("opdc_witness")

    p = sub.add_parser("fuzz", help="run the seeded property pipeline")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--seeds", required=True, type=int, help="run seeds 0..COUNT-1")
    p.add_argument("--workers", type=int, default=1)

    return parser


def _cmd_gen(ns) -> int:
    spec = LatticeSpec(ns.n, ns.k)
    if ns.kind == "attractor" and ns.target is None:
        print("gen: --kind attractor requires --target", file=sys.stderr)
        return 2
    config = GeneratorConfig(
        spec, ns.kind, seed=ns.seed, target=ns.target, mutations=ns.mutations
    )
    f = generate(config)
    _write_output(serialize_instance(f), ns.output)
    return 0


def _cmd_reduce(ns) -> int:
    f = parse_instance(_read(ns.instance))
    oracle = reduce_to_opdc(f).oracle
    meta = {"source_instance": hash_instance(f)}
    _write_output(serialize_oracle(oracle, metadata=meta), ns.output)
    return 0


def _cmd_solve(ns) -> int:
    f = parse_instance(_read(ns.instance))
    if ns.method == "brute":
        summary = brute_fixed_points(f)
        if not summary.all_fixed:
            print("solve: no fixed point exists", file=sys.stderr)
            return 1
        point = summary.all_fixed[0]
    else:
        iterate = kleene_lfp if ns.method == "kleene-lfp" else kleene_gfp
        try:
            point = iterate(f).point
        except NonConvergenceError as e:
            print(f"solve: {e}", file=sys.stderr)
            return 1
    sys.stdout.write(serialize_witness(FixedPoint(point), hash_instance(f)))
    return 0


def _cmd_verify(ns) -> int:
    witness = parse_witness(_read(ns.witness))
    if witness.problem == "sut":
        f = parse_instance(_read(ns.instance))
        expected_hash = hash_instance(f)
        verdict = verify_sut_solution(f, witness.solution)
    else:
        oracle = parse_oracle(_read(ns.instance))
        expected_hash = hash_oracle(oracle)
        verdict = verify_opdc_solution(oracle, witness.solution)
    if witness.instance_hash != expected_hash:
        print("verify: instance-hash-mismatch", file=sys.stderr)
        return 1
    if not verdict:
        print(f"verify: invalid: {verdict.reason}", file=sys.stderr)
        return 1
    print(f"valid: {witness.tag}")
    return 0


def _cmd_audit(ns) -> int:
    f = parse_instance(_read(ns.instance))
    report = brute_sut_audit(f)
    mono = report.monotonicity_witness
    uniq = report.uniqueness_witness
    doc = {
        "monotone": report.monotone,
        "monotonicity_witness": None if mono is None else {"x": list(mono.x), "y": list(mono.y)},
        "slice_fixed_points": [
            {"slice": ["*" if e is FREE else e for e in s.entries], "count": count}
            for s, count in report.slice_fixed_counts.items()
        ],
        "uniqueness_witness": None
        if uniq is None
        else {
            "slice": ["*" if e is FREE else e for e in uniq.s.entries],
            "x": list(uniq.x),
            "y": list(uniq.y),
        },
        "violation_free": report.violation_free,
    }
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_map_back(ns) -> int:
    f = parse_instance(_read(ns.instance))
    witness = parse_witness(_read(ns.opdc_witness))
    if witness.problem != "opdc":
        print("map-back: witness must be an opdc witness", file=sys.stderr)
        return 2
    oracle = reduce_to_opdc(f).oracle
    if witness.instance_hash != hash_oracle(oracle):
        print("map-back: instance-hash-mismatch", file=sys.stderr)
        return 1
    try:
        mapped = map_back(f, witness.solution)
    except ContractError as e:
        print(f"map-back: {e}", file=sys.stderr)
        return 1
    sys.stdout.write(serialize_witness(mapped, hash_instance(f)))
    return 0


def _cmd_fuzz(ns) -> int:
    outcome = run_fuzz(ns.n, ns.k, range(ns.seeds), workers=ns.workers)
    for report in outcome.reports:
        for record in report.failures:
            print(
                f"seed {record.seed} [{record.label}] {record.check}: {record.detail}",
                file=sys.stderr,
            )
    status = "ok" if outcome.ok else f"FAILED ({len(outcome.failed_seeds)} seeds)"
    print(f"fuzz: {ns.seeds} seeds on n={ns.n} k={ns.k}: {status}")
    if outcome.written:
        print(f"fuzz: counterexamples written under {outcome.written[0].parent.parent}")
    return 0 if outcome.ok else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "reduce": _cmd_reduce,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "audit": _cmd_audit,
    "map-back": _cmd_map_back,
    "fuzz": _cmd_fuzz,
}


def cli_dispatch(argv) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return _COMMANDS[ns.command](ns)
    except (ParseError, LatticeError, ValueError) as e:
        print(f"{ns.command}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"{ns.command}: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
