"""Seeded end-to-end property pipeline: generate, audit, reduce, enumerate,
map back, verify.

Each seed drives one random-monotone instance and one mutated instance
through every cross-check the package supports.  Any failed property is a
counterexample; failing seeds are written out with deterministic file
contents so a failure can be replayed exactly.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .generators import GeneratorConfig, generate
from .lattice import LatticeSpec
from .opdc import AllZero, BoundaryEscape
from .reduction import ContractError, map_back, reduce_to_opdc
from .serialization import (
    hash_instance,
    parse_instance,
    parse_witness,
    serialize_instance,
    serialize_witness,
)
from .solvers import brute_opdc_solutions, brute_sut_audit
from .tarski import FixedPoint, TarskiFunction, verify_sut_solution

COUNTEREXAMPLE_DIR_ENV = "SUTARSKI_COUNTEREXAMPLE_DIR"
DEFAULT_COUNTEREXAMPLE_DIR = "counterexamples"


@dataclass(frozen=True)
class FailureRecord:
    seed: int
    label: str
    check: str
    detail: str
    instance_text: str
    witness_text: str | None = None


@dataclass(frozen=True)
class SeedReport:
    seed: int
    failures: tuple[FailureRecord, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_instance(f: TarskiFunction, seed: int, label: str) -> list[FailureRecord]:
    """All pipeline properties for one instance; empty list means clean."""
    failures: list[FailureRecord] = []
    instance_text = serialize_instance(f.materialize())

    def fail(check: str, detail: str, witness_text: str | None = None) -> None:
        failures.append(FailureRecord(seed, label, check, detail, instance_text, witness_text))

    audit = brute_sut_audit(f)
    oracle = reduce_to_opdc(f).oracle
    solutions = brute_opdc_solutions(oracle)
    ihash = hash_instance(f)

    if audit.monotone and not any(isinstance(s, AllZero) for s in solutions):
        fail("totality", "monotone instance with no all-zero point")

    for sol in solutions:
        wtext = serialize_witness(sol, ihash)
        if isinstance(sol, BoundaryEscape):
            fail("ov3-impossibility", "reduced oracle admits a boundary escape", wtext)
            continue
        try:
            mapped = map_back(f, sol)
        except ContractError as e:
            fail("map-back-contract", str(e), wtext)
            continue
        verdict = verify_sut_solution(f, mapped)
        if not verdict:
            fail("map-back-soundness", f"mapped witness invalid: {verdict.reason}", wtext)
        proper = isinstance(sol, AllZero)
        if proper != isinstance(mapped, FixedPoint):
            fail("type-preservation", f"{type(sol).__name__} mapped to {type(mapped).__name__}", wtext)
        mtext = serialize_witness(mapped, ihash)
        if serialize_witness(parse_witness(mtext).solution, ihash) != mtext:
            fail("witness-round-trip", "mapped witness does not round-trip", mtext)

    if audit.violation_free and any(not isinstance(s, AllZero) for s in solutions):
        fail("promise-preservation", "violation-free audit but the oracle has violations")

    reparsed = parse_instance(instance_text)
    if reparsed.table() != f.table() or serialize_instance(reparsed) != instance_text:
        fail("instance-round-trip", "parse/serialize is not the identity")

    return failures


def run_seed(n: int, k: int, seed: int) -> SeedReport:
    spec = LatticeSpec(n, k)
    failures: list[FailureRecord] = []
    random_monotone = generate(GeneratorConfig(spec, "random-monotone", seed))
    failures += check_instance(random_monotone, seed, "random-monotone")
    mutated = generate(GeneratorConfig(spec, "mutated", seed, mutations=1 + seed % 3))
    failures += check_instance(mutated, seed, "mutated")
    return SeedReport(seed, tuple(failures))


def _worker(args: tuple[int, int, int]) -> SeedReport:
    return run_seed(*args)


@dataclass(frozen=True)
class FuzzOutcome:
    reports: tuple[SeedReport, ...]
    written: tuple[Path, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    @property
    def failed_seeds(self) -> tuple[int, ...]:
        return tuple(r.seed for r in self.reports if not r.ok)


def counterexample_dir() -> Path:
    return Path(os.environ.get(COUNTEREXAMPLE_DIR_ENV, DEFAULT_COUNTEREXAMPLE_DIR))


def write_counterexample(directory: Path, record: FailureRecord, index: int) -> Path:
    """Write one failure as replayable files; contents depend only on the record."""
    target = Path(directory) / f"seed-{record.seed:06d}" / f"{record.label}-{index:02d}"
    target.mkdir(parents=True, exist_ok=True)
    (target / "instance.json").write_text(record.instance_text, encoding="utf-8")
    if record.witness_text is not None:
        (target / "witness.json").write_text(record.witness_text, encoding="utf-8")
    (target / "failure.txt").write_text(f"{record.check}: {record.detail}\n", encoding="utf-8")
    return target


def run_fuzz(
    n: int,
    k: int,
    seeds,
    *,
    workers: int = 1,
    directory: Path | None = None,
) -> FuzzOutcome:
    """Run the pipeline over the given seeds, sharding across worker
    processes; reports merge in seed order regardless of worker count."""
    jobs = [(n, k, s) for s in seeds]
    if workers <= 1:
        reports = [run_seed(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_worker, jobs))

    written: list[Path] = []
    failing = [r for r in reports if not r.ok]
    if failing:
        directory = counterexample_dir() if directory is None else Path(directory)
        for report in failing:
            for idx, record in enumerate(report.failures):
                written.append(write_counterexample(directory, record, idx))
    return FuzzOutcome(tuple(reports), tuple(written))
