"""Instance generators: attractor tables that are slice-unique by
construction, random monotone tables via monotone closure, the canonical
unique-but-not-slice-unique table, and random table mutations.

All randomness comes from numpy's seedable PCG64 generator so identical
(spec, seed, parameters) always produce bit-identical tables; the algorithm
name is recorded in instance metadata for reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .lattice import LatticeError, LatticeSpec, Point, leq
from .tarski import TarskiFunction

RNG_ALGORITHM = "pcg64"

KINDS = ("attractor", "random-monotone", "unique-not-super", "mutated")


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def gen_attractor(spec: LatticeSpec, target: Point) -> TarskiFunction:
    """A table that steps one unit toward ``target`` in every dimension.

    Each output coordinate depends only on the matching input coordinate and
    is nondecreasing in it, so the result is monotone, and every slice
    restriction has exactly one fixed point (the target clamped to the
    slice).
    """
    spec.validate_point(target)
    table = [
        tuple(xi + (ti > xi) - (ti < xi) for xi, ti in zip(x, target))
        for x in spec.points()
    ]
    return TarskiFunction.from_table(spec, table)


def monotone_closure(g: TarskiFunction) -> TarskiFunction:
    """The coordinatewise max of g over the lower set of each point.

    Monotone by construction (the max over a growing set grows), and the
    identity on inputs that are already monotone.  Quadratic in the table
    size; fine at desk scale.
    """
    pts = list(g.spec.points())
    values = [g(x) for x in pts]
    table = []
    for x in pts:
        below = [v for y, v in zip(pts, values) if leq(y, x)]
        table.append(tuple(max(col) for col in zip(*below)))
    return TarskiFunction.from_table(g.spec, table)


def gen_random_monotone(spec: LatticeSpec, seed: int) -> TarskiFunction:
    """Monotone closure of a uniformly random table."""
    rng = _rng(seed)
    raw = rng.integers(1, spec.n + 1, size=(spec.size, spec.k))
    return monotone_closure(TarskiFunction.from_table(spec, raw))


# The 2x2 core: unique fixed point (2,2) on the full lattice, but the slice
# pinning dimension 2 to 1 leaves both of its points fixed.
_UNS_CORE = {
    (1, 1): (1, 2),
    (2, 1): (2, 2),
    (1, 2): (2, 2),
    (2, 2): (2, 2),
}


def gen_unique_not_super(spec: LatticeSpec) -> TarskiFunction:
    """A monotone table with a unique fixed point whose slices are not all
    unique.

    Defined by the 2x2 core table; larger grids embed it by clamping the
    first two coordinates to {1, 2} and attracting every extra dimension
    toward 1.  The embedding keeps the unique/not-slice-unique property,
    which tests confirm by audit rather than trust.
    """
    if spec.n < 2 or spec.k < 2:
        raise LatticeError(f"need n >= 2 and k >= 2, got n={spec.n}, k={spec.k}")

    def value(x: Point) -> Point:
        head = _UNS_CORE[(min(x[0], 2), min(x[1], 2))]
        tail = tuple(max(c - 1, 1) for c in x[2:])
        return head + tail

    return TarskiFunction.from_table(spec, [value(x) for x in spec.points()])


def rewrite_entries(f: TarskiFunction, rewrites: Mapping[int, Point]) -> TarskiFunction:
    """Copy ``f`` with the table entries at the given canonical indices replaced."""
    table = list(f.table())
    for idx, p in rewrites.items():
        if not 0 <= idx < f.spec.size:
            raise LatticeError(f"table index {idx} outside [0, {f.spec.size})")
        f.spec.validate_point(tuple(p))
        table[idx] = tuple(p)
    return TarskiFunction.from_table(f.spec, table)


def gen_mutated(f: TarskiFunction, seed: int, count: int) -> TarskiFunction:
    """Rewrite ``count`` uniformly chosen table entries to uniformly random
    points.  No monotonicity guarantee is made; callers audit the result.
    Index draws are with replacement, so fewer than ``count`` entries may
    end up changed."""
    if not f.is_table:
        raise ValueError("mutation requires a table-backed function")
    rng = _rng(seed)
    table = list(f.table())
    for _ in range(count):
        idx = int(rng.integers(0, f.spec.size))
        table[idx] = tuple(int(c) for c in rng.integers(1, f.spec.n + 1, size=f.spec.k))
    return TarskiFunction.from_table(f.spec, table)


@dataclass(frozen=True)
class GeneratorConfig:
    """Everything needed to rebuild an instance: grid, kind, seed, and the
    kind-specific parameters (target point, mutation count)."""

    spec: LatticeSpec
    kind: str
    seed: int = 0
    target: Point | None = None
    mutations: int = 1

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "attractor":
            if self.target is None:
                raise ValueError("attractor generation needs a target point")
            self.spec.validate_point(self.target)


def generate(config: GeneratorConfig) -> TarskiFunction:
    """Build the configured instance with provenance metadata attached."""
    spec = config.spec
    meta: dict = {"kind": config.kind, "rng": RNG_ALGORITHM, "parameters": {}}
    if config.kind == "attractor":
        f = gen_attractor(spec, config.target)
        meta["parameters"]["target"] = list(config.target)
    elif config.kind == "random-monotone":
        f = gen_random_monotone(spec, config.seed)
        meta["seed"] = config.seed
    elif config.kind == "unique-not-super":
        f = gen_unique_not_super(spec)
    else:  # mutated: random-monotone base, then seeded rewrites
        base = gen_random_monotone(spec, config.seed)
        f = gen_mutated(base, config.seed, config.mutations)
        meta["seed"] = config.seed
        meta["parameters"]["mutations"] = config.mutations
    f.metadata = meta
    return f
