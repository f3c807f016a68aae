"""Ground-truth solvers: exhaustive fixed-point search, bottom/top value
iteration, the full slice-uniqueness audit, and exhaustive direction-oracle
witness enumeration.

Everything here is deliberately brute force.  These routines are the
independent oracles the rest of the package is tested against, so no
sampling shortcut is ever substituted for an exhaustive pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import LatticeSpec, Point, Slice, is_i_slice, leq, slice_points
from .opdc import (
    DOWN,
    UP,
    ZERO,
    AdjacentUpDown,
    AllZero,
    BoundaryEscape,
    DirectionOracle,
    OpdcSolution,
    TwoZeroPoints,
)
from .tarski import (
    Evaluable,
    MonotonicityViolation,
    RestrictedFunction,
    SliceUniquenessViolation,
    TarskiFunction,
    restrict,
)


class NonConvergenceError(RuntimeError):
    """Value iteration exceeded its step budget: the input is not monotone."""


@dataclass(frozen=True)
class FixedPointSummary:
    """Every fixed point (value order), plus the lattice minimum/maximum of
    the set when attained.  For a monotone function both always exist; for
    arbitrary functions they may be absent even when fixed points exist."""

    all_fixed: tuple[Point, ...]
    least: Point | None
    greatest: Point | None

    @property
    def count(self) -> int:
        return len(self.all_fixed)


def _domain(g: Evaluable):
    if isinstance(g, RestrictedFunction):
        return slice_points(g.spec, g.s)
    return g.spec.points()


def brute_fixed_points(g: Evaluable) -> FixedPointSummary:
    """Exhaustive fixed-point scan over the full domain of ``g``."""
    fixed = sorted(x for x in _domain(g) if g(x) == x)
    least = greatest = None
    if fixed:
        # A lattice minimum, when it exists, equals the coordinatewise meet.
        meet = tuple(min(c) for c in zip(*fixed))
        join = tuple(max(c) for c in zip(*fixed))
        members = set(fixed)
        least = meet if meet in members else None
        greatest = join if join in members else None
    return FixedPointSummary(tuple(fixed), least, greatest)


@dataclass(frozen=True)
class KleeneResult:
    """Outcome of value iteration: the fixed point reached, the iterate
    trace (every distinct point visited, in order), and how many function
    evaluations were spent."""

    point: Point
    trace: tuple[Point, ...]
    evaluations: int

    @property
    def steps(self) -> int:
        return len(self.trace) - 1


def _iterate(f: TarskiFunction, start: Point) -> KleeneResult:
    # Budget k*(n-1)+1: for monotone f each strict step changes the
    # coordinate sum by at least 1 within [k, k*n], so k*(n-1) strict steps
    # plus one confirming evaluation always suffice.  Exceeding the budget
    # proves the input broke the monotonicity contract.
    spec = f.spec
    budget = spec.k * (spec.n - 1) + 1
    x = start
    trace = [x]
    evaluations = 0
    while True:
        y = f(x)
        evaluations += 1
        if y == x:
            return KleeneResult(point=x, trace=tuple(trace), evaluations=evaluations)
        if evaluations >= budget:
            raise NonConvergenceError(
                f"no fixed point after {evaluations} evaluations; input is not monotone"
            )
        trace.append(y)
        x = y


def kleene_lfp(f: TarskiFunction) -> KleeneResult:
    """Iterate f from the all-ones bottom point; for monotone f this reaches
    the least fixed point in at most k*(n-1)+1 evaluations."""
    return _iterate(f, f.spec.bottom)


def kleene_gfp(f: TarskiFunction) -> KleeneResult:
    """Dual of kleene_lfp, iterating down from the all-n top point."""
    return _iterate(f, f.spec.top)


@dataclass(frozen=True)
class SutAuditReport:
    """Full audit: monotonicity over all comparable pairs, fixed-point count
    of every slice restriction, and the first uniqueness violation found.

    First witnesses are selected by value order of (slice key, x, y) so
    reports are stable across runs and platforms.
    """

    monotone: bool
    monotonicity_witness: MonotonicityViolation | None
    slice_fixed_counts: dict[Slice, int] = field(repr=False)
    uniqueness_witness: SliceUniquenessViolation | None = None

    @property
    def violation_free(self) -> bool:
        return self.monotone and self.uniqueness_witness is None

    def full_lattice_count(self) -> int:
        k = next(iter(self.slice_fixed_counts)).k
        return self.slice_fixed_counts[Slice.full(k)]


def brute_sut_audit(f: TarskiFunction) -> SutAuditReport:
    """Exhaustive audit over all point pairs and all (n+1)^k slices.

    Pair checking is quadratic in the table size and meant for desk-scale
    instances only.
    """
    spec = f.spec
    pts = sorted(spec.points())
    values = {x: f(x) for x in pts}

    mono_witness = None
    for x in pts:
        for y in pts:
            if leq(x, y) and not leq(values[x], values[y]):
                mono_witness = MonotonicityViolation(x, y)
                break
        if mono_witness:
            break

    counts: dict[Slice, int] = {}
    uniq_witness = None
    for s in spec.slices():
        fs = restrict(f, s)
        spts = sorted(slice_points(spec, s))
        svals = {x: fs(x) for x in spts}
        counts[s] = sum(1 for x in spts if svals[x] == x)
        if uniq_witness is None:
            ups = [x for x in spts if leq(x, svals[x])]
            downs = [x for x in spts if leq(svals[x], x)]
            for x in ups:
                for y in downs:
                    if not leq(x, y):
                        uniq_witness = SliceUniquenessViolation(s, x, y)
                        break
                if uniq_witness:
                    break

    return SutAuditReport(
        monotone=mono_witness is None,
        monotonicity_witness=mono_witness,
        slice_fixed_counts=counts,
        uniqueness_witness=uniq_witness,
    )


def brute_opdc_solutions(
    oracle: DirectionOracle, *, any_slice: bool = False
) -> list[OpdcSolution]:
    """Every valid witness of every type, in a deterministic order.

    Output groups O1, then OV1, OV2, OV3; slices run in sort-key order,
    witness indices ascending, points in value order.  OV1 pairs are
    reported once each, with x below y in value order.
    """
    spec = oracle.spec
    pts = sorted(spec.points())
    dirs = {x: oracle.directions(x) for x in pts}

    o1 = [AllZero(x) for x in pts if all(d == ZERO for d in dirs[x])]
    ov1: list[OpdcSolution] = []
    ov2: list[OpdcSolution] = []
    ov3: list[OpdcSolution] = []

    for s in spec.slices():
        spts = sorted(slice_points(spec, s))
        free = s.free_dims()

        if any_slice or is_i_slice(s, 1):
            zeros = [x for x in spts if all(dirs[x][d - 1] == ZERO for d in free)]
            for a in range(len(zeros)):
                for b in range(a + 1, len(zeros)):
                    ov1.append(TwoZeroPoints(s, zeros[a], zeros[b]))

        for i in range(1, spec.k + 1):
            if not (any_slice or is_i_slice(s, i)):
                continue
            others = [j for j in range(1, spec.k + 1) if j != i]
            quiet = [
                x for x in spts if all(dirs[x][j - 1] == ZERO for j in others)
            ]
            ups = [x for x in quiet if dirs[x][i - 1] == UP]
            downs = [x for x in quiet if dirs[x][i - 1] == DOWN]
            for x in ups:
                for y in downs:
                    if y[i - 1] == x[i - 1] + 1:
                        ov2.append(AdjacentUpDown(s, x, y, i))
            for x in quiet:
                d = dirs[x][i - 1]
                if (x[i - 1] == 1 and d == DOWN) or (x[i - 1] == spec.n and d == UP):
                    ov3.append(BoundaryEscape(s, x, i))

    return o1 + ov1 + ov2 + ov3
