"""From a lattice function to a direction oracle, and back-mapping every
direction-oracle witness to a fixed-point-problem witness.

The forward direction compares each coordinate of x against f(x).  The
back-mapping sends all-zero points to fixed points, duplicate zero points
in a slice to slice-uniqueness violations, and adjacent up/down flips to
either a monotonicity breach or a slice-uniqueness violation; boundary
escapes can never verify against a reduced oracle, so they are rejected
along with every other witness that fails verification.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import Point, Slice, leq
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
    check_ov2,
    verify_opdc_solution,
)
from .tarski import (
    FixedPoint,
    MonotonicityViolation,
    SliceUniquenessViolation,
    SutSolution,
    TarskiFunction,
    restrict,
)


class ContractError(ValueError):
    """A back-mapping was asked to handle a witness that fails verification."""


@dataclass(frozen=True)
class ReducedInstance:
    """A lattice function together with its derived direction oracle."""

    source: TarskiFunction
    oracle: DirectionOracle


def _compare(a: int, b: int) -> str:
    if a < b:
        return UP
    if a == b:
        return ZERO
    return DOWN


def reduce_to_opdc(f: TarskiFunction) -> ReducedInstance:
    """Derive the direction oracle reading up/zero/down according to whether
    f moves each coordinate up, keeps it, or moves it down.

    The oracle is lazy: each direction query performs exactly one
    evaluation of ``f``.
    """

    def dimension(i: int):
        def d(x: Point) -> str:
            return _compare(x[i - 1], f(x)[i - 1])

        return d

    fns = tuple(dimension(i) for i in range(1, f.spec.k + 1))
    return ReducedInstance(source=f, oracle=DirectionOracle.from_callables(f.spec, fns))


def _memoized(f: TarskiFunction) -> TarskiFunction:
    """A callback copy of ``f`` that caches evaluations, so a back-mapping
    costs a bounded number of raw evaluations no matter how often the
    verifier revisits the same points."""
    cache: dict[Point, Point] = {}

    def g(x: Point) -> Point:
        y = cache.get(x)
        if y is None:
            y = f(x)
            cache[x] = y
        return y

    return TarskiFunction.from_callable(f.spec, g)


def map_back(f: TarskiFunction, sol: OpdcSolution) -> SutSolution:
    """Map a verified witness for the reduced oracle to a witness for ``f``.

    Proper solutions map to fixed points and violations map to violations.
    Witnesses that fail verification against the reduced oracle (boundary
    escapes always do) raise ContractError.
    """
    fm = _memoized(f)
    oracle = reduce_to_opdc(fm).oracle
    verdict = verify_opdc_solution(oracle, sol)
    if not verdict:
        raise ContractError(f"witness fails verification: {verdict.reason}")

    if isinstance(sol, AllZero):
        return FixedPoint(sol.x)

    if isinstance(sol, TwoZeroPoints):
        # Both points are fixed in the slice restriction, hence in its up and
        # down sets.  Order the pair so the first element is not below the
        # second; with distinct points at least one orientation works, and
        # trying (x, y) first keeps the output deterministic.
        x, y = sol.x, sol.y
        if leq(x, y):
            x, y = y, x
        return SliceUniquenessViolation(sol.s, x, y)

    if isinstance(sol, AdjacentUpDown):
        return _extract_from_flip(fm, sol.s, sol.x, sol.y, sol.i)

    # Unreachable: a BoundaryEscape cannot verify against a reduced oracle.
    raise ContractError("boundary escapes cannot be mapped")


def ov2_extract(
    f: TarskiFunction, s: Slice, x: Point, y: Point, i: int
) -> SutSolution:
    """Turn a verified adjacent up/down flip into a monotonicity breach or a
    slice-uniqueness violation (never a fixed point)."""
    fm = _memoized(f)
    oracle = reduce_to_opdc(fm).oracle
    verdict = check_ov2(oracle, s, x, y, i)
    if not verdict:
        raise ContractError(f"witness fails verification: {verdict.reason}")
    return _extract_from_flip(fm, s, x, y, i)


def _extract_from_flip(
    fm: TarskiFunction, s: Slice, x: Point, y: Point, i: int
) -> SutSolution:
    """The three-step extraction behind ov2_extract.

    The flip readings give x < fs(x) and fs(y) < y on the slice.  If either
    image breaks monotonicity one step further, that pair is the answer (a
    breach of the restriction on matching fixed coordinates is a breach of
    the base function).  Otherwise fs(x) sits in the up set, fs(y) in the
    down set, and coordinate i keeps them incomparable:
    fs(y)_i <= y_i - 1 = x_i < fs(x)_i.

    The x side is checked before the y side; the first failure wins.
    """
    fs = restrict(fm, s)
    fsx = fs(x)
    fsy = fs(y)
    if not leq(fsx, fs(fsx)):
        return MonotonicityViolation(x, fsx)
    if not leq(fs(fsy), fsy):
        return MonotonicityViolation(fsy, y)
    return SliceUniquenessViolation(s, fsx, fsy)
