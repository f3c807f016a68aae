"""Direction oracles and the four OPDC witness types with their verifiers.

An OPDC instance gives one direction function per dimension, reading up,
down, or zero at every grid point.  The proper solution O1 is an all-zero
point; OV1/OV2/OV3 are violation witnesses (two zero points in a slice, an
adjacent up/down flip, a boundary escape).  Witness slices must be i-slices
(all dimensions up to i free) unless the ``any_slice`` relaxation is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .lattice import LatticeError, LatticeSpec, Point, Slice, is_i_slice
from .verdict import Verdict, invalid, valid

UP = "up"
DOWN = "down"
ZERO = "zero"
DIRECTIONS = (UP, DOWN, ZERO)


class DirectionOracle:
    """Per-dimension direction functions over one grid.

    Backed either by a table of per-point direction rows or by k callables;
    callables must be pure and safe for concurrent calls.
    """

    __slots__ = ("spec", "metadata", "_fns", "_rows")

    def __init__(self, spec, *, fns=None, rows=None, metadata=None):
        if (fns is None) == (rows is None):
            raise ValueError("exactly one of fns= or rows= is required")
        self.spec = spec
        self.metadata = metadata
        self._fns = fns
        self._rows = rows

    @classmethod
    def from_callables(
        cls, spec: LatticeSpec, fns: Sequence[Callable[[Point], str]], metadata=None
    ) -> "DirectionOracle":
        fns = tuple(fns)
        if len(fns) != spec.k:
            raise LatticeError(f"need {spec.k} direction functions, got {len(fns)}")
        return cls(spec, fns=fns, metadata=metadata)

    @classmethod
    def from_table(cls, spec: LatticeSpec, rows, metadata=None) -> "DirectionOracle":
        """Build from n^k rows of k directions, in canonical point order."""
        table = tuple(tuple(row) for row in rows)
        if len(table) != spec.size:
            raise LatticeError(f"table has {len(table)} rows, expected n^k = {spec.size}")
        for row in table:
            if len(row) != spec.k:
                raise LatticeError(f"row {row!r} has {len(row)} entries, expected {spec.k}")
            for d in row:
                if d not in DIRECTIONS:
                    raise LatticeError(f"unknown direction {d!r}")
        return cls(spec, rows=table, metadata=metadata)

    @property
    def is_table(self) -> bool:
        return self._rows is not None

    def direction(self, i: int, x: Point) -> str:
        """D_i(x); the dimension index i is 1-based."""
        if not 1 <= i <= self.spec.k:
            raise LatticeError(f"dimension index {i} outside [1, {self.spec.k}]")
        self.spec.validate_point(x)
        if self._rows is not None:
            return self._rows[self.spec.index(x)][i - 1]
        d = self._fns[i - 1](x)
        if d not in DIRECTIONS:
            raise ValueError(f"direction callback returned {d!r}")
        return d

    def directions(self, x: Point) -> tuple[str, ...]:
        return tuple(self.direction(i, x) for i in range(1, self.spec.k + 1))

    def rows(self) -> tuple[tuple[str, ...], ...]:
        """The full direction table in canonical order (evaluates callbacks)."""
        if self._rows is not None:
            return self._rows
        return tuple(self.directions(x) for x in self.spec.points())


@dataclass(frozen=True)
class AllZero:
    """O1: a point where every dimension reads zero."""

    x: Point


@dataclass(frozen=True)
class TwoZeroPoints:
    """OV1: two distinct points of a slice reading zero on all free dimensions."""

    s: Slice
    x: Point
    y: Point


@dataclass(frozen=True)
class AdjacentUpDown:
    """OV2: x reads up and y reads down in dimension i with y_i = x_i + 1,
    both points reading zero in every other dimension."""

    s: Slice
    x: Point
    y: Point
    i: int


@dataclass(frozen=True)
class BoundaryEscape:
    """OV3: a point reading down on the lower boundary or up on the upper
    boundary of dimension i, zero in every other dimension."""

    s: Slice
    x: Point
    i: int


OpdcSolution = Union[AllZero, TwoZeroPoints, AdjacentUpDown, BoundaryEscape]


def check_o1(oracle: DirectionOracle, x: Point) -> bool:
    """True iff every dimension reads zero at x."""
    return all(oracle.direction(i, x) == ZERO for i in range(1, oracle.spec.k + 1))


def _structure(oracle, s, points, *, i=None, any_slice=False) -> Verdict:
    """Shared structural clauses: slice shape, index range, admissibility,
    and point membership.  Direction evaluation happens only after these
    pass, so verifiers never query the oracle outside the witness."""
    spec = oracle.spec
    if not spec.contains_slice(s):
        return invalid("malformed-slice")
    if i is not None:
        if not isinstance(i, int) or not 1 <= i <= spec.k:
            return invalid("index-out-of-range")
        if not (any_slice or is_i_slice(s, i)):
            return invalid("slice-not-admissible")
    else:
        # An i-slice for some i is exactly a 1-slice.
        if not (any_slice or is_i_slice(s, 1)):
            return invalid("slice-not-admissible")
    for label, p in points:
        if not spec.contains(p):
            return invalid(f"{label}-not-in-lattice")
        if not s.contains(p):
            return invalid(f"{label}-not-in-slice")
    return valid()


def check_ov1(
    oracle: DirectionOracle, s: Slice, x: Point, y: Point, *, any_slice: bool = False
) -> Verdict:
    """Two distinct slice points reading zero on every free dimension."""
    v = _structure(oracle, s, (("x", x), ("y", y)), any_slice=any_slice)
    if not v:
        return v
    if x == y:
        return invalid("points-equal")
    for d in s.free_dims():
        if oracle.direction(d, x) != ZERO:
            return invalid("x-nonzero-on-free")
    for d in s.free_dims():
        if oracle.direction(d, y) != ZERO:
            return invalid("y-nonzero-on-free")
    return valid()


def check_ov2(
    oracle: DirectionOracle,
    s: Slice,
    x: Point,
    y: Point,
    i: int,
    *,
    any_slice: bool = False,
) -> Verdict:
    """An adjacent up/down flip in dimension i, zeros in all other dimensions.

    As defined, x and y need not agree on free dimensions other than i; the
    zero clauses range over every dimension j != i, fixed ones included.
    """
    v = _structure(oracle, s, (("x", x), ("y", y)), i=i, any_slice=any_slice)
    if not v:
        return v
    if y[i - 1] != x[i - 1] + 1:
        return invalid("adjacency")
    for j in range(1, oracle.spec.k + 1):
        if j == i:
            continue
        if oracle.direction(j, x) != ZERO:
            return invalid("x-nonzero-off-index")
        if oracle.direction(j, y) != ZERO:
            return invalid("y-nonzero-off-index")
    if oracle.direction(i, x) != UP:
        return invalid("x-not-up")
    if oracle.direction(i, y) != DOWN:
        return invalid("y-not-down")
    return valid()


def check_ov3(
    oracle: DirectionOracle, s: Slice, x: Point, i: int, *, any_slice: bool = False
) -> Verdict:
    """A boundary escape: down at the bottom or up at the top of dimension i,
    zeros in all other dimensions."""
    v = _structure(oracle, s, (("x", x),), i=i, any_slice=any_slice)
    if not v:
        return v
    for j in range(1, oracle.spec.k + 1):
        if j != i and oracle.direction(j, x) != ZERO:
            return invalid("nonzero-off-index")
    n = oracle.spec.n
    if x[i - 1] not in (1, n):
        return invalid("boundary")
    d = oracle.direction(i, x)
    if (x[i - 1] == 1 and d == DOWN) or (x[i - 1] == n and d == UP):
        return valid()
    return invalid("not-escaping")


def verify_opdc_solution(
    oracle: DirectionOracle, sol: OpdcSolution, *, any_slice: bool = False
) -> Verdict:
    if isinstance(sol, AllZero):
        if not oracle.spec.contains(sol.x):
            return invalid("x-not-in-lattice")
        return valid() if check_o1(oracle, sol.x) else invalid("nonzero-direction")
    if isinstance(sol, TwoZeroPoints):
        return check_ov1(oracle, sol.s, sol.x, sol.y, any_slice=any_slice)
    if isinstance(sol, AdjacentUpDown):
        return check_ov2(oracle, sol.s, sol.x, sol.y, sol.i, any_slice=any_slice)
    if isinstance(sol, BoundaryEscape):
        return check_ov3(oracle, sol.s, sol.x, sol.i, any_slice=any_slice)
    return invalid("unknown-solution-type")
