"""Total functions on a grid lattice, slice restrictions, and the
fixed-point / monotonicity / slice-uniqueness witnesses with their verifiers.

Witness labels follow the file format: UT is a fixed point, UTV1 a
monotonicity breach, UTV2 an incomparable up/down pair inside a slice.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import index as _as_int
from typing import Callable, Union

from .lattice import (
    FREE,
    LatticeError,
    LatticeSpec,
    Point,
    Slice,
    SliceDomainError,
    leq,
)
from .verdict import Verdict, invalid, valid


class TarskiFunction:
    """A total map on a grid lattice, backed by a table or a callback.

    Both backings evaluate through ``f(x)`` and are interchangeable
    everywhere in the package; callbacks must be pure (same input, same
    output) and safe for concurrent calls.
    """

    __slots__ = ("spec", "metadata", "_table", "_fn")

    def __init__(self, spec, *, table=None, fn=None, metadata=None):
        if (table is None) == (fn is None):
            raise ValueError("exactly one of table= or fn= is required")
        self.spec = spec
        self.metadata = metadata
        self._table = table
        self._fn = fn

    @classmethod
    def from_table(cls, spec: LatticeSpec, values, metadata=None) -> "TarskiFunction":
        """Build from n^k output points listed in canonical index order."""
        table = tuple(tuple(_as_int(c) for c in v) for v in values)
        if len(table) != spec.size:
            raise LatticeError(
                f"table has {len(table)} entries, expected n^k = {spec.size}"
            )
        for v in table:
            spec.validate_point(v)
        return cls(spec, table=table, metadata=metadata)

    @classmethod
    def from_callable(
        cls, spec: LatticeSpec, fn: Callable[[Point], Point], metadata=None
    ) -> "TarskiFunction":
        return cls(spec, fn=fn, metadata=metadata)

    @property
    def is_table(self) -> bool:
        return self._table is not None

    def __call__(self, x: Point) -> Point:
        self.spec.validate_point(x)
        if self._table is not None:
            return self._table[self.spec.index(x)]
        y = tuple(self._fn(x))
        self.spec.validate_point(y)
        return y

    def table(self) -> tuple[Point, ...]:
        """The full output table in canonical order (evaluates a callback backing)."""
        if self._table is not None:
            return self._table
        return tuple(self(x) for x in self.spec.points())

    def materialize(self) -> "TarskiFunction":
        """A table-backed copy; the identity on already table-backed functions."""
        if self.is_table:
            return self
        return TarskiFunction.from_table(self.spec, self.table(), metadata=self.metadata)

    def restrict(self, s: Slice) -> "RestrictedFunction":
        return restrict(self, s)


@dataclass(frozen=True)
class RestrictedFunction:
    """A function projected onto a slice: free coordinates follow the base
    function, fixed coordinates are copied from the slice."""

    base: TarskiFunction
    s: Slice

    @property
    def spec(self) -> LatticeSpec:
        return self.base.spec

    def __call__(self, x: Point) -> Point:
        self.spec.validate_point(x)
        if not self.s.contains(x):
            raise SliceDomainError(f"point {x} is not in slice {self.s}")
        y = self.base(x)
        return tuple(b if e is FREE else e for e, b in zip(self.s.entries, y))


Evaluable = Union[TarskiFunction, RestrictedFunction]


def restrict(f: TarskiFunction, s: Slice) -> RestrictedFunction:
    """Project ``f`` onto slice ``s``; evaluation outside the slice is rejected."""
    f.spec.validate_slice(s)
    return RestrictedFunction(f, s)


@dataclass(frozen=True)
class PointClassification:
    """Up/Down set membership of a point: in_up means x <= g(x), in_down
    means g(x) <= x; both together mean the point is fixed."""

    in_up: bool
    in_down: bool

    @property
    def is_fixed(self) -> bool:
        return self.in_up and self.in_down


def classify(g: Evaluable, x: Point) -> PointClassification:
    y = g(x)
    return PointClassification(in_up=leq(x, y), in_down=leq(y, x))


def check_fixed_point(g: Evaluable, x: Point) -> bool:
    return g(x) == x


@dataclass(frozen=True)
class FixedPoint:
    """UT: a point with f(x) = x."""

    x: Point


@dataclass(frozen=True)
class MonotonicityViolation:
    """UTV1: x <= y but f(x) is not <= f(y)."""

    x: Point
    y: Point


@dataclass(frozen=True)
class SliceUniquenessViolation:
    """UTV2: inside slice s, x is in the up set, y in the down set, and x is
    not <= y -- a succinct witness that the slice restriction has more than
    one fixed point."""

    s: Slice
    x: Point
    y: Point


SutSolution = Union[FixedPoint, MonotonicityViolation, SliceUniquenessViolation]


def check_monotonicity_pair(g: Evaluable, x: Point, y: Point) -> MonotonicityViolation | None:
    """The witness (x, y) if it exhibits a monotonicity breach of ``g``, else None."""
    if leq(x, y) and not leq(g(x), g(y)):
        return MonotonicityViolation(x, y)
    return None


def check_slice_uniqueness_violation(
    f: TarskiFunction, s: Slice, x: Point, y: Point
) -> SliceUniquenessViolation | None:
    """The witness (s, x, y) if valid; raises SliceDomainError when x or y
    falls outside the slice."""
    fs = restrict(f, s)
    cx = classify(fs, x)
    cy = classify(fs, y)
    if not leq(x, y) and cx.in_up and cy.in_down:
        return SliceUniquenessViolation(s, x, y)
    return None


def verify_sut_solution(f: TarskiFunction, sol: SutSolution) -> Verdict:
    """Validate a claimed solution against its defining clauses.

    Failed clauses are reported with a reason code rather than an exception
    so near-miss witnesses can be told apart.
    """
    spec = f.spec
    if isinstance(sol, FixedPoint):
        if not spec.contains(sol.x):
            return invalid("x-not-in-lattice")
        return valid() if check_fixed_point(f, sol.x) else invalid("not-fixed")

    if isinstance(sol, MonotonicityViolation):
        if not spec.contains(sol.x):
            return invalid("x-not-in-lattice")
        if not spec.contains(sol.y):
            return invalid("y-not-in-lattice")
        if not leq(sol.x, sol.y):
            return invalid("pair-not-ordered")
        if leq(f(sol.x), f(sol.y)):
            return invalid("images-ordered")
        return valid()

    if isinstance(sol, SliceUniquenessViolation):
        if not spec.contains_slice(sol.s):
            return invalid("malformed-slice")
        if not spec.contains(sol.x):
            return invalid("x-not-in-lattice")
        if not spec.contains(sol.y):
            return invalid("y-not-in-lattice")
        if not sol.s.contains(sol.x):
            return invalid("x-not-in-slice")
        if not sol.s.contains(sol.y):
            return invalid("y-not-in-slice")
        if leq(sol.x, sol.y):
            return invalid("pair-comparable")
        fs = restrict(f, sol.s)
        if not classify(fs, sol.x).in_up:
            return invalid("x-not-in-up")
        if not classify(fs, sol.y).in_down:
            return invalid("y-not-in-down")
        return valid()

    return invalid("unknown-solution-type")
