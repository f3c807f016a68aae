"""Finite grid lattices, slices, and their orderings.

The lattice is the k-dimensional grid {1..n}^k under the coordinatewise
partial order.  Two different orders on points appear throughout the
package and must not be confused:

* canonical order -- the table/file layout order.  A point sits at index
  ``sum_i (x_i - 1) * n^(i - 1)``, so dimension 1 varies fastest.  Every
  enumeration (``LatticeSpec.points``, ``slice_points``) yields this order.
* value order -- plain tuple comparison.  Used for map keys, sorted
  output, and deterministic first-witness selection.  It is a total order
  and is unrelated to the lattice order ``leq``.

Coordinates and dimension indices are 1-based everywhere, including in
serialized files, so values can be compared against written definitions
without off-by-one bookkeeping.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import product
from operator import index as _as_int
from typing import Iterator

Point = tuple[int, ...]

FREE = None  # marker for an unconstrained slice entry


class LatticeError(ValueError):
    """A point, slice, or index does not fit the lattice it is used with."""


class SliceDomainError(LatticeError):
    """A restricted function was evaluated outside its slice."""


@dataclass(frozen=True)
class LatticeSpec:
    """Side length ``n`` and dimension count ``k`` of the grid {1..n}^k."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise LatticeError(
                f"side length and dimension count must be >= 1, got n={self.n}, k={self.k}"
            )
        size = 1
        for _ in range(self.k):
            size *= self.n
            # Table indices must stay within the native index range.
            if size > sys.maxsize:
                raise LatticeError(
                    f"lattice size {self.n}^{self.k} exceeds the platform index range"
                )

    @property
    def size(self) -> int:
        return self.n**self.k

    @property
    def bottom(self) -> Point:
        return (1,) * self.k

    @property
    def top(self) -> Point:
        return (self.n,) * self.k

    def contains(self, x: Point) -> bool:
        return len(x) == self.k and all(
            isinstance(c, int) and 1 <= c <= self.n for c in x
        )

    def validate_point(self, x: Point) -> None:
        if len(x) != self.k:
            raise LatticeError(f"point {x!r} has {len(x)} coordinates, expected {self.k}")
        for d, c in enumerate(x, start=1):
            if not 1 <= c <= self.n:
                raise LatticeError(
                    f"coordinate {d} of point {x!r} is outside [1, {self.n}]"
                )

    def index(self, x: Point) -> int:
        """Canonical table index of ``x``."""
        self.validate_point(x)
        idx = 0
        for c in reversed(x):
            idx = idx * self.n + (c - 1)
        return idx

    def point_at(self, idx: int) -> Point:
        if not 0 <= idx < self.size:
            raise LatticeError(f"index {idx} outside [0, {self.size})")
        coords = []
        for _ in range(self.k):
            coords.append(1 + idx % self.n)
            idx //= self.n
        return tuple(coords)

    def points(self) -> Iterator[Point]:
        """All points in canonical order (dimension 1 varies fastest)."""
        for idx in range(self.size):
            yield self.point_at(idx)

    def contains_slice(self, s: "Slice") -> bool:
        return s.k == self.k and all(
            e is FREE or 1 <= e <= self.n for e in s.entries
        )

    def validate_slice(self, s: "Slice") -> None:
        if s.k != self.k:
            raise LatticeError(f"slice {s} has {s.k} entries, expected {self.k}")
        for d, e in enumerate(s.entries, start=1):
            if e is not FREE and not 1 <= e <= self.n:
                raise LatticeError(
                    f"slice fixes dimension {d} to {e}, outside [1, {self.n}]"
                )

    def slices(self) -> Iterator["Slice"]:
        """All (n+1)^k slices, ordered by slice sort key (free entries first)."""
        for entries in product((FREE, *range(1, self.n + 1)), repeat=self.k):
            yield Slice(entries)


@dataclass(frozen=True)
class Slice:
    """Per-dimension constraints: an integer pins the dimension, FREE leaves it open."""

    entries: tuple[int | None, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        for e in self.entries:
            if e is not FREE and (not isinstance(e, int) or e < 1):
                raise LatticeError(f"slice entry {e!r} must be FREE or a positive integer")
        if not self.entries:
            raise LatticeError("slice must have at least one entry")

    @classmethod
    def of(cls, *entries: int | None) -> "Slice":
        return cls(tuple(_as_int(e) if e is not FREE else FREE for e in entries))

    @classmethod
    def full(cls, k: int) -> "Slice":
        """The all-free slice, whose sublattice is the whole grid."""
        return cls((FREE,) * k)

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def num_free(self) -> int:
        return sum(1 for e in self.entries if e is FREE)

    def free_dims(self) -> tuple[int, ...]:
        """1-based indices of the free dimensions, ascending."""
        return tuple(d for d, e in enumerate(self.entries, start=1) if e is FREE)

    def fixed_dims(self) -> tuple[int, ...]:
        return tuple(d for d, e in enumerate(self.entries, start=1) if e is not FREE)

    def contains(self, x: Point) -> bool:
        return len(x) == self.k and all(
            e is FREE or e == c for e, c in zip(self.entries, x)
        )

    def sort_key(self) -> tuple[int, ...]:
        """Deterministic total-order key; FREE sorts before every fixed value."""
        return tuple(0 if e is FREE else e for e in self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join("*" if e is FREE else str(e) for e in self.entries) + ")"


def leq(x: Point, y: Point) -> bool:
    """Coordinatewise <= (the lattice partial order)."""
    if len(x) != len(y):
        raise LatticeError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return all(a <= b for a, b in zip(x, y))


def slice_points(spec: LatticeSpec, s: Slice) -> Iterator[Point]:
    """Points of the sliced grid, in canonical order of the free dimensions."""
    spec.validate_slice(s)
    free = [d - 1 for d in s.free_dims()]
    coords = list(s.entries)
    n = spec.n
    for t in range(n ** len(free)):
        q = t
        for pos in free:
            coords[pos] = 1 + q % n
            q //= n
        yield tuple(coords)


def is_i_slice(s: Slice, i: int) -> bool:
    """True iff every dimension up to and including ``i`` is free in ``s``."""
    if not 1 <= i <= s.k:
        raise LatticeError(f"dimension index {i} outside [1, {s.k}]")
    return all(e is FREE for e in s.entries[:i])
