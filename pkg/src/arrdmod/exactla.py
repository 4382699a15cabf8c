"""Exact rational linear algebra: row reduction and canonical affine subspaces.

All scalars are ``fractions.Fraction`` (arbitrary-precision, always in lowest
terms, positive denominator); floats are rejected everywhere so that
integrality questions stay decidable.  An affine subspace of C^n is stored as
the unique reduced row-echelon form of its defining system, which makes
set-equality of subspaces a syntactic comparison.

Equation convention: a row ``(a_1, ..., a_n, c)`` encodes ``a.x + c = 0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

from arrdmod import _kernel
from arrdmod.errors import ValidationError

Rational = Fraction

_EXACT_TYPES = (int, Fraction)


def as_rational(value) -> Fraction:
    """Coerce ``value`` (int, Fraction or rational string) to Fraction.

    Floats are refused: they would silently break exactness.
    """
    if isinstance(value, bool) or not isinstance(value, (*_EXACT_TYPES, str)):
        raise ValidationError(f"not an exact rational: {value!r}")
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


_RATIONAL_RE = re.compile(r"[+-]?\d+(/[+-]?\d+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` with integer p, q and q != 0."""
    body = text.strip()
    if not _RATIONAL_RE.match(body):
        raise ValidationError(f"malformed rational {text!r}")
    num, _, den = body.partition("/")
    try:
        return Fraction(int(num), int(den)) if den else Fraction(int(num))
    except ZeroDivisionError as exc:
        raise ValidationError(f"malformed rational {text!r} (zero denominator)") from exc


def format_rational(value: Fraction | int) -> str:
    """Render in lowest terms: ``"p"`` when integral, else ``"p/q"``."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_integral(value: Fraction | int) -> bool:
    return Fraction(value).denominator == 1


def _int_rows(matrix: Sequence[Sequence]) -> list[list[int]]:
    """Clear denominators row-wise (row scaling preserves the RREF)."""
    out = []
    for row in matrix:
        if all(type(x) is int for x in row):
            out.append(list(row))
            continue
        vals = [as_rational(x) for x in row]
        scale = lcm(*(v.denominator for v in vals)) if vals else 1
        out.append([int(v * scale) for v in vals])
    return out


def _int_functional(normal: Sequence, constant) -> tuple[list[int], int]:
    """Scale an affine functional to integer coefficients."""
    if all(type(x) is int for x in normal) and type(constant) is int:
        return list(normal), constant
    a = [as_rational(x) for x in normal]
    c = as_rational(constant)
    scale = lcm(*(x.denominator for x in a), c.denominator)
    return [int(x * scale) for x in a], int(c * scale)


class RrefResult(NamedTuple):
    matrix: tuple[tuple[Fraction, ...], ...]
    rank: int
    pivots: tuple[int, ...]


def rref(matrix: Sequence[Sequence]) -> RrefResult:
    """Unique reduced row-echelon form of a rational matrix.

    Accepts any rectangular array of ints/Fractions with at least one column;
    a matrix with zero rows is fine and has rank 0.
    """
    rows = _int_rows(matrix)
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise ValidationError("ragged matrix")
    if rows and widths == {0}:
        raise ValidationError("matrix must have at least one column")
    mat, denom, pivots = _kernel.rref_scaled(rows)
    reduced = tuple(tuple(Fraction(x, denom) for x in row) for row in mat)
    return RrefResult(reduced, len(pivots), tuple(pivots))


def matrix_rank(matrix: Sequence[Sequence]) -> int:
    """Rank over Q, by forward fraction-free elimination."""
    rows = _int_rows(matrix)
    if len({len(r) for r in rows}) > 1:
        raise ValidationError("ragged matrix")
    return len(_kernel.pivot_columns(rows))


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class AffineSubspace:
    """An affine subspace of C^n in canonical (RREF) coordinates.

    ``canonical_system`` is the reduced row-echelon form of the defining
    augmented system, with zero rows dropped; it is ``None`` exactly for the
    empty set.  Two nonempty subspaces are equal as point sets iff their
    canonical systems are identical, so instances hash and compare by value.
    """

    ambient_dim: int
    canonical_system: tuple[tuple[Fraction, ...], ...] | None
    pivots: tuple[int, ...] = ()

    @classmethod
    def ambient(cls, ambient_dim: int) -> "AffineSubspace":
        """The whole space C^n (empty defining system)."""
        return cls(ambient_dim, ())

    @classmethod
    def empty(cls, ambient_dim: int) -> "AffineSubspace":
        return cls(ambient_dim, None)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ambient_dim: int) -> "AffineSubspace":
        """Solution set of augmented rows ``(a, c)`` meaning ``a.x + c = 0``."""
        if not rows:
            return cls.ambient(ambient_dim)
        for row in rows:
            if len(row) != ambient_dim + 1:
                raise ValidationError(
                    f"equation of length {len(row)} in ambient dimension {ambient_dim}"
                )
        return cls._from_int_rows(_int_rows(rows), ambient_dim)

    @classmethod
    def _from_int_rows(cls, rows: list[list[int]], ambient_dim: int) -> "AffineSubspace":
        mat, denom, pivots = _kernel.rref_scaled(rows)
        if ambient_dim in pivots:
            # A pivot in the constant column means the system forces 0 = 1.
            return cls.empty(ambient_dim)
        rank = len(pivots)
        canonical = tuple(
            tuple(Fraction(x, denom) for x in row) for row in mat[:rank]
        )
        sub = cls(ambient_dim, canonical, tuple(pivots))
        # the kernel rows are integer multiples of the canonical rows; keep
        # them (gcd-reduced) so later intersections skip rational clearing
        ints = []
        for row in mat[:rank]:
            g = gcd(*row)
            ints.append(tuple(x // g for x in row))
        sub.__dict__["_int_system"] = tuple(ints)
        return sub

    @property
    def is_empty(self) -> bool:
        return self.canonical_system is None

    @property
    def dim(self):
        """Dimension, or None for the empty set."""
        if self.is_empty:
            return None
        return self.ambient_dim - len(self.canonical_system)

    @property
    def codim(self):
        if self.is_empty:
            return None
        return len(self.canonical_system)

    def __repr__(self):
        if self.is_empty:
            return f"AffineSubspace.empty({self.ambient_dim})"
        return (
            f"AffineSubspace(dim={self.dim} in C^{self.ambient_dim}, "
            f"{len(self.canonical_system)} equations)"
        )

    @cached_property
    def _int_system(self) -> tuple[tuple[int, ...], ...]:
        # Integer multiples of the canonical rows (seeded by _from_int_rows;
        # recomputed only for hand-built instances).
        return tuple(tuple(row) for row in _int_rows(self.canonical_system))

    @cached_property
    def _point(self) -> tuple[Fraction, ...]:
        # Deterministic base point: free coordinates 0, pivots forced.
        point = [Fraction(0)] * self.ambient_dim
        for pivot, row in zip(self.pivots, self.canonical_system):
            point[pivot] = -row[self.ambient_dim]
        return tuple(point)

    @cached_property
    def _directions(self) -> tuple[tuple[Fraction, ...], ...]:
        # One basis vector of the translation space per free coordinate.
        free = [j for j in range(self.ambient_dim) if j not in self.pivots]
        basis = []
        for f in free:
            vec = [Fraction(0)] * self.ambient_dim
            vec[f] = Fraction(1)
            for pivot, row in zip(self.pivots, self.canonical_system):
                vec[pivot] = -row[f]
            basis.append(tuple(vec))
        return tuple(basis)

    @cached_property
    def _int_point(self) -> tuple[tuple[int, ...], int]:
        # Base point as (numerators, positive common denominator).
        den = lcm(*(x.denominator for x in self._point)) if self._point else 1
        return tuple(int(x * den) for x in self._point), den

    @cached_property
    def _int_directions(self) -> tuple[tuple[int, ...], ...]:
        # Integer rescalings of the direction basis (spans are unchanged).
        out = []
        for vec in self._directions:
            den = lcm(*(x.denominator for x in vec))
            out.append(tuple(int(x * den) for x in vec))
        return tuple(out)

    def base_point(self) -> tuple[Fraction, ...]:
        """The canonical point (free coordinates set to 0)."""
        if self.is_empty:
            raise ValidationError("empty subspace has no point")
        return self._point

    def direction_basis(self) -> tuple[tuple[Fraction, ...], ...]:
        """Basis of the translation vector space (empty for a point)."""
        if self.is_empty:
            raise ValidationError("empty subspace has no directions")
        return self._directions

    def contains_point(self, point: Sequence) -> bool:
        if self.is_empty:
            return False
        p = [as_rational(x) for x in point]
        if len(p) != self.ambient_dim:
            raise ValidationError("point/ambient dimension mismatch")
        return all(
            _dot(row[: self.ambient_dim], p) + row[self.ambient_dim] == 0
            for row in self.canonical_system
        )

    def annihilates(self, normal: Sequence, constant) -> bool:
        """True iff the affine functional ``normal.x + constant`` vanishes
        identically on this subspace (empty subspace: vacuously true)."""
        if self.is_empty:
            return True
        a, c = _int_functional(normal, constant)
        if len(a) != self.ambient_dim:
            raise ValidationError("functional/ambient dimension mismatch")
        p_num, p_den = self._int_point
        if sum(x * y for x, y in zip(a, p_num)) + c * p_den != 0:
            return False
        return all(
            sum(x * y for x, y in zip(a, w)) == 0 for w in self._int_directions
        )

    def intersect_rows(self, rows: Sequence[Sequence]) -> "AffineSubspace":
        """Intersect with the solution set of extra augmented rows."""
        if self.is_empty:
            return self
        for row in rows:
            if len(row) != self.ambient_dim + 1:
                raise ValidationError(
                    f"equation of length {len(row)} in ambient dimension "
                    f"{self.ambient_dim}"
                )
        return AffineSubspace._from_int_rows(
            [*map(list, self._int_system), *_int_rows(rows)], self.ambient_dim
        )


def intersect(
    equations: Iterable[tuple[Sequence, object]], ambient_dim: int
) -> AffineSubspace:
    """Common solution set of hyperplane equations ``(normal, constant)``.

    An empty list of equations yields the ambient space.
    """
    rows = []
    for normal, constant in equations:
        normal = list(normal)
        if len(normal) != ambient_dim:
            raise ValidationError(
                f"normal of length {len(normal)} in ambient dimension {ambient_dim}"
            )
        rows.append([*normal, constant])
    return AffineSubspace.from_rows(rows, ambient_dim)
