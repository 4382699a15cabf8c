"""Arrangement data model: canonical hyperplanes, classification, reduction.

A hyperplane is the zero set of a degree-one functional ``a.x + c``; the
stored form is canonical (coprime integer coefficients, first nonzero normal
entry positive), so equal hyperplanes compare equal no matter how they were
given.  Classification follows the usual trichotomy: general position implies
normal crossing; central means a common point exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from arrdmod import _kernel
from arrdmod.errors import ResourceLimitError, ValidationError
from arrdmod.exactla import AffineSubspace, as_rational

DEFAULT_SUBSET_LIMIT = 20


@dataclass(frozen=True)
class Hyperplane:
    """Canonical form of the affine hyperplane ``normal.x + constant = 0``."""

    normal: tuple[int, ...]
    constant: int

    @classmethod
    def from_coefficients(cls, normal: Sequence, constant) -> "Hyperplane":
        """Normalize arbitrary rational coefficients to canonical form."""
        a = [as_rational(x) for x in normal]
        c = as_rational(constant)
        if all(x == 0 for x in a):
            raise ValidationError("hyperplane normal must be nonzero")
        scale = lcm(*(x.denominator for x in a), c.denominator)
        ints = [int(x * scale) for x in a] + [int(c * scale)]
        g = gcd(*ints)
        ints = [x // g for x in ints]
        lead = next(x for x in ints[:-1] if x != 0)
        if lead < 0:
            ints = [-x for x in ints]
        return cls(tuple(ints[:-1]), ints[-1])

    @property
    def dim(self) -> int:
        return len(self.normal)

    def equation_row(self) -> tuple[int, ...]:
        """Augmented row ``(a, c)`` for the exactla solvers."""
        return (*self.normal, self.constant)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.dim:
            raise ValidationError("point/hyperplane dimension mismatch")
        return sum(
            (a * as_rational(x) for a, x in zip(self.normal, point)),
            Fraction(self.constant),
        )

    def contains(self, subspace: AffineSubspace) -> bool:
        return subspace.annihilates(self.normal, self.constant)

    def __str__(self) -> str:
        terms = []
        for j, a in enumerate(self.normal):
            if a == 0:
                continue
            coef = "" if a == 1 else "-" if a == -1 else f"{a}*"
            term = f"{coef}x{j + 1}"
            terms.append(term if not terms or a < 0 else f"+{term}")
        if self.constant:
            c = self.constant
            terms.append(f"+{c}" if c > 0 else str(c))
        return "".join(terms)


@dataclass(frozen=True)
class Arrangement:
    """A finite list of pairwise distinct hyperplanes in C^dim.

    Order matters: the i-th hyperplane (1-based in reports) carries the i-th
    exponent downstream.  Repeated hyperplanes are rejected rather than
    merged, since one exponent is attached per distinct functional.
    """

    dim: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValidationError("ambient dimension must be >= 1")
        seen = {}
        for pos, h in enumerate(self.hyperplanes):
            if not isinstance(h, Hyperplane):
                raise ValidationError("hyperplanes must be Hyperplane instances")
            if h.dim != self.dim:
                raise ValidationError(
                    f"hyperplane {pos + 1} lives in C^{h.dim}, arrangement in C^{self.dim}"
                )
            if h in seen:
                raise ValidationError(
                    f"hyperplanes {seen[h] + 1} and {pos + 1} coincide ({h})"
                )
            seen[h] = pos

    @classmethod
    def from_coefficients(
        cls, dim: int, rows: Iterable[tuple[Sequence, object]]
    ) -> "Arrangement":
        """Build from ``(normal, constant)`` pairs in any rational form."""
        return cls(dim, tuple(Hyperplane.from_coefficients(a, c) for a, c in rows))

    @property
    def m(self) -> int:
        return len(self.hyperplanes)

    def equation_rows(self, indices: Iterable[int] | None = None) -> list[tuple[int, ...]]:
        """Augmented rows for the 1-based ``indices`` (default: all)."""
        if indices is None:
            return [h.equation_row() for h in self.hyperplanes]
        rows = []
        for i in indices:
            if not 1 <= i <= self.m:
                raise ValidationError(f"hyperplane index {i} outside 1..{self.m}")
            rows.append(self.hyperplanes[i - 1].equation_row())
        return rows

    def common_intersection(self) -> AffineSubspace:
        return AffineSubspace.from_rows(self.equation_rows(), self.dim)


@dataclass(frozen=True)
class Classification:
    general_position: bool
    normal_crossing: bool
    central: bool
    common_intersection: AffineSubspace


def classify(arr: Arrangement, subset_limit: int = DEFAULT_SUBSET_LIMIT) -> Classification:
    """Classify an arrangement by explicit subset enumeration.

    General position: every p <= n of the hyperplanes meet in dimension
    n - p, and every n+1 of them miss each other.  Normal crossing: every
    subset with a nonempty intersection has linearly independent normals
    (a failure always shows up on some subset of size <= n+1, so the scan
    stops there).
    """
    n, m = arr.dim, arr.m
    if m > subset_limit:
        raise ResourceLimitError(
            f"classification scans subsets; m={m} exceeds the limit {subset_limit}"
        )
    rows = arr.equation_rows()
    general = True
    crossing = True
    for p in range(1, min(m, n + 1) + 1):
        for subset in combinations(range(m), p):
            pivots = _kernel.pivot_columns([list(rows[i]) for i in subset])
            nonempty = n not in pivots
            coeff_rank = len(pivots) - (0 if nonempty else 1)
            if p <= n:
                if not (nonempty and coeff_rank == p):
                    general = False
                if nonempty and coeff_rank < p:
                    crossing = False
            else:
                if nonempty:
                    general = False
                    crossing = False
        if not (general or crossing):
            break
    common = arr.common_intersection()
    return Classification(general, crossing, not common.is_empty, common)


@dataclass(frozen=True)
class EssentializationSplit:
    """How the ambient space was split during reduction.

    The reduced arrangement lives on the coordinates listed in
    ``pivot_coords`` (0-based), embedded through the base point: a reduced
    point t maps to ``base_point + sum(t_k * e_{pivot_k})``.
    """

    base_point: tuple[Fraction, ...]
    pivot_coords: tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return all(x == 0 for x in self.base_point) and self.pivot_coords == tuple(
            range(len(self.base_point))
        )


def essentialize(arr: Arrangement) -> tuple[Arrangement, EssentializationSplit]:
    """Restrict to a complement of the common intersection.

    When the intersection of all hyperplanes is empty or a point (or the
    arrangement is empty), the arrangement is already essential and comes
    back unchanged with an identity split.  Otherwise each functional is
    restricted to the coordinate complement spanned by the pivot columns of
    the normals, translated so the common intersection meets it in a single
    point.  Factor counts are preserved for every exponent vector.
    """
    n = arr.dim
    identity = EssentializationSplit(tuple([Fraction(0)] * n), tuple(range(n)))
    if arr.m == 0:
        return arr, identity
    common = arr.common_intersection()
    if common.is_empty or common.dim == 0:
        return arr, identity
    pivots = common.pivots
    base = common.base_point()
    reduced_rows = []
    for h in arr.hyperplanes:
        normal = tuple(Fraction(h.normal[p]) for p in pivots)
        constant = h.evaluate(base)
        reduced_rows.append((normal, constant))
    reduced = Arrangement.from_coefficients(len(pivots), reduced_rows)
    return reduced, EssentializationSplit(base, pivots)
