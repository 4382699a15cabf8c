"""Exact scalars, row reduction and canonical affine subspaces."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest

from arrdmod import (
    ValidationError,
    as_rational,
    format_rational,
    intersect,
    is_integral,
    matrix_rank,
    parse_rational,
    rref,
)

F = Fraction


class TestRationals:
    def test_parse_forms(self):
        assert parse_rational("3") == 3
        assert parse_rational("-4/6") == F(-2, 3)
        assert parse_rational(" 7/2 ") == F(7, 2)
        assert parse_rational("3/-2") == F(-3, 2)

    @pytest.mark.parametrize("bad", ["", "1.5", "a", "1/0", "1/2/3", "2 /3"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValidationError):
            parse_rational(bad)

    def test_floats_rejected_everywhere(self):
        with pytest.raises(ValidationError):
            as_rational(0.5)
        with pytest.raises(ValidationError):
            as_rational(True)

    def test_format_lowest_terms(self):
        assert format_rational(F(4, 2)) == "2"
        assert format_rational(F(-3, 9)) == "-1/3"
        assert is_integral(F(4, 2)) and not is_integral(F(1, 2))


class TestRref:
    def test_identity(self):
        reduced, rank, pivots = rref([[1, 0], [0, 1]])
        assert reduced == ((1, 0), (0, 1)) and rank == 2 and pivots == (0, 1)

    def test_proportional_rows(self):
        reduced, rank, pivots = rref([[1, 2], [2, 4]])
        assert reduced == ((1, 2), (0, 0)) and rank == 1 and pivots == (0,)

    def test_hand_elimination(self):
        # x + y + z = 0 and x - y = 0 solve to x = y = -z/2
        reduced, rank, pivots = rref([[1, 1, 1], [1, -1, 0]])
        assert reduced == ((1, 0, F(1, 2)), (0, 1, F(1, 2)))
        assert rank == 2 and pivots == (0, 1)
        # substitute the general solution back into the original rows
        z = F(7)
        x = y = -z / 2
        assert x + y + z == 0 and x - y == 0

    def test_idempotent(self, rng):
        for _ in range(60):
            rows = [
                [F(rng.randint(-9, 9), rng.choice([1, 2, 3])) for _ in range(4)]
                for _ in range(rng.randint(0, 5))
            ]
            once = rref(rows)
            assert rref(once.matrix).matrix == once.matrix

    def test_rank_against_determinant_oracle(self, rng):
        # rank = size of the largest row subset with some nonzero maximal minor
        def det(mat):
            if len(mat) == 1:
                return mat[0][0]
            return sum(
                (-1) ** i * mat[0][i] * det([r[:i] + r[i + 1 :] for r in mat[1:]])
                for i in range(len(mat))
            )

        def independent(rows):
            p, cols = len(rows), len(rows[0])
            return p <= cols and any(
                det([[F(row[c]) for c in sub] for row in rows]) != 0
                for sub in combinations(range(cols), p)
            )

        for _ in range(40):
            rows = [
                [rng.randint(-4, 4) for _ in range(3)] for _ in range(rng.randint(1, 5))
            ]
            largest = 0
            for p in range(1, len(rows) + 1):
                if any(independent(list(sub)) for sub in combinations(rows, p)):
                    largest = p
            assert matrix_rank(rows) == largest

    def test_shape_errors(self):
        with pytest.raises(ValidationError):
            rref([[1, 2], [1]])
        with pytest.raises(ValidationError):
            rref([[], []])
        assert rref([]).rank == 0


class TestIntersect:
    def test_point(self):
        s = intersect([((1, 0), 0), ((0, 1), 0)], 2)
        assert not s.is_empty and s.dim == 0 and s.contains_point((0, 0))

    def test_parallel_empty(self):
        assert intersect([((1, 0), 0), ((1, 0), 1)], 2).is_empty

    def test_triangle_has_no_triple_point(self):
        assert intersect([((1, 0), 0), ((0, 1), 0), ((1, 1), 1)], 2).is_empty

    def test_empty_input_is_ambient(self):
        s = intersect([], 3)
        assert s.dim == 3 and s.canonical_system == ()

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError):
            intersect([((1, 0, 0), 0)], 2)

    def test_incremental_matches_joint(self, rng):
        # intersect(S1 u S2) == intersect(S1) refined by S2
        for _ in range(50):
            n = rng.choice([2, 3, 4])
            eqs = [
                ([rng.randint(-3, 3) for _ in range(n)], rng.randint(-2, 2))
                for _ in range(rng.randint(0, 4))
            ]
            split = rng.randint(0, len(eqs))
            first = intersect(eqs[:split], n)
            if first.is_empty:
                continue
            rest = [[*normal, c] for normal, c in eqs[split:]]
            assert first.intersect_rows(rest) == intersect(eqs, n)

    def test_canonical_equality_is_set_equality(self):
        a = intersect([((2, 0), 0), ((0, 3), 0)], 2)
        b = intersect([((0, 1), 0), ((5, 5), 0)], 2)
        assert a == b and hash(a) == hash(b)

    def test_annihilates(self):
        axis = intersect([((1, 0, 0), 0), ((0, 1, 0), 0)], 3)
        assert axis.annihilates((1, 0, 0), 0)
        assert axis.annihilates((2, -7, 0), 0)
        assert not axis.annihilates((1, 0, 0), 1)
        assert not axis.annihilates((0, 0, 1), 0)

    def test_base_point_and_directions(self):
        line = intersect([((1, 1), -1)], 2)  # x + y = 1
        p = line.base_point()
        assert line.contains_point(p)
        (w,) = line.direction_basis()
        assert line.contains_point([pi + wi for pi, wi in zip(p, w)])
