"""
Tests for exact fields, matrices and subspaces.

Run with: pytest evaluation/test_exactla.py -v
"""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))


def vec(f, *values):
    return tuple(f(v) for v in values)


# ============================================================================
# FIELDS
# ============================================================================

class TestFields:
    """Scalar parsing, formatting and admissible characteristics."""

    def test_prime_field_parses_ratio(self, gf5):
        """1/3 is 2 in GF(5)."""
        x = gf5.parse("1/3")
        assert x == gf5(2)
        assert gf5.format(x) == "2"

    def test_rational_lowest_terms(self, qq):
        assert qq.format(qq.parse("6/4")) == "3/2"
        assert qq.format(qq.parse("-4/2")) == "-2"

    def test_residues_printed_non_negative(self, gf7):
        assert gf7.format(gf7(-1)) == "6"

    @pytest.mark.parametrize("p", [2, 3, 4, 9])
    def test_small_or_composite_characteristic_rejected(self, p):
        from exactla import Field

        with pytest.raises(ValueError):
            Field.prime(p)

    def test_descriptors(self):
        from exactla import Field

        assert Field.from_descriptor("rational") == Field.rational()
        assert Field.from_descriptor("p:7").characteristic == 7
        assert Field.prime(11).descriptor == "p:11"
        with pytest.raises(ValueError):
            Field.from_descriptor("complex")

    def test_non_invertible_denominator(self, gf5):
        with pytest.raises(ValueError):
            gf5.parse("1/10")

    def test_garbage_scalar(self, qq):
        with pytest.raises(ValueError):
            qq.parse("one half")


# ============================================================================
# MATRICES
# ============================================================================

class TestMatrices:
    """Rank, kernels and the canonical solution."""

    def test_rank_depends_on_characteristic(self, qq, gf5):
        from exactla import Matrix, rank

        rows = [[1, 1], [1, -4]]
        assert rank(Matrix.from_rows(qq, rows)) == 2
        assert rank(Matrix.from_rows(gf5, rows)) == 1

    def test_kernel_basis_free_variable_normalized(self, qq):
        from exactla import Matrix, kernel_basis

        m = Matrix.from_rows(qq, [[1, 2, 3], [2, 4, 6]])
        kernel = kernel_basis(m)
        assert len(kernel) == 2
        assert kernel[0] == vec(qq, -2, 1, 0)
        assert kernel[1] == vec(qq, -3, 0, 1)
        for v in kernel:
            assert not any(m.apply(v))

    def test_solve_sets_free_variables_to_zero(self, qq):
        from exactla import Matrix, solve

        a = Matrix.from_rows(qq, [[1, 1, 0], [0, 0, 1]])
        x = solve(a, vec(qq, 3, 5))
        assert x == vec(qq, 3, 0, 5)

    def test_solve_inconsistent(self, qq):
        from errors import NoSolution
        from exactla import Matrix, solve

        a = Matrix.from_rows(qq, [[1, 1], [2, 2]])
        with pytest.raises(NoSolution):
            solve(a, vec(qq, 1, 3))

    def test_inverse_roundtrip(self, gf7):
        from exactla import Matrix, inverse

        m = Matrix.from_rows(gf7, [[2, 1], [1, 1]])
        assert m @ inverse(m) == Matrix.identity(gf7, 2)

    def test_mixed_fields_rejected(self, qq, gf7):
        from errors import FieldMismatchError
        from exactla import Matrix

        with pytest.raises(FieldMismatchError):
            Matrix.identity(qq, 2) @ Matrix.identity(gf7, 2)

    def test_shape_mismatch(self, qq):
        from errors import DimensionMismatchError
        from exactla import Matrix

        with pytest.raises(DimensionMismatchError):
            Matrix.identity(qq, 2) @ Matrix.identity(qq, 3)


# ============================================================================
# SUBSPACES
# ============================================================================

class TestSubspaces:
    """Spans, intersections, quotients and witness selection."""

    def test_span_and_coordinates(self, qq):
        from errors import NoSolution
        from exactla import Subspace

        s = Subspace.span(qq, 3, [vec(qq, 1, 1, 0), vec(qq, 2, 2, 0)])
        assert s.dim == 1
        assert s.contains(vec(qq, 3, 3, 0))
        with pytest.raises(NoSolution):
            s.coordinates(vec(qq, 1, 0, 0))

    def test_intersection(self, qq):
        from exactla import Subspace

        xy = Subspace.span(qq, 3, [vec(qq, 1, 0, 0), vec(qq, 0, 1, 0)])
        yz = Subspace.span(qq, 3, [vec(qq, 0, 1, 0), vec(qq, 0, 0, 1)])
        meet = xy.intersection(yz)
        assert meet.dim == 1
        assert meet.contains(vec(qq, 0, 1, 0))
        assert (xy + yz).dim == 3

    def test_subspace_equal_ignores_generators(self, qq):
        from exactla import subspace_equal

        a = [vec(qq, 1, 1), vec(qq, 1, -1)]
        b = [vec(qq, 1, 0), vec(qq, 0, 1)]
        assert subspace_equal(qq, a, b, 2)
        assert not subspace_equal(qq, a[:1], b, 2)

    def test_quotient_projection(self, qq):
        from exactla import quotient

        q = quotient(qq, 3, [vec(qq, 1, 1, 0)])
        assert q.quotient_dim == 2
        assert q.project(vec(qq, 1, 1, 0)) == vec(qq, 0, 0)
        assert q.project(vec(qq, 1, 0, 0)) == q.project(vec(qq, 0, -1, 0))

    def test_independent_subset_modulo(self, qq):
        from exactla import Subspace, independent_subset

        boundaries = Subspace.span(qq, 3, [vec(qq, 1, 0, 0)])
        cycles = [vec(qq, 2, 0, 0), vec(qq, 1, 1, 0), vec(qq, 0, 2, 0), vec(qq, 0, 0, 1)]
        assert independent_subset(qq, cycles, 3, modulo=boundaries) == [1, 3]
