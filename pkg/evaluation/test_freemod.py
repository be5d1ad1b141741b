"""
Tests for free modules, structure-constant tensors and exterior powers.
"""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))


# ============================================================================
# MODULES AND LINEAR MAPS
# ============================================================================

class TestModules:
    """Labels, direct sums, tensors and linear maps."""

    def test_labels_must_be_unique(self, qq):
        from freemod import FreeModule

        with pytest.raises(ValueError):
            FreeModule(qq, ("a", "a"))

    def test_direct_sum_concatenates(self, qq):
        from freemod import FreeModule

        m = FreeModule(qq, ("a",)).direct_sum(FreeModule(qq, ("b", "c")))
        assert m.labels == ("a", "b", "c")
        assert m.index("c") == 2

    def test_tensor_layout_and_swap(self, qq):
        from freemod import swap_tensor, tensor_index, tensor_vectors

        x = (qq(1), qq(2))
        y = (qq(3), qq(0), qq(5))
        t = tensor_vectors(x, y)
        assert t[tensor_index(1, 2, 3)] == qq(10)
        assert swap_tensor(t, 2, 3) == tensor_vectors(y, x)

    def test_compose_is_matrix_product(self, qq):
        from exactla import Matrix
        from freemod import FreeModule, LinearMap

        m = FreeModule.with_prefix(qq, "e", 2)
        swap = LinearMap(m, m, Matrix.from_rows(qq, [[0, 1], [1, 0]]))
        assert swap.compose(swap) == LinearMap.identity(m)
        assert swap.is_bijective()
        assert not LinearMap.zero(m, m).is_bijective()

    def test_matrix_shape_checked(self, qq):
        from errors import DimensionMismatchError
        from exactla import Matrix
        from freemod import FreeModule, LinearMap

        with pytest.raises(DimensionMismatchError):
            LinearMap(FreeModule.with_prefix(qq, "e", 2), FreeModule.with_prefix(qq, "f", 3), Matrix.identity(qq, 2))


# ============================================================================
# MULTILINEAR MAPS
# ============================================================================

class TestMultilinear:
    """Sparse structure constants."""

    def test_zero_coefficients_dropped(self, qq):
        from freemod import BilinearMap, FreeModule

        m = FreeModule.with_prefix(qq, "e", 2)
        b = BilinearMap((m, m), m, {(0, 0): {0: qq(1), 1: qq(0)}, (1, 1): {}})
        assert b.table == {(0, 0): {0: qq(1)}}

    def test_apply_is_bilinear(self, qq):
        from freemod import BilinearMap, FreeModule

        m = FreeModule.with_prefix(qq, "e", 2)
        b = BilinearMap((m, m), m, {(0, 1): {1: qq(3)}})
        assert b.apply((qq(2), qq(1)), (qq(0), qq(5))) == (qq(0), qq(30))

    def test_index_out_of_range(self, qq):
        from errors import DimensionMismatchError
        from freemod import BilinearMap, FreeModule

        m = FreeModule.with_prefix(qq, "e", 2)
        with pytest.raises(DimensionMismatchError):
            BilinearMap((m, m), m, {(0, 2): {0: qq(1)}})

    def test_table_from_entries_accumulates(self, qq):
        from freemod import table_from_entries

        table = table_from_entries([((0, 1), 2, qq(1)), ((0, 1), 2, qq(2))])
        assert table == {(0, 1): {2: qq(3)}}

    def test_equality_ignores_labels(self, qq):
        from freemod import FreeModule, TrilinearMap

        a = FreeModule(qq, ("x",))
        b = FreeModule(qq, ("y",))
        table = {(0, 0, 0): {0: qq(2)}}
        assert TrilinearMap((a, a, a), a, table) == TrilinearMap((b, b, b), b, table)


# ============================================================================
# EXTERIOR POWERS
# ============================================================================

class TestWedge:
    """Sorted tuples, signs and degree slices."""

    def test_insert_sign(self):
        from freemod import wedge_insert

        assert wedge_insert(0, (1, 2)) == (1, (0, 1, 2))
        assert wedge_insert(1, (0, 2)) == (-1, (0, 1, 2))
        assert wedge_insert(3, (0, 2)) == (1, (0, 2, 3))
        assert wedge_insert(2, (0, 2)) == (0, None)

    def test_basis_and_degrees(self, qq):
        from freemod import FreeModule, wedge, wedge_degree_slice

        graded = FreeModule(qq, ("f", "h", "e")).graded((-1, 0, 1))
        w2 = wedge(graded, 2)
        assert w2.basis == ((0, 1), (0, 2), (1, 2))
        assert w2.degrees == (-1, 0, 1)
        assert wedge_degree_slice(w2, 0) == [1]
        assert w2.labels()[1] == "f∧e"

    def test_product_vector_is_minors(self, qq):
        from freemod import FreeModule, wedge, wedge_product_vector

        graded = FreeModule.with_prefix(qq, "e", 3).graded((0, 0, 0))
        w2 = wedge(graded, 2)
        x = (qq(1), qq(0), qq(0))
        y = (qq(0), qq(1), qq(0))
        assert wedge_product_vector(w2, [x, y]) == (qq(1), qq(0), qq(0))
        assert wedge_product_vector(w2, [y, x]) == (qq(-1), qq(0), qq(0))
        assert not any(wedge_product_vector(w2, [x, x]))
