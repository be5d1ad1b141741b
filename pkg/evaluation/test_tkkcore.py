"""
Tests for ins(P), TKK(P), uTKK(P) and the algebra shortcut for <J, J>.
"""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from evaluation.catalog_groups import PAIR_SOURCES, TRIPLES, UNITAL_ALGEBRAS  # noqa: E402


def zero_pair(f):
    """The pair (k, k) with vanishing products."""
    from freemod import FreeModule, TrilinearMap
    from jordan import JordanPair

    minus, plus = FreeModule(f, ("a",)), FreeModule(f, ("b",))
    return JordanPair(
        minus,
        plus,
        TrilinearMap.zero((minus, plus, minus), minus),
        TrilinearMap.zero((plus, minus, plus), plus),
        name="zero",
    )


# ============================================================================
# TKK
# ============================================================================

class TestTkk:
    """P- (+) ins(P) (+) P+ and its defining properties."""

    @pytest.mark.parametrize(
        "name,ins_dim,total",
        [
            ("k1", 1, 3),
            ("diag(2)", 2, 6),
            ("diag(3)", 3, 9),
            ("spin(2)", 4, 10),
            ("mat2sym", 7, 15),
            ("rect(1,2)", 4, 8),
        ],
    )
    def test_dimensions(self, pair_of, name, ins_dim, total):
        from tkkcore import tkk

        t = tkk(pair_of(name))
        assert t.ins.dim == ins_dim
        assert t.dim == total

    def test_k1_gives_three_dimensional_algebra(self, pair_of):
        """TKK of the doubled base field is 3-dimensional, 0-perfect and recovers the pair."""
        from liegrad import check_graded_lie, forget_to_pair, is_zero_perfect
        from tkkcore import tkk

        p = pair_of("k1")
        t = tkk(p)
        assert t.lie.component_dims == {-1: 1, 0: 1, 1: 1}
        assert check_graded_lie(t.lie).passed
        assert is_zero_perfect(t.lie)
        assert forget_to_pair(t.lie) == p

    def test_mat2sym_matches_block_special_linear(self, pair_of, structure):
        from tkkcore import tkk

        t = tkk(pair_of("mat2sym"))
        assert t.lie.component_dims == structure("sl4block").component_dims

    def test_nu_closure(self, pair_of):
        from tkkcore import check_nu_closure

        for name in PAIR_SOURCES:
            assert check_nu_closure(pair_of(name)).passed, name

    def test_canonical_involution(self, structure):
        from liegrad import check_involution
        from tkkcore import tkk_involution

        t = structure("rect(1,2)")
        eps = tkk_involution(t)
        assert check_involution(eps.algebra, eps).passed

    def test_zero_pair(self, qq):
        """Vanishing products give ins = 0 and an abelian TKK."""
        from tkkcore import tkk

        t = tkk(zero_pair(qq))
        assert t.ins.dim == 0
        assert t.lie.component_dims == {-1: 1, 1: 1}


# ============================================================================
# INNER STRUCTURE ALGEBRA
# ============================================================================

class TestInnerStructure:
    """Eigenspace split of ins(T) and the right-multiplication part."""

    @pytest.mark.parametrize("name", UNITAL_ALGEBRAS + TRIPLES)
    def test_eigenspace_split_reconstructs_ins(self, structure, name):
        from jordan import JordanAlgebra, algebra_to_triple, double_jts
        from tkkcore import inner_structure_algebra, ins_decomposition_jts

        s = structure(name)
        t = algebra_to_triple(s) if isinstance(s, JordanAlgebra) else s
        minus_part, plus_part = ins_decomposition_jts(t)
        assert len(minus_part) + len(plus_part) == inner_structure_algebra(double_jts(t)[0]).dim

    @pytest.mark.parametrize("name", UNITAL_ALGEBRAS)
    def test_right_multiplications_span_minus_part(self, structure, name):
        from jordan import algebra_to_triple
        from tkkcore import check_right_multiplication_part, ins_decomposition_jts

        j = structure(name)
        assert check_right_multiplication_part(j).passed
        minus_part, _ = ins_decomposition_jts(algebra_to_triple(j))
        assert len(minus_part) == j.dim


# ============================================================================
# UTKK
# ============================================================================

class TestUtkk:
    """The universal central 0-extension of TKK(P)."""

    @pytest.mark.parametrize("name", PAIR_SOURCES)
    def test_upsilon_is_central_zero_extension(self, pair_of, name):
        from liegrad import is_zero_perfect
        from tkkcore import check_central_zero_extension, check_utkk, utkk

        u = utkk(pair_of(name))
        assert check_central_zero_extension(u.upsilon).passed
        assert is_zero_perfect(u.lie)
        assert check_utkk(u).passed

    @pytest.mark.parametrize("name", PAIR_SOURCES)
    def test_no_kernel_for_unital_and_rectangular(self, pair_of, name):
        from tkkcore import utkk

        u = utkk(pair_of(name))
        assert u.kernel_upsilon() == []
        assert u.dim == u.tkk.dim

    def test_zero_pair_gives_heisenberg(self, qq):
        """uTKK of the zero pair has a one-dimensional kernel over TKK."""
        from tkkcore import check_central_zero_extension, utkk

        u = utkk(zero_pair(qq))
        assert u.dim == 3
        assert u.tkk.dim == 2
        assert u.bracket_space_dim == 1
        assert len(u.kernel_upsilon()) == 1
        assert check_central_zero_extension(u.upsilon).passed

    @pytest.mark.parametrize("name", PAIR_SOURCES)
    def test_relation_oracle(self, pair_of, name):
        from tkkcore import check_relation_oracle

        assert check_relation_oracle(pair_of(name), seed=11).passed

    def test_relations_outside_kernel_of_lambda_rejected(self, pair_of, qq):
        from errors import AxiomViolation
        from tkkcore import utkk

        p = pair_of("diag(2)")
        units = [tuple(qq(1) if r == c else qq(0) for r in range(4)) for c in range(4)]
        with pytest.raises(AxiomViolation):
            utkk(p, relations=units)

    def test_prime_field(self, pair_of, gf7):
        from tkkcore import utkk

        u = utkk(pair_of("mat2sym", gf7))
        assert u.lie.component_dims == {-1: 4, 0: 7, 1: 4}


# ============================================================================
# DECORATIONS
# ============================================================================

class TestDecorations:
    """The involution of uTKK(T) and the sl2-triple of uTKK(J)."""

    @pytest.mark.parametrize("name", UNITAL_ALGEBRAS + TRIPLES)
    def test_involution_certifies(self, structure, name):
        from jordan import JordanAlgebra, algebra_to_triple
        from liegrad import check_involution
        from tkkcore import check_omega_stable, utkk_involution

        s = structure(name)
        t = algebra_to_triple(s) if isinstance(s, JordanAlgebra) else s
        assert check_omega_stable(t).passed
        kappa = utkk_involution(t)
        assert check_involution(kappa.algebra, kappa).passed

    @pytest.mark.parametrize("name", UNITAL_ALGEBRAS)
    def test_sl2_triple_certifies_and_records_form(self, structure, name):
        from jordan import algebra_to_pair
        from liegrad import check_sl2, induced_grading_matches
        from tkkcore import SL2_FORMS, utkk, utkk_sl2

        j = structure(name)
        s = utkk_sl2(j)
        u = utkk(algebra_to_pair(j)[0])
        assert check_sl2(u.lie, s).passed
        assert induced_grading_matches(u.lie, s)
        assert u.sl2_form in SL2_FORMS


class TestSharedConstructions:
    """Constructions memoized on a structure are shared across threads."""

    def test_store_keeps_first_value(self):
        from memo import Memo

        memo = Memo()
        first, second = object(), object()
        assert memo.store("utkk", first) is first
        assert memo.store("utkk", second) is first
        assert memo["utkk"] is first

    def test_concurrent_builds_return_one_algebra(self, pair_of):
        from concurrent.futures import ThreadPoolExecutor

        from tkkcore import utkk

        p = pair_of("mat2sym")
        with ThreadPoolExecutor(max_workers=4) as pool:
            built = list(pool.map(lambda _: utkk(p), range(8)))
        assert all(u is built[0] for u in built)
        assert utkk(p) is built[0]

    def test_concurrent_sl2_triples_agree_with_recorded_form(self, structure):
        from concurrent.futures import ThreadPoolExecutor

        from jordan import algebra_to_pair
        from tkkcore import utkk, utkk_sl2

        j = structure("spin(3)")
        with ThreadPoolExecutor(max_workers=4) as pool:
            triples = list(pool.map(lambda _: utkk_sl2(j), range(6)))
        u = utkk(algebra_to_pair(j)[0])
        assert all(s is u.sl2_triple for s in triples)
        assert u.sl2_form is not None


# ============================================================================
# <J, J> FROM THE MULTIPLICATION
# ============================================================================

class TestAlgebraShortcut:
    """Cubic relations and the symmetric / skew split of A."""

    @pytest.mark.parametrize("name", UNITAL_ALGEBRAS)
    def test_cubic_span_equals_relations(self, structure, name):
        from exactla import subspace_equal
        from jordan import algebra_to_pair
        from tkkcore import cubic_relations, relation_submodule

        j = structure(name)
        pair, _ = algebra_to_pair(j)
        assert subspace_equal(j.field, cubic_relations(j), relation_submodule(pair), j.dim * j.dim)

    @pytest.mark.parametrize("name", UNITAL_ALGEBRAS)
    def test_shortcut_matches_generic_construction(self, structure, name):
        from jordan import algebra_to_pair
        from tkkcore import utkk, utkk_algebra_shortcut

        j = structure(name)
        assert utkk_algebra_shortcut(j).dim == utkk(algebra_to_pair(j)[0]).dim

    @pytest.mark.parametrize("name", UNITAL_ALGEBRAS)
    def test_symmetric_skew_split(self, structure, name):
        from tkkcore import SYMMETRIC_READINGS, symm_skew_split

        split = symm_skew_split(structure(name))
        assert len(split.symmetric) + len(split.skew) == split.relation_dim
        assert split.symmetric_reading in {reading for reading, _ in SYMMETRIC_READINGS}

    def test_k1_has_no_relations(self, structure):
        from tkkcore import cubic_relations, symm_skew_split

        j = structure("k1")
        assert not any(cubic_relations(j)[0])
        assert symm_skew_split(j).relation_dim == 0
