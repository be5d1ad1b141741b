"""
Tests for graded Lie algebras, sl2-triples, involutions and the
forgetful functors to Jordan structures.
"""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from evaluation.catalog_groups import LIE_ALGEBRAS  # noqa: E402


# ============================================================================
# STRUCTURE CONSTANTS
# ============================================================================

class TestGradedLieAlgebra:
    """Antisymmetry, grading compatibility and Jacobi."""

    @pytest.mark.parametrize("name", LIE_ALGEBRAS)
    def test_catalog_algebras_certify(self, structure, name):
        from liegrad import check_graded_lie

        assert check_graded_lie(structure(name)).passed

    def test_jacobi_failure_has_witness(self, qq):
        from liegrad import check_graded_lie, from_brackets

        l = from_brackets(qq, ("a", "b", "c"), (0, 0, 0), {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {0: 1}})
        result = check_graded_lie(l)
        assert not result.passed
        assert result.reason == "Jacobi identity fails"
        assert result.witness == ("a", "b", "c")

    def test_bracket_must_respect_degrees(self, qq):
        from liegrad import check_graded_lie, from_brackets

        l = from_brackets(qq, ("x", "y", "z"), (1, 1, 0), {(0, 1): {2: 1}})
        result = check_graded_lie(l)
        assert not result.passed
        assert result.witness == ("x", "y")

    def test_missing_antisymmetry(self, qq):
        from liegrad import check_graded_lie, from_brackets

        l = from_brackets(qq, ("x", "y"), (-1, 1), {(0, 1): {0: 1}}, antisymmetrize=False)
        # [x, y] = x is also out of degree, but antisymmetry is checked first
        assert check_graded_lie(l).reason == "[x, y] != -[y, x]"

    def test_component_dims(self, structure):
        l = structure("sl4block")
        assert l.component_dims == {-1: 4, 0: 7, 1: 4}
        assert l.is_three_graded()

    @pytest.mark.parametrize(
        "name,expected",
        [("sl2", True), ("abelian3", True), ("sl4block", True), ("abelian111", False), ("sl2_central", False), ("sl3", False)],
    )
    def test_zero_perfect(self, structure, name, expected):
        from liegrad import is_zero_perfect

        assert is_zero_perfect(structure(name)) is expected

    def test_center(self, structure, qq):
        from liegrad import center

        assert center(structure("sl2")) == []
        z = center(structure("sl2_central"))
        assert z == [(qq(0), qq(0), qq(0), qq(1))]

    def test_matrix_span_must_be_closed(self, qq):
        from errors import PreconditionError
        from liegrad import lie_algebra_from_matrices

        with pytest.raises(PreconditionError):
            lie_algebra_from_matrices(qq, ("E12", "E21"), ([[0, 1], [0, 0]], [[0, 0], [1, 0]]), (1, -1))


# ============================================================================
# HOMOMORPHISMS AND INVOLUTIONS
# ============================================================================

class TestHomsAndInvolutions:
    """Graded homomorphisms and anti-graded involutions."""

    def test_identity_is_graded_hom(self, structure):
        from liegrad import GradedHom, check_graded_hom

        l = structure("sl4block")
        assert check_graded_hom(GradedHom.identity(l)).passed

    def test_degree_breaking_map_rejected(self, structure, qq):
        from exactla import Matrix
        from liegrad import GradedHom, check_graded_hom

        l = structure("sl2")
        flip = Matrix.from_rows(qq, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])
        result = check_graded_hom(GradedHom(l, l, flip))
        assert not result.passed
        assert result.witness == ("f",)

    def test_sl2_involution_certifies(self, structure):
        from liegrad import check_involution

        l = structure("sl2")
        assert check_involution(l, l.involution).passed

    def test_identity_is_not_anti_graded(self, structure, qq):
        from exactla import Matrix
        from liegrad import check_involution

        result = check_involution(structure("sl2"), Matrix.identity(qq, 3))
        assert not result.passed
        assert result.reason == "involution does not reverse degrees"


# ============================================================================
# SL2-TRIPLES AND A1-GRADINGS
# ============================================================================

class TestSl2Triples:
    """Triples, induced gradings and the NotA1 reasons."""

    def test_catalog_triples_certify(self, structure):
        from liegrad import Sl2Triple, check_sl2

        for name in ("sl2", "sl4block", "sl3"):
            l = structure(name)
            assert check_sl2(l, Sl2Triple.from_algebra(l)).passed, name

    def test_missing_triple(self, structure):
        from liegrad import Sl2Triple

        with pytest.raises(ValueError):
            Sl2Triple.from_algebra(structure("abelian3"))

    def test_block_grading_is_induced(self, structure):
        from liegrad import Sl2Triple, grading_from_sl2, induced_grading_matches

        l = structure("sl4block")
        s = Sl2Triple.from_algebra(l)
        assert induced_grading_matches(l, s)
        assert grading_from_sl2(l, s).component_dims == {-1: 4, 0: 7, 1: 4}

    def test_root_triple_has_odd_weights(self, structure):
        from errors import NotA1
        from liegrad import Sl2Triple, grading_from_sl2

        l = structure("sl3")
        with pytest.raises(NotA1) as exc_info:
            grading_from_sl2(l, Sl2Triple.from_algebra(l))
        assert exc_info.value.reason == "non_integral_weight"

    def test_principal_triple_leaves_weight_four(self, qq):
        from errors import NotA1
        from liegrad import Sl2Triple, grading_from_sl2, special_linear, vector_of

        l = special_linear(qq, 3)
        s = Sl2Triple(
            vector_of(l, {"H1": 2, "H2": 2}),
            vector_of(l, {"E12": 1, "E23": 1}),
            vector_of(l, {"E21": 2, "E32": 2}),
        )
        with pytest.raises(NotA1) as exc_info:
            grading_from_sl2(l, s)
        assert exc_info.value.reason == "residual_eigenspace"

    def test_central_direction_spoils_zero_perfectness(self, structure):
        from errors import NotA1
        from liegrad import Sl2Triple, grading_from_sl2, vector_of

        l = structure("sl2_central")
        s = Sl2Triple(vector_of(l, {"h": 1}), vector_of(l, {"e": 1}), vector_of(l, {"f": 1}))
        with pytest.raises(NotA1) as exc_info:
            grading_from_sl2(l, s)
        assert exc_info.value.reason == "not_zero_perfect"


# ============================================================================
# FORGETFUL FUNCTORS
# ============================================================================

class TestForgetfulFunctors:
    """Jordan structures read off the degree +-1 parts."""

    def test_pair_of_sl2(self, structure, qq):
        from jordan import MINUS, check_axioms
        from liegrad import forget_to_pair

        p = forget_to_pair(structure("sl2"))
        assert p.dims == (1, 1)
        assert check_axioms(p).passed
        # {f, e, f} = [[f, e], f] = [-h, f] = 2f
        assert p.product(MINUS, (qq(1),), (qq(1),), (qq(1),)) == (qq(2),)

    def test_triple_of_sl2(self, structure, qq):
        from liegrad import forget_to_jts, make_involution

        l = structure("sl2")
        t = forget_to_jts(l, make_involution(l, l.involution))
        assert t.product((qq(1),), (qq(1),), (qq(1),)) == (qq(2),)

    def test_algebra_of_sl2(self, structure, qq):
        from liegrad import Sl2Triple, forget_to_ja

        l = structure("sl2")
        j = forget_to_ja(l, Sl2Triple.from_algebra(l))
        assert j.identity == (qq.parse("1/2"),)
        assert j.multiply(j.identity, j.identity) == j.identity

    def test_pair_needs_three_grading(self, qq):
        from errors import PreconditionError
        from liegrad import abelian, forget_to_pair

        with pytest.raises(PreconditionError):
            forget_to_pair(abelian(qq, ("x", "y"), (-2, 2)))

    def test_prime_field(self, structure, gf7):
        from jordan import check_axioms
        from liegrad import forget_to_pair

        assert check_axioms(forget_to_pair(structure("sl4block", gf7))).passed
