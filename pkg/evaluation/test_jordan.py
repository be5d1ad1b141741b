"""
Tests for Jordan pairs, triple systems and unital algebras.
"""
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from evaluation.catalog_groups import TRIPLES, UNITAL_ALGEBRAS  # noqa: E402


# ============================================================================
# AXIOMS
# ============================================================================

class TestAxioms:
    """Certification on basis tuples plus seeded spot checks."""

    @pytest.mark.parametrize("name", UNITAL_ALGEBRAS + TRIPLES)
    def test_catalog_structures_certify(self, structure, name):
        from jordan import check_axioms

        result = check_axioms(structure(name))
        assert result.passed, result

    @pytest.mark.parametrize("name", UNITAL_ALGEBRAS + TRIPLES)
    def test_doubled_pairs_certify(self, pair_of, name):
        from jordan import check_axioms

        assert check_axioms(pair_of(name)).passed

    @pytest.mark.parametrize("name", ["diag(2)", "spin(2)", "mat2sym"])
    def test_certify_over_prime_field(self, structure, gf7, name):
        from jordan import check_axioms

        assert check_axioms(structure(name, gf7)).passed

    def test_every_single_mutation_of_mat2sym_is_caught(self, qq):
        """Adding 1 to any stored structure constant breaks commutativity, the unit or the identity."""
        from cli.catalog import catalog
        from cli.fileformat import to_structure
        from jordan import check_axioms

        source = catalog("mat2sym")
        assert source.product
        for n, entry in enumerate(source.product):
            *indices, value = entry
            bumped = qq.format(qq.parse(value) + qq.one)
            product = list(source.product)
            product[n] = [*indices, bumped]
            mutated = to_structure(source.model_copy(update={"product": product}))
            result = check_axioms(mutated)
            assert not result.passed, f"mutation of entry {n} went unnoticed"
            assert isinstance(result.witness, tuple) and result.witness

    def test_wrong_identity_rejected(self, structure, qq):
        from jordan import JordanAlgebra, check_axioms

        k1 = structure("k1")
        bad = JordanAlgebra(k1.module, k1.mult, (qq(2),), name="k1-bad-unit")
        result = check_axioms(bad)
        assert not result.passed
        assert "identity" in result.reason

    def test_spot_check_seed_recorded(self, structure):
        from jordan import check_axioms

        result = check_axioms(structure("spin(2)"), seed=7)
        assert result.details["seed"] == 7

    def test_require_certified_raises(self, structure, qq):
        from certificates import require_certified
        from errors import AxiomViolation
        from jordan import JordanAlgebra, check_axioms

        k1 = structure("k1")
        bad = JordanAlgebra(k1.module, k1.mult, (qq(3),))
        with pytest.raises(AxiomViolation) as exc_info:
            require_certified(check_axioms(bad))
        assert exc_info.value.violation.name == "jordan_algebra_axioms"


# ============================================================================
# FUNCTORS
# ============================================================================

class TestFunctors:
    """Opposite pair, doubling and the triple product of a unital algebra."""

    def test_opposite_is_an_involution(self, pair_of):
        from jordan import opposite

        p = pair_of("rect(1,2)")
        assert opposite(opposite(p)) is p
        assert opposite(p).t_minus == p.t_plus

    def test_doubling_carries_identity_involution(self, structure):
        from jordan import check_involution, double_jts

        t = structure("rect(2,2)")
        pair, eps = double_jts(t)
        assert pair.dims == (4, 4)
        assert pair.t_minus == t.t and pair.t_plus == t.t
        assert check_involution(pair, eps).passed

    def test_algebra_triple_product_on_k1(self, structure, qq):
        from jordan import algebra_to_triple

        t = algebra_to_triple(structure("k1"))
        one = (qq(1),)
        assert t.product(one, one, one) == one

    def test_identity_invertible_idempotent_not(self, structure, qq):
        from jordan import PLUS, algebra_to_pair, is_invertible

        pair, one = algebra_to_pair(structure("diag(2)"))
        assert is_invertible(pair, PLUS, one)
        assert not is_invertible(pair, PLUS, (qq(1), qq(0)))


# ============================================================================
# HOMOMORPHISMS
# ============================================================================

class TestHomomorphisms:
    """Basis-level homomorphism and isomorphism checks."""

    def test_swap_is_algebra_automorphism(self, structure, qq):
        from exactla import Matrix
        from freemod import LinearMap
        from jordan import check_hom

        j = structure("diag(2)")
        swap = LinearMap(j.module, j.module, Matrix.from_rows(qq, [[0, 1], [1, 0]]))
        assert check_hom("algebra", swap, j, j).passed

    def test_scaling_is_not_an_algebra_hom(self, structure, qq):
        from exactla import Matrix
        from freemod import LinearMap
        from jordan import check_hom

        j = structure("k1")
        double = LinearMap(j.module, j.module, Matrix.from_rows(qq, [[2]]))
        result = check_hom("algebra", double, j, j)
        assert not result.passed
        assert result.witness == ("1", "1")

    def test_scaling_is_a_triple_hom_only_for_unit_cubes(self, structure, qq):
        """x -> -x preserves a triple product, x -> 2x does not."""
        from exactla import Matrix
        from freemod import LinearMap
        from jordan import check_hom

        t = structure("rect(1,2)")
        minus = LinearMap(t.module, t.module, Matrix.identity(qq, 2).scale(-1))
        twice = LinearMap(t.module, t.module, Matrix.identity(qq, 2).scale(2))
        assert check_hom("triple", minus, t, t).passed
        assert not check_hom("triple", twice, t, t).passed

    def test_identity_is_pair_isomorphism(self, pair_of):
        from jordan import PairHom, isomorphic_via

        p = pair_of("mat2sym")
        assert isomorphic_via(p, p, PairHom.identity(p)).passed

    def test_zero_map_is_hom_but_not_iso(self, pair_of):
        from jordan import PairHom, check_hom, isomorphic_via

        p = pair_of("spin(2)")
        zero = PairHom.zero(p, p)
        assert check_hom("pair", zero, p, p).passed
        result = isomorphic_via(p, p, zero)
        assert not result.passed
        assert result.name == "pair_iso"

    def test_unknown_kind(self, pair_of):
        from jordan import PairHom, check_hom

        p = pair_of("k1")
        with pytest.raises(ValueError):
            check_hom("module", PairHom.identity(p), p, p)
