"""
Homomorphisms and involutions of Jordan structures.
"""
from dataclasses import dataclass
from typing import Optional, Union

from certificates import Certificate, CheckResult, Violation, record, require_certified
from errors import PreconditionError
from exactla import Vector
from freemod import LinearMap
from jordan.structures import PLUS, SIGNS, JordanAlgebra, JordanPair, JordanTriple


@dataclass(frozen=True, eq=False)
class PairHom:
    """gamma = (gamma_-, gamma_+): P -> Q, componentwise linear."""

    source: JordanPair
    target: JordanPair
    minus: LinearMap
    plus: LinearMap

    def __post_init__(self):
        if self.minus.matrix.shape != (self.target.minus.dim, self.source.minus.dim):
            raise PreconditionError("gamma_- does not map P- to Q-")
        if self.plus.matrix.shape != (self.target.plus.dim, self.source.plus.dim):
            raise PreconditionError("gamma_+ does not map P+ to Q+")

    @classmethod
    def identity(cls, p: JordanPair) -> "PairHom":
        return cls(p, p, LinearMap.identity(p.minus), LinearMap.identity(p.plus))

    @classmethod
    def zero(cls, p: JordanPair, q: JordanPair) -> "PairHom":
        return cls(p, q, LinearMap.zero(p.minus, q.minus), LinearMap.zero(p.plus, q.plus))

    def part(self, sigma: int) -> LinearMap:
        return self.plus if sigma == PLUS else self.minus

    def apply(self, sigma: int, v: Vector) -> Vector:
        return self.part(sigma)(v)

    def compose(self, inner: "PairHom") -> "PairHom":
        """self after inner."""
        return PairHom(inner.source, self.target, self.minus.compose(inner.minus), self.plus.compose(inner.plus))

    def is_bijective(self) -> bool:
        return self.minus.is_bijective() and self.plus.is_bijective()


@dataclass(frozen=True, eq=False)
class PairInvolution:
    """A homomorphism eps: P -> opposite(P) with eps_-sigma after eps_sigma = id."""

    pair: JordanPair
    hom: PairHom

    @property
    def minus(self) -> LinearMap:
        """eps_-: P- -> P+."""
        return self.hom.minus

    @property
    def plus(self) -> LinearMap:
        """eps_+: P+ -> P-."""
        return self.hom.plus

    def part(self, sigma: int) -> LinearMap:
        return self.hom.part(sigma)


def _pair_law_violation(name: str, gamma: PairHom) -> Optional[Violation]:
    p, q = gamma.source, gamma.target
    for sigma in SIGNS:
        own, other = p.component(sigma), p.component(-sigma)
        tag = "+" if sigma == PLUS else "-"
        for i in range(own.dim):
            a = own.basis_vector(i)
            ga = gamma.apply(sigma, a)
            for j in range(other.dim):
                b = other.basis_vector(j)
                gb = gamma.apply(-sigma, b)
                for k in range(own.dim):
                    c = own.basis_vector(k)
                    lhs = gamma.apply(sigma, p.product(sigma, a, b, c))
                    rhs = q.product(sigma, ga, gb, gamma.apply(sigma, c))
                    if lhs != rhs:
                        return Violation(
                            name,
                            f"gamma does not preserve {{,,}}{tag}",
                            (tag, own.labels[i], other.labels[j], own.labels[k]),
                        )
    return None


def check_involution(p: JordanPair, eps: Union[PairHom, PairInvolution]) -> CheckResult:
    """eps must be a homomorphism P -> P^op of period 2."""
    name = "pair_involution"
    hom = eps.hom if isinstance(eps, PairInvolution) else eps
    from jordan.functors import opposite

    as_hom = PairHom(p, opposite(p), hom.minus, hom.plus)
    violation = _pair_law_violation(name, as_hom)
    if violation is not None:
        return record(violation)
    if hom.plus.compose(hom.minus) != LinearMap.identity(p.minus):
        return record(Violation(name, "eps_+ after eps_- is not the identity on P-", ("-",)))
    if hom.minus.compose(hom.plus) != LinearMap.identity(p.plus):
        return record(Violation(name, "eps_- after eps_+ is not the identity on P+", ("+",)))
    return record(Certificate(name, {"dims": p.dims}))


def make_involution(p: JordanPair, minus: LinearMap, plus: LinearMap) -> PairInvolution:
    from jordan.functors import opposite

    hom = PairHom(p, opposite(p), minus, plus)
    require_certified(check_involution(p, hom))
    return PairInvolution(p, hom)


def _triple_violation(name: str, gamma: LinearMap, s: JordanTriple, t: JordanTriple) -> Optional[Violation]:
    basis = s.module.basis()
    labels = s.module.labels
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            for k, c in enumerate(basis):
                if gamma(s.product(a, b, c)) != t.product(gamma(a), gamma(b), gamma(c)):
                    return Violation(name, "gamma does not preserve the triple product", (labels[i], labels[j], labels[k]))
    return None


def _algebra_violation(name: str, gamma: LinearMap, s: JordanAlgebra, t: JordanAlgebra) -> Optional[Violation]:
    basis = s.module.basis()
    labels = s.module.labels
    for i, a in enumerate(basis):
        for j in range(i, len(basis)):
            b = basis[j]
            if gamma(s.multiply(a, b)) != t.multiply(gamma(a), gamma(b)):
                return Violation(name, "gamma does not preserve the product", (labels[i], labels[j]))
    if gamma(s.identity) != tuple(t.identity):
        return Violation(name, "gamma does not send 1 to 1", ("1",))
    return None


def check_hom(kind: str, maps, source, target) -> CheckResult:
    """
    Verify a homomorphism of Jordan structures on basis tuples.

    kind is one of:
        "pair"             maps: PairHom, source/target: JordanPair
        "pair_involutary"  maps: PairHom, source/target: (JordanPair, PairInvolution)
        "triple"           maps: LinearMap, source/target: JordanTriple
        "algebra"          maps: LinearMap, source/target: JordanAlgebra (unital)
    """
    name = f"{kind}_hom"
    if kind == "pair":
        gamma = maps if maps.source is source and maps.target is target else PairHom(source, target, maps.minus, maps.plus)
        violation = _pair_law_violation(name, gamma)
    elif kind == "pair_involutary":
        (p, eps_p), (q, eps_q) = source, target
        gamma = PairHom(p, q, maps.minus, maps.plus)
        violation = _pair_law_violation(name, gamma)
        if violation is None:
            # eps_Q gamma = gamma^op eps_P, componentwise
            if eps_q.minus.compose(gamma.minus) != gamma.plus.compose(eps_p.minus):
                violation = Violation(name, "gamma does not commute with the involutions on P-", ("-",))
            elif eps_q.plus.compose(gamma.plus) != gamma.minus.compose(eps_p.plus):
                violation = Violation(name, "gamma does not commute with the involutions on P+", ("+",))
    elif kind == "triple":
        violation = _triple_violation(name, maps, source, target)
    elif kind == "algebra":
        violation = _algebra_violation(name, maps, source, target)
    else:
        raise ValueError(f"unknown homomorphism kind {kind!r}")
    if violation is not None:
        return record(violation)
    return record(Certificate(name))


def isomorphic_via(p: JordanPair, q: JordanPair, gamma: PairHom) -> CheckResult:
    result = check_hom("pair", gamma, p, q)
    if not result.passed:
        return result
    if not gamma.is_bijective():
        return record(Violation("pair_iso", "homomorphism is not bijective"))
    return record(Certificate("pair_iso"))

