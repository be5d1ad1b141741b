"""
Axiom certification for Jordan pairs, triple systems and algebras.

Pair and triple axioms are multilinear, so checking basis tuples is
complete. The Jordan identity is cubic in one argument; it is checked
through its full linearization on basis quadruples (sound because 2 and
3 are invertible) and additionally on seeded pseudo-random vectors.
"""
from itertools import combinations_with_replacement, permutations
from typing import Dict, Optional, Tuple, Union

import numpy as np

from certificates import Certificate, CheckResult, Violation, record
from config import config
from exactla import Matrix, Vector, vadd, vsub
from jordan.structures import PLUS, SIGNS, JordanAlgebra, JordanPair, JordanTriple
from observability.metrics import track_latency


def v_operator(p: JordanPair, sigma: int, a: Vector, b: Vector) -> Matrix:
    """V_{a,b} on P_sigma, with a in P_sigma and b in P_-sigma."""
    return p.v_matrix(sigma, a, b)


def _v_table(p: JordanPair, sigma: int) -> Dict[Tuple[int, int], Matrix]:
    own, other = p.component(sigma), p.component(-sigma)
    return {
        (i, j): p.v_matrix(sigma, own.basis_vector(i), other.basis_vector(j))
        for i in range(own.dim)
        for j in range(other.dim)
    }


def _v_of(p: JordanPair, sigma: int, table, a: Vector, b: Vector) -> Matrix:
    """V_{a,b} expanded bilinearly from the basis table."""
    own = p.component(sigma)
    acc = Matrix.zeros(p.field, own.dim, own.dim)
    for (i, j), m in table.items():
        c = a[i] * b[j]
        if c:
            acc = acc + m.scale(c)
    return acc


def _pair_violation(p: JordanPair, name: str) -> Optional[Violation]:
    for sigma in SIGNS:
        own, other = p.component(sigma), p.component(-sigma)
        tag = "+" if sigma == PLUS else "-"
        for i in range(own.dim):
            for j in range(other.dim):
                for k in range(i + 1, own.dim):
                    a, b, c = own.basis_vector(i), other.basis_vector(j), own.basis_vector(k)
                    if p.product(sigma, a, b, c) != p.product(sigma, c, b, a):
                        return Violation(
                            name,
                            f"{{a,b,c}}{tag} is not symmetric in a and c",
                            (tag, own.labels[i], other.labels[j], own.labels[k]),
                        )
        table = _v_table(p, sigma)
        opposite_table = _v_table(p, -sigma)
        for (i, j), vab in table.items():
            for (k, l), vcd in table.items():
                lhs = vab @ vcd - vcd @ vab
                a = own.basis_vector(i)
                b = other.basis_vector(j)
                c = own.basis_vector(k)
                d = other.basis_vector(l)
                vab_c = vab.apply(c)
                vba_d = opposite_table[(j, i)].apply(d)
                rhs = _v_of(p, sigma, table, vab_c, d) - _v_of(p, sigma, table, c, vba_d)
                if lhs != rhs:
                    return Violation(
                        name,
                        f"[V_ab, V_cd] != V_(V_ab c, d) - V_(c, V_ba d) on P{tag}",
                        (tag, own.labels[i], other.labels[j], own.labels[k], other.labels[l]),
                    )
    return None


def check_pair_axioms(p: JordanPair) -> CheckResult:
    cached = p._cache.get("axioms")
    if cached is not None:
        return cached
    violation = _pair_violation(p, "jordan_pair_axioms")
    result = violation or Certificate("jordan_pair_axioms", {"dims": p.dims})
    return record(p._cache.store("axioms", result))


def check_triple_axioms(t: JordanTriple) -> CheckResult:
    cached = t._cache.get("axioms")
    if cached is not None:
        return cached
    from jordan.functors import double_jts

    pair, _ = double_jts(t, check=False)
    violation = _pair_violation(pair, "jordan_triple_axioms")
    if violation is not None:
        # both components carry T; drop the component tag
        violation = Violation(violation.name, violation.reason.replace("P+", "T").replace("P-", "T"), violation.witness[1:])
    result = violation or Certificate("jordan_triple_axioms", {"dim": t.dim})
    return record(t._cache.store("axioms", result))


def jordan_identity_defect(j: JordanAlgebra, a: Vector, b: Vector) -> Vector:
    """(a^2 b) a - a^2 (b a)."""
    a2 = j.square(a)
    return vsub(j.multiply(j.multiply(a2, b), a), j.multiply(a2, j.multiply(b, a)))


def linearized_jordan_defect(j: JordanAlgebra, x: Vector, y: Vector, z: Vector, b: Vector) -> Vector:
    """Sum over orderings (p, q, r) of (x, y, z) of ((pq)b)r - (pq)(br)."""
    out = j.module.zero()
    for p, q, r in permutations((x, y, z)):
        pq = j.multiply(p, q)
        out = vadd(out, vsub(j.multiply(j.multiply(pq, b), r), j.multiply(pq, j.multiply(b, r))))
    return out


def spot_vectors(j: JordanAlgebra, seed: int, count: int, spread: int):
    """Deterministic pseudo-random coordinate vectors with entries in [-spread, spread]."""
    rng = np.random.default_rng(seed)
    draws = rng.integers(-spread, spread + 1, size=(count, 2, j.dim))
    return [
        (j.module.vector([int(v) for v in pair[0]]), j.module.vector([int(v) for v in pair[1]]))
        for pair in draws
    ]


@track_latency("jordan.algebra_axioms")
def check_algebra_axioms(j: JordanAlgebra, seed: Optional[int] = None) -> CheckResult:
    seed = config.DEFAULT_SEED if seed is None else seed
    key = ("axioms", seed)
    cached = j._cache.get(key)
    if cached is not None:
        return cached
    name = "jordan_algebra_axioms"
    result = None
    labels = j.module.labels
    basis = j.module.basis()
    for i in range(j.dim):
        for k in range(i + 1, j.dim):
            if j.multiply(basis[i], basis[k]) != j.multiply(basis[k], basis[i]):
                result = Violation(name, "product is not commutative", (labels[i], labels[k]))
                break
        if result is not None:
            break
    if result is None:
        for i in range(j.dim):
            if j.multiply(j.identity, basis[i]) != basis[i]:
                result = Violation(name, "identity element does not act as identity", (labels[i],))
                break
    if result is None:
        for x, y, z in combinations_with_replacement(range(j.dim), 3):
            for b in range(j.dim):
                if any(linearized_jordan_defect(j, basis[x], basis[y], basis[z], basis[b])):
                    result = Violation(
                        name,
                        "linearized Jordan identity fails",
                        (labels[x], labels[y], labels[z], labels[b]),
                    )
                    break
            if result is not None:
                break
    if result is None:
        for n, (a, b) in enumerate(spot_vectors(j, seed, config.SPOT_CHECKS, config.SPOT_RANGE)):
            if any(jordan_identity_defect(j, a, b)):
                result = Violation(
                    name,
                    f"Jordan identity fails on spot check {n}",
                    (tuple(j.field.format(c) for c in a), tuple(j.field.format(c) for c in b)),
                )
                break
    if result is None:
        result = Certificate(name, {"dim": j.dim, "seed": seed, "spot_checks": config.SPOT_CHECKS})
    return record(j._cache.store(key, result))


def check_axioms(s: Union[JordanPair, JordanTriple, JordanAlgebra], seed: Optional[int] = None) -> CheckResult:
    """Certify the axioms of any of the three Jordan structures."""
    if isinstance(s, JordanPair):
        return check_pair_axioms(s)
    if isinstance(s, JordanTriple):
        return check_triple_axioms(s)
    if isinstance(s, JordanAlgebra):
        return check_algebra_axioms(s, seed)
    raise TypeError(f"not a Jordan structure: {type(s).__name__}")
