"""
Built-in example structures, addressed by name:

    k1, diag(n), mat2sym, spin(n)      unital Jordan algebras
    rect(p,q)                          rectangular matrix triple systems
    sl2, sl2_central, abelian3,        graded Lie algebras
    abelian111, sl4block, sl3
"""
import re
from itertools import product
from typing import Callable, Dict, List, Tuple

from cli.fileformat import AlgebraFile, Structure, from_structure
from errors import UnknownName
from exactla import Field, QQ_FIELD
from freemod import BilinearMap, FreeModule, TrilinearMap
from jordan import JordanAlgebra, JordanTriple
from liegrad import abelian, central_sum, sl2, sl3_root, sl4_block

MAX_DIAG = 4
MAX_SPIN = 4
MAX_RECT = 6

_PARAMETRIZED = re.compile(r"^(diag|spin|rect)\((\d+)(?:,\s*(\d+))?\)$")


def k1(f: Field) -> JordanAlgebra:
    """The base field as a Jordan algebra."""
    return diag(f, 1, name="k1")


def diag(f: Field, n: int, name: str = "") -> JordanAlgebra:
    """k^n with componentwise product."""
    module = FreeModule.with_prefix(f, "e", n) if n > 1 else FreeModule(f, ("1",))
    table = {(i, i): {i: f.one} for i in range(n)}
    return JordanAlgebra(
        module, BilinearMap((module, module), module, table), tuple([f.one] * n), name=name or f"diag({n})"
    )


def spin(f: Field, n: int) -> JordanAlgebra:
    """The spin factor k1 (+) k^n with v_i v_j = delta_ij 1."""
    module = FreeModule(f, ("1",) + tuple(f"v{i + 1}" for i in range(n)))
    table = {}
    for i in range(n + 1):
        table[(0, i)] = {i: f.one}
        table[(i, 0)] = {i: f.one}
    for i in range(1, n + 1):
        table[(i, i)] = {0: f.one}
    identity = tuple([f.one] + [f.zero] * n)
    return JordanAlgebra(module, BilinearMap((module, module), module, table), identity, name=f"spin({n})")


def _units(rows: int, cols: int) -> List[Tuple[int, int]]:
    return list(product(range(rows), range(cols)))


def mat2sym(f: Field) -> JordanAlgebra:
    """2x2 matrices with the symmetrized product (ab + ba)/2."""
    units = _units(2, 2)
    module = FreeModule(f, tuple(f"E{i + 1}{j + 1}" for i, j in units))
    half = f.quo(f.one, f(2))
    table: Dict[Tuple[int, int], Dict[int, object]] = {}
    for (x, (i, j)), (y, (k, l)) in product(enumerate(units), repeat=2):
        image: Dict[int, object] = {}
        if j == k:
            image[units.index((i, l))] = half
        if l == i:
            target = units.index((k, j))
            image[target] = image.get(target, f.zero) + half
        table[(x, y)] = image
    identity = tuple(f.one if i == j else f.zero for i, j in units)
    return JordanAlgebra(module, BilinearMap((module, module), module, table), identity, name="mat2sym")


def rect(f: Field, p: int, q: int) -> JordanTriple:
    """p x q matrices with {x, y, z} = x y^T z + z y^T x."""
    units = _units(p, q)
    module = FreeModule(f, tuple(f"E{i + 1}{j + 1}" for i, j in units))
    table: Dict[Tuple[int, int, int], Dict[int, object]] = {}
    for (x, (a, b)), (y, (c, d)), (z, (e, g)) in product(enumerate(units), repeat=3):
        image: Dict[int, object] = {}
        if b == d and c == e:
            image[units.index((a, g))] = f.one
        if g == d and c == a:
            target = units.index((e, b))
            image[target] = image.get(target, f.zero) + f.one
        if image:
            table[(x, y, z)] = image
    return JordanTriple(module, TrilinearMap((module, module, module), module, table), name=f"rect({p},{q})")


def _abelian3(f: Field):
    return abelian(f, ("x", "y"), (-1, 1), name="abelian3")


def _abelian111(f: Field):
    return abelian(f, ("x", "h", "y"), (-1, 0, 1), name="abelian111")


def _sl2_central(f: Field):
    return central_sum(sl2(f), name="sl2_central")


FIXED: Dict[str, Callable[[Field], Structure]] = {
    "k1": k1,
    "mat2sym": mat2sym,
    "sl2": sl2,
    "sl2_central": _sl2_central,
    "abelian3": _abelian3,
    "abelian111": _abelian111,
    "sl4block": sl4_block,
    "sl3": sl3_root,
}


def catalog_names() -> List[str]:
    names = ["k1"]
    names += [f"diag({n})" for n in range(1, MAX_DIAG + 1)]
    names.append("mat2sym")
    names += [f"spin({n})" for n in range(1, MAX_SPIN + 1)]
    names += [f"rect({p},{q})" for p in range(1, MAX_RECT + 1) for q in range(1, MAX_RECT + 1) if p * q <= MAX_RECT]
    names += [n for n in FIXED if n not in ("k1", "mat2sym")]
    return names


def catalog_structure(name: str, f: Field = QQ_FIELD) -> Structure:
    """
    Raises:
        UnknownName: for names outside the catalog or parameters out of range
    """
    key = name.strip()
    if key in FIXED:
        return FIXED[key](f)
    match = _PARAMETRIZED.match(key)
    if match is None:
        raise UnknownName(name)
    family, first, second = match.group(1), int(match.group(2)), match.group(3)
    if family == "rect":
        if second is None or first < 1 or int(second) < 1 or first * int(second) > MAX_RECT:
            raise UnknownName(name)
        return rect(f, first, int(second))
    if second is not None:
        raise UnknownName(name)
    if family == "diag" and 1 <= first <= MAX_DIAG:
        return diag(f, first)
    if family == "spin" and 1 <= first <= MAX_SPIN:
        return spin(f, first)
    raise UnknownName(name)


def catalog(name: str, f: Field = QQ_FIELD) -> AlgebraFile:
    return from_structure(catalog_structure(name, f))
