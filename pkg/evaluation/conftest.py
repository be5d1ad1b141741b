"""
Shared fixtures for the tkkforge test suite.
"""
import logging
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from exactla import Field  # noqa: E402


# ============================================================================
# FIXTURES
# ============================================================================

@pytest.fixture
def qq():
    """The rationals."""
    return Field.rational()


@pytest.fixture
def gf5():
    return Field.prime(5)


@pytest.fixture
def gf7():
    return Field.prime(7)


@pytest.fixture
def structure():
    """Catalog lookup: structure("mat2sym") or structure("diag(2)", field)."""
    from cli.catalog import catalog_structure

    return catalog_structure


@pytest.fixture
def pair_of():
    """The Jordan pair underlying a catalog algebra or triple system."""
    from cli.catalog import catalog_structure
    from jordan import JordanAlgebra, JordanTriple, algebra_to_pair, double_jts

    def build(name, f=None):
        s = catalog_structure(name) if f is None else catalog_structure(name, f)
        if isinstance(s, JordanAlgebra):
            return algebra_to_pair(s)[0]
        if isinstance(s, JordanTriple):
            return double_jts(s)[0]
        return s

    return build


@pytest.fixture
def restore_logging():
    """The CLI reconfigures the root logger; put the previous handlers back."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
