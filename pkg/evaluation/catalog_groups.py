"""
Catalog names grouped the way the tests iterate over them.
"""

UNITAL_ALGEBRAS = ["k1", "diag(2)", "diag(3)", "spin(2)", "spin(3)", "mat2sym"]
TRIPLES = ["rect(1,2)", "rect(2,2)"]
LIE_ALGEBRAS = ["sl2", "sl2_central", "abelian3", "abelian111", "sl4block", "sl3"]
ZERO_PERFECT_LIE = ["sl2", "abelian3", "sl4block"]
PAIR_SOURCES = ["k1", "diag(2)", "spin(2)", "mat2sym", "rect(1,2)"]
