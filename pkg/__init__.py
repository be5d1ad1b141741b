"""
tkkforge - exact TKK and universal TKK constructions

Builds the Tits-Kantor-Koecher algebra and its universal central
0-extension from Jordan pairs, triple systems and unital Jordan algebras
given by structure constants, computes graded second homology, and
checks the equivalences between Jordan and 3-graded Lie data instance
by instance.
"""

__version__ = "1.0.0"
__author__ = "tkkforge developers"
