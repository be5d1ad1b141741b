"""
File format, example catalog, reports and the tkkforge command line.
"""

from .fileformat import AlgebraFile, digest, emit, from_structure, parse, to_structure
from .catalog import catalog, catalog_names, catalog_structure
from .reports import Report, Verdict

__all__ = [
    "AlgebraFile",
    "digest",
    "emit",
    "from_structure",
    "parse",
    "to_structure",
    "catalog",
    "catalog_names",
    "catalog_structure",
    "Report",
    "Verdict",
]
