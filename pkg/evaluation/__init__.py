"""
Evaluation package for tkkforge.

This package provides:
- pytest suites for every package
- Catalog groupings shared by the suites
- An acceptance set of command-line runs with expected verdicts
"""
