"""
Kazhdan-Lusztig polynomials for maximally-clustered hexagon-avoiding
permutations from the 10*-avoiding mask set, plus the surrounding
combinatorics: pattern classes, contracted reduced expressions and heaps.
"""

from .cluster import contract, verify_decomposition
from .hecke import LaurentPoly, HeckeElement, cprime
from .kl import kl_masks, kl_recursion, kl_table, verify
from .perm import classify, contains_pattern, count_321, length

__version__ = "0.1.0"

__all__ = [
    "contract", "verify_decomposition", "LaurentPoly", "HeckeElement",
    "cprime", "kl_masks", "kl_recursion", "kl_table", "verify",
    "classify", "contains_pattern", "count_321", "length",
]
