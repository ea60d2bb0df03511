"""
Permutations of ``{1, ..., n}`` in 1-line notation, stored as plain tuples.

Right multiplication by the generator ``s_i`` swaps the entries in positions
``i`` and ``i + 1``, so ``w`` has ``s_i`` as a right descent exactly when
``w[i-1] > w[i]`` (0-indexed storage, 1-indexed generators).

>>> compose((2, 1, 3), simple(2, 3))
(2, 3, 1)
>>> classify((4, 2, 3, 1)).freely_braided
False
"""

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, NewType, Optional

from .errors import InvalidPermutation, RankCapExceeded, RankMismatch

__all__ = [
    "Permutation", "PatternInstance", "Classification",
    "MC_PATTERNS", "FB_PATTERNS", "HEXAGON", "HEXAGON_PATTERNS",
    "MC_HEXAGON_PATTERNS", "PATTERN_RANK_CAP",
    "identity", "simple", "check", "compose", "inverse", "times_simple",
    "length", "right_descents", "contains_pattern", "avoids", "avoids_all",
    "count_321", "classify", "all_perms", "oneline_str",
]

# a permutation of {1..n} in 1-line notation
Permutation = NewType("Permutation", tuple)

# increasing 1-indexed positions (i_1, ..., i_k)
PatternInstance = NewType("PatternInstance", tuple)

MC_PATTERNS = ((3, 4, 2, 1), (4, 3, 1, 2), (4, 3, 2, 1))
FB_PATTERNS = ((4, 2, 3, 1),) + MC_PATTERNS
HEXAGON = (4, 6, 7, 1, 8, 2, 3, 5)
HEXAGON_PATTERNS = (
    (4, 6, 7, 1, 8, 2, 3, 5),
    (4, 6, 7, 8, 1, 2, 3, 5),
    (5, 6, 7, 1, 8, 2, 3, 4),
    (5, 6, 7, 8, 1, 2, 3, 4),
)
MC_HEXAGON_PATTERNS = MC_PATTERNS + HEXAGON_PATTERNS

PATTERN_RANK_CAP = 12


def identity(n: int) -> tuple:
    return tuple(range(1, n + 1))


def simple(i: int, n: int) -> tuple:
    """The adjacent transposition ``s_i`` in ``S_n``."""
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def check(w) -> tuple:
    """Validate ``w`` as a bijection on ``{1..n}`` and return it as a tuple."""
    w = tuple(w)
    if not w:
        raise InvalidPermutation("empty permutation", position=0)
    seen = set()
    for pos, v in enumerate(w, 1):
        if not isinstance(v, int) or not 1 <= v <= len(w) or v in seen:
            raise InvalidPermutation(
                f"entry {v!r} at position {pos} breaks bijectivity on 1..{len(w)}",
                position=pos)
        seen.add(v)
    return w


def compose(u, v) -> tuple:
    """Return ``u ∘ v``, i.e. ``i -> u(v(i))``."""
    if len(u) != len(v):
        raise RankMismatch(f"ranks differ: {len(u)} vs {len(v)}")
    return tuple(u[j - 1] for j in v)


def inverse(w) -> tuple:
    inv = [0] * len(w)
    for i, v in enumerate(w, 1):
        inv[v - 1] = i
    return tuple(inv)


def times_simple(w, i: int) -> tuple:
    """Right multiplication ``w s_i``: swap positions ``i`` and ``i+1``."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def length(w) -> int:
    """Coxeter length, i.e. the number of inversions."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def right_descents(w) -> frozenset:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def _matches(vals, order) -> bool:
    # order lists pattern positions by increasing pattern value
    prev = vals[order[0]]
    for a in order[1:]:
        cur = vals[a]
        if cur < prev:
            return False
        prev = cur
    return True


def contains_pattern(w, p) -> Optional[tuple]:
    """
    Return the lexicographically smallest instance of the 1-line pattern
    ``p`` in ``w`` as 1-indexed positions, or ``None`` if ``w`` avoids ``p``.

    >>> contains_pattern((5, 3, 2, 4, 1), (3, 2, 1))
    (1, 2, 3)
    >>> contains_pattern((3, 4, 1, 2), (3, 2, 1)) is None
    True
    """
    n, k = len(w), len(p)
    if n > PATTERN_RANK_CAP:
        raise RankCapExceeded(f"pattern search capped at rank {PATTERN_RANK_CAP}")
    if k > n:
        return None
    order = sorted(range(k), key=lambda a: p[a])
    for idx in combinations(range(n), k):
        if _matches([w[i] for i in idx], order):
            return tuple(i + 1 for i in idx)
    return None


def avoids(w, p) -> bool:
    return contains_pattern(w, p) is None


def avoids_all(w, patterns) -> bool:
    return all(contains_pattern(w, p) is None for p in patterns)


def count_321(w) -> int:
    """``N(w)``: the number of decreasing triples in the 1-line notation."""
    n = len(w)
    total = 0
    for j in range(1, n - 1):
        left = sum(1 for a in range(j) if w[a] > w[j])
        right = sum(1 for b in range(j + 1, n) if w[b] < w[j])
        total += left * right
    return total


@dataclass(frozen=True)
class Classification:
    fully_commutative: bool
    maximally_clustered: bool
    freely_braided: bool
    hexagon_pattern_free: bool
    mc_hexagon_avoiding: bool
    n321: int


def classify(w) -> Classification:
    """Classify ``w`` by classical pattern avoidance."""
    n321 = count_321(w)
    mc = avoids_all(w, MC_PATTERNS)
    fb = mc and avoids(w, (4, 2, 3, 1))
    hex_free = avoids_all(w, HEXAGON_PATTERNS)
    return Classification(
        fully_commutative=n321 == 0,
        maximally_clustered=mc,
        freely_braided=fb,
        hexagon_pattern_free=hex_free,
        mc_hexagon_avoiding=mc and hex_free,
        n321=n321,
    )


def all_perms(n: int) -> Iterator[tuple]:
    """All of ``S_n`` in lexicographic 1-line order."""
    return permutations(range(1, n + 1))


def oneline_str(w) -> str:
    """Compact ``3412`` form when ``n <= 9``, else comma separated."""
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)
