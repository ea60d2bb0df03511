"""
Masks on a fixed reduced word.

A mask is a tuple of 0/1 values aligned with the letters of the word.  The
subexpression it selects multiplies the letters with mask value 1; position
``j`` is a defect when the letter ``w_j`` is a right descent of the prefix
product before it, independently of the value at ``j``.

Sums over large mask sets go through a prefix dynamic program keyed on the
running product, so the cost tracks the Bruhat interval below ``w`` rather
than ``2**len(word)``.  :func:`enumerate_masks` is the explicit stream used to
cross-check it.
"""

from collections import defaultdict
from dataclasses import dataclass
from itertools import product

from .cluster import BraidCluster, ClusterDecomposition
from .errors import LengthCapExceeded, MaskLengthMismatch, No10StarInstance
from .perm import identity, times_simple
from .words import some_reduced_word

__all__ = [
    "MaskStats", "PhiSite", "MASK_LENGTH_CAP",
    "subword_eval", "defect_stats", "ten_star_sites", "is_10star_avoiding",
    "enumerate_masks", "deodhar_bound_holds", "mask_sum", "bound_violations",
    "is_deodhar_element", "phi_site", "phi_collapse", "phi_expand",
    "format_mask", "parse_mask",
]

MASK_LENGTH_CAP = 24


def _check(word, mask):
    if len(mask) != len(word):
        raise MaskLengthMismatch(f"mask length {len(mask)} != word length {len(word)}")


def subword_eval(word, mask, n: int) -> tuple:
    """
    >>> subword_eval((1, 2, 1), (1, 0, 1), 3)
    (1, 2, 3)
    """
    _check(word, mask)
    u = list(range(1, n + 1))
    for s, bit in zip(word, mask):
        if bit:
            u[s - 1], u[s] = u[s], u[s - 1]
    return tuple(u)


@dataclass(frozen=True)
class MaskStats:
    defect_positions: frozenset    # 1-indexed
    zero_defects: int
    plain_zeros: int

    @property
    def d(self) -> int:
        return len(self.defect_positions)


def defect_stats(word, mask, n: int) -> MaskStats:
    """
    >>> st = defect_stats((1, 2, 1), (1, 0, 0), 3)
    >>> sorted(st.defect_positions), st.zero_defects, st.plain_zeros
    ([3], 1, 1)
    """
    _check(word, mask)
    u = list(range(1, n + 1))
    defects = set()
    zd = pz = 0
    for j, (s, bit) in enumerate(zip(word, mask), 1):
        defect = u[s - 1] > u[s]
        if defect:
            defects.add(j)
        if bit:
            u[s - 1], u[s] = u[s], u[s - 1]
        elif defect:
            zd += 1
        else:
            pz += 1
    return MaskStats(frozenset(defects), zd, pz)


def ten_star_sites(d: ClusterDecomposition, mask) -> list:
    """0-indexed central-braid starts carrying the values ``1, 0``."""
    _check(d.word, mask)
    return sorted(p for p in d.central_starts if mask[p] == 1 and mask[p + 1] == 0)


def is_10star_avoiding(d: ClusterDecomposition, mask) -> bool:
    return not ten_star_sites(d, mask)


def enumerate_masks(d, filter: str = "10star"):
    """
    Stream masks on ``d.word`` as a binary counter, position 1 most
    significant.  ``filter`` is ``"10star"`` or ``"all"``.
    """
    word = d.word
    if len(word) > MASK_LENGTH_CAP:
        raise LengthCapExceeded(f"{len(word)} letters exceeds mask cap {MASK_LENGTH_CAP}")
    starts = sorted(d.central_starts) if filter == "10star" else []
    if filter not in ("10star", "all"):
        raise ValueError(f"unknown filter {filter!r}")
    for mask in product((0, 1), repeat=len(word)):
        if any(mask[p] == 1 and mask[p + 1] == 0 for p in starts):
            continue
        yield mask


def deodhar_bound_holds(stats: MaskStats, proper: bool = True) -> bool:
    """Zero-defects strictly fewer than plain-zeros; the full mask is exempt."""
    if not proper:
        return True
    return stats.zero_defects < stats.plain_zeros


def mask_sum(word, n: int, central_starts=frozenset()) -> dict:
    """
    Map each ``x`` to ``{d: number of masks with w^σ = x and d(σ) = d}``,
    restricted to masks avoiding ``1, 0`` at every position pair
    ``(p, p+1)`` with ``p`` in ``central_starts``.
    """
    seconds = {p + 1 for p in central_starts}
    states = {(identity(n), 0): {0: 1}}
    for j, s in enumerate(word):
        record = j in central_starts
        guarded = j in seconds
        nxt = defaultdict(lambda: defaultdict(int))
        for (u, flag), poly in states.items():
            defect = 1 if u[s - 1] > u[s] else 0
            if not (guarded and flag):
                tgt = nxt[u, 0]
                for dd, c in poly.items():
                    tgt[dd + defect] += c
            tgt = nxt[times_simple(u, s), 1 if record else 0]
            for dd, c in poly.items():
                tgt[dd + defect] += c
        states = nxt
    out = defaultdict(lambda: defaultdict(int))
    for (u, _), poly in states.items():
        for dd, c in poly.items():
            out[u][dd] += c
    return {u: dict(p) for u, p in out.items()}


def bound_violations(word, n: int, central_starts=frozenset()) -> int:
    """Number of proper masks in the filtered set breaking the Deodhar bound."""
    seconds = {p + 1 for p in central_starts}
    # (prefix product, last recorded bit, zero_defects - plain_zeros, all ones so far)
    states = {(identity(n), 0, 0, True): 1}
    for j, s in enumerate(word):
        record = j in central_starts
        guarded = j in seconds
        nxt = defaultdict(int)
        for (u, flag, diff, ones), cnt in states.items():
            defect = u[s - 1] > u[s]
            if not (guarded and flag):
                nxt[u, 0, diff + (1 if defect else -1), False] += cnt
            nxt[times_simple(u, s), 1 if record else 0, diff, ones] += cnt
        states = nxt
    return sum(cnt for (_, _, diff, ones), cnt in states.items()
               if not ones and diff >= 0)


def is_deodhar_element(w) -> bool:
    """Whether every proper mask on the canonical reduced word meets the bound."""
    word = some_reduced_word(w)
    if len(word) > MASK_LENGTH_CAP:
        raise LengthCapExceeded(f"length {len(word)} exceeds cap {MASK_LENGTH_CAP}")
    return bound_violations(word, len(w)) == 0


@dataclass(frozen=True)
class PhiSite:
    position: int   # 0-indexed start of the collapsed segment
    k: int          # segment spans 2k + 1 letters


def phi_site(d: ClusterDecomposition, mask) -> PhiSite:
    """Segment collapsed by :func:`phi_collapse` for the rightmost 10*-instance."""
    sites = ten_star_sites(d, mask)
    if not sites:
        raise No10StarInstance("mask has no 10*-instance")
    b = sites[-1]
    start, c = next((s, c) for s, c in d.clusters if s + c.k - 1 == b)
    end = start + 2 * c.k
    k = 1
    while (b - k >= start and b + k + 2 <= end
           and mask[b - k] == 1 and mask[b + k + 1] == 1):
        k += 1
    return PhiSite(b - k + 1, k)


def phi_collapse(d: ClusterDecomposition, mask):
    """
    Collapse the maximal symmetric run of 1s around the rightmost
    10*-instance to its first letter, carrying the flipped final bit.

    >>> from klmask.cluster import contract
    >>> d2, m2 = phi_collapse(contract((3, 2, 1)), (1, 0, 1))
    >>> d2.word, m2
    ((1,), (0,))
    """
    site = phi_site(d, mask)
    p, k = site.position, site.k
    last = p + 2 * k
    word = d.word[:p + 1] + d.word[last + 1:]
    new_mask = tuple(mask[:p]) + (1 - mask[last],) + tuple(mask[last + 1:])
    clusters = []
    for start, c in d.clusters:
        if start <= p <= start + 2 * c.k:
            if c.k > k:
                clusters.append((start, BraidCluster(c.m, c.k - k)))
        elif start > p:
            clusters.append((start - 2 * k, c))
        else:
            clusters.append((start, c))
    return ClusterDecomposition(d.n, word, tuple(clusters)), new_mask


def phi_expand(d: ClusterDecomposition, mask, site: PhiSite):
    """Inverse of :func:`phi_collapse` given the collapsed site."""
    p, k = site.position, site.k
    i = d.word[p]
    up = tuple(range(i, i + k + 1))
    segment = up + up[-2::-1]
    seg_mask = (1,) * k + (0,) + (1,) * (k - 1) + (1 - mask[p],)
    word = d.word[:p] + segment + d.word[p + 1:]
    new_mask = tuple(mask[:p]) + seg_mask + tuple(mask[p + 1:])
    clusters = []
    grown = False
    for start, c in d.clusters:
        if start <= p <= start + 2 * c.k:
            clusters.append((start, BraidCluster(c.m, c.k + k)))
            grown = True
        elif start > p:
            clusters.append((start + 2 * k, c))
        else:
            clusters.append((start, c))
    if not grown:
        clusters.append((p, BraidCluster(i - 1, k)))
        clusters.sort()
    return ClusterDecomposition(d.n, word, tuple(clusters)), new_mask


def format_mask(mask) -> str:
    return "".join(str(b) for b in mask)


def parse_mask(text: str) -> tuple:
    text = text.strip()
    if any(ch not in "01" for ch in text):
        raise ValueError(f"mask {text!r} must be a 0/1 string")
    return tuple(int(ch) for ch in text)
