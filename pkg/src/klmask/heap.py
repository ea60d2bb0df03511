"""
Heaps of reduced words in type A.

A heap is the labeled poset on the letters of a reduced word obtained from
``i < j`` whenever letters ``i`` and ``j`` do not commute.  Entries sit at
lattice points ``(column, level)`` with the column equal to the generator
index and the level equal to the length of the longest chain below the entry.

Order relations are kept as Python-int bitsets: bit ``i`` of ``below[j]`` is
set when entry ``i`` lies strictly below entry ``j``.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .errors import CapExceeded, MaskLengthMismatch, NotReduced
from .perm import HEXAGON, HEXAGON_PATTERNS, avoids_all, classify
from .words import evaluate, is_reduced, some_reduced_word

__all__ = [
    "Heap", "StringDiagram", "CoxeterShift", "DEFAULT_CLASS_CAP",
    "MAX_WORD_LENGTH", "heap_of", "class_key", "normal_word",
    "commutativity_classes", "linear_extensions", "heap_contains",
    "heap_avoids_hexagon", "string_diagram", "render_heap",
]

DEFAULT_CLASS_CAP = 10000
MAX_WORD_LENGTH = 24


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def class_key(word, n: int) -> tuple:
    """
    Commutation-class invariant: the projections of ``word`` onto every pair
    of adjacent generators.  Two words are related by commuting moves exactly
    when all projections agree.
    """
    return tuple(tuple(c for c in word if c == i or c == i + 1)
                 for i in range(1, max(n, 2)))


@dataclass(frozen=True, eq=False)
class Heap:
    n: int
    word: tuple
    entries: tuple            # (column, level) per letter, in word order
    covers: frozenset         # pairs (lower, upper) of entry indices
    below: tuple              # strict down-set bitsets
    above: tuple              # strict up-set bitsets
    key: tuple = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, Heap) and self.n == other.n and self.key == other.key

    def __hash__(self):
        return hash((self.n, self.key))

    def __len__(self):
        return len(self.word)

    def labels(self) -> tuple:
        return self.word

    def less(self, i: int, j: int) -> bool:
        return bool(self.below[j] >> i & 1)

    def column(self, x: int) -> list:
        """Entries of column ``x`` from bottom to top."""
        return [j for j, c in enumerate(self.word) if c == x]

    def permutation(self) -> tuple:
        return evaluate(self.word, self.n)


def _order(word):
    k = len(word)
    below = [0] * k
    for j in range(k):
        acc = 0
        for i in range(j):
            if abs(word[i] - word[j]) <= 1:
                acc |= below[i] | (1 << i)
        below[j] = acc
    above = [0] * k
    for j in range(k):
        for i in _bits(below[j]):
            above[i] |= 1 << j
    return below, above


def _build(word, n) -> Heap:
    word = tuple(word)
    below, above = _order(word)
    levels = []
    for j, c in enumerate(word):
        lvl = 0
        for i in range(j):
            if abs(word[i] - c) <= 1:
                lvl = max(lvl, levels[i] + 1)
        levels.append(lvl)
    covers = set()
    for j in range(len(word)):
        for i in _bits(below[j]):
            # i covers-below j when nothing sits strictly between them
            if not (above[i] & below[j]):
                covers.add((i, j))
    return Heap(
        n=n,
        word=word,
        entries=tuple(zip(word, levels)),
        covers=frozenset(covers),
        below=tuple(below),
        above=tuple(above),
        key=class_key(word, n),
    )


def heap_of(word, n: int) -> Heap:
    """
    Heap of a reduced word.

    >>> h = heap_of((2, 3, 1, 2, 4), 5)
    >>> h.entries
    ((2, 0), (3, 1), (1, 1), (2, 2), (4, 2))
    """
    if not is_reduced(word, n):
        raise NotReduced(f"word {tuple(word)} is not reduced in rank {n}")
    return _build(word, n)


def normal_word(word, n: int) -> tuple:
    """Lexicographically smallest word in the commutation class of ``word``."""
    below, _ = _order(word)
    placed = 0
    out = []
    remaining = set(range(len(word)))
    while remaining:
        best = min((j for j in remaining if below[j] & ~placed == 0),
                   key=lambda j: (word[j], j))
        out.append(word[best])
        placed |= 1 << best
        remaining.discard(best)
    return tuple(out)


def _braid_neighbours(h: Heap):
    """Words of the classes reachable from ``h`` by one braid move."""
    word = h.word
    k = len(word)
    for a in range(k):
        for c in range(a + 1, k):
            if word[c] != word[a] or not h.less(a, c):
                continue
            between = h.above[a] & h.below[c]
            if between & (between - 1):
                continue
            if not between:
                continue
            b = between.bit_length() - 1
            if abs(word[b] - word[a]) != 1:
                continue
            lower = [j for j in range(k) if j not in (a, b, c) and h.less(j, c)]
            rest = [j for j in range(k)
                    if j not in (a, b, c) and not h.less(j, c)]
            i, other = word[a], word[b]
            yield (tuple(word[j] for j in lower) + (other, i, other)
                   + tuple(word[j] for j in rest))


def commutativity_classes(w, cap: int = DEFAULT_CLASS_CAP) -> frozenset:
    """
    All heaps of ``w``, one per commutativity class of reduced words.

    >>> len(commutativity_classes((3, 2, 1, 4)))
    2
    """
    n = len(w)
    start = some_reduced_word(w)
    if len(start) > MAX_WORD_LENGTH:
        raise CapExceeded(f"length {len(start)} exceeds word cap {MAX_WORD_LENGTH}")
    first = _build(normal_word(start, n), n)
    seen = {first.key: first}
    queue = deque([first])
    while queue:
        h = queue.popleft()
        for word in _braid_neighbours(h):
            key = class_key(word, n)
            if key in seen:
                continue
            if len(seen) >= cap:
                raise CapExceeded(f"more than {cap} commutativity classes")
            nh = _build(normal_word(word, n), n)
            seen[key] = nh
            queue.append(nh)
    return frozenset(seen.values())


def linear_extensions(h: Heap):
    """Yield every linear extension of ``h`` as a word."""
    k = len(h.word)
    full = (1 << k) - 1

    def rec(placed, acc):
        if placed == full:
            yield tuple(acc)
            return
        for j in range(k):
            if not placed >> j & 1 and h.below[j] & ~placed == 0:
                acc.append(h.word[j])
                yield from rec(placed | 1 << j, acc)
                acc.pop()

    yield from rec(0, [])


@dataclass(frozen=True)
class CoxeterShift:
    """Orientation preserving embedding ``s_i -> s_{i+offset}``."""
    offset: int

    def __call__(self, i: int) -> int:
        return i + self.offset


def _embeddings(big: Heap, small: Heap, offset: int) -> Optional[dict]:
    """Find a convex labeled embedding of ``small`` shifted by ``offset``."""
    cols = sorted(set(small.word))
    if not cols:
        return {}
    small_cols = {c: small.column(c) for c in cols}
    big_cols = {c: big.column(c + offset) for c in cols}
    for c in cols:
        if len(big_cols[c]) < len(small_cols[c]):
            return None

    phi = {}

    def consistent(c):
        # compare against the already placed neighbour column c - 1
        if c - 1 not in small_cols:
            return True
        for e in small_cols[c]:
            for f in small_cols[c - 1]:
                if small.less(e, f) != big.less(phi[e], phi[f]):
                    return False
                if small.less(f, e) != big.less(phi[f], phi[e]):
                    return False
        return True

    def finish():
        image = 0
        for v in phi.values():
            image |= 1 << v
        for e, v in phi.items():
            mapped = 0
            for i in _bits(small.below[e]):
                mapped |= 1 << phi[i]
            if big.below[v] & image != mapped:
                return False
        up = down = 0
        for v in phi.values():
            up |= big.above[v]
            down |= big.below[v]
        return (up & down & ~image) == 0

    def rec(ci):
        if ci == len(cols):
            return finish()
        c = cols[ci]
        src, dst = small_cols[c], big_cols[c]
        # images inside one column must be consecutive, or convexity fails
        for start in range(len(dst) - len(src) + 1):
            for e, v in zip(src, dst[start:]):
                phi[e] = v
            if consistent(c) and rec(ci + 1):
                return True
        for e in src:
            phi.pop(e, None)
        return False

    return dict(phi) if rec(0) else None


def heap_contains(w, h, cap: int = DEFAULT_CLASS_CAP) -> bool:
    """
    Whether some heap of ``w`` contains a shifted heap of ``h`` as a convex
    labeled subposet.
    """
    n, r = len(w), len(h)
    if r > n:
        return False
    h_word = some_reduced_word(h)
    w_word = some_reduced_word(w)
    if len(h_word) > len(w_word):
        return False
    small_heaps = sorted(commutativity_classes(h, cap), key=lambda x: x.word)
    big_heaps = sorted(commutativity_classes(w, cap), key=lambda x: x.word)
    for offset in range(n - r + 1):
        for big in big_heaps:
            for small in small_heaps:
                if _embeddings(big, small, offset) is not None:
                    return True
    return False


def heap_avoids_hexagon(w, cap: int = DEFAULT_CLASS_CAP, method: str = "search") -> bool:
    """
    ``method="search"`` runs the convex-subposet search; ``"auto"`` switches
    to the four 1-line patterns for maximally-clustered ``w``.
    """
    if len(w) < len(HEXAGON):
        return True
    if method == "auto" and classify(w).maximally_clustered:
        return avoids_all(w, HEXAGON_PATTERNS)
    return not heap_contains(w, HEXAGON, cap)


@dataclass(frozen=True)
class StringDiagram:
    n: int
    strings: dict       # string id (bottom position) -> positions after each entry
    crossings: dict     # entry index -> (left string, right string)
    top: tuple          # string ids read left to right at the top


def string_diagram(heap: Heap, mask=None) -> StringDiagram:
    """
    Run strings upward through ``heap``: they cross at entries with mask value
    1 (every entry when ``mask`` is None) and bounce elsewhere.
    """
    if mask is not None and len(mask) != len(heap.word):
        raise MaskLengthMismatch(f"mask length {len(mask)} != {len(heap.word)}")
    arrangement = list(range(1, heap.n + 1))
    where = {s: [s] for s in arrangement}
    crossings = {}
    for j, c in enumerate(heap.word):
        if mask is None or mask[j]:
            left, right = arrangement[c - 1], arrangement[c]
            crossings[j] = (left, right)
            arrangement[c - 1], arrangement[c] = right, left
        for pos, s in enumerate(arrangement, 1):
            where[s].append(pos)
    return StringDiagram(
        n=heap.n,
        strings={s: tuple(p) for s, p in where.items()},
        crossings=crossings,
        top=tuple(arrangement),
    )


# Table 1 style markers
MARK_ONE, MARK_ZERO_DEFECT, MARK_PLAIN_ZERO, MARK_ENTRY, MARK_EMPTY = "#", "D", "o", "*", "."


def render_heap(heap: Heap, mask=None, defects=None) -> str:
    """
    ASCII lattice drawing, top level first.  With a mask, entries are marked
    ``#`` (value 1), ``D`` (zero-defect) or ``o`` (plain zero).
    """
    if mask is not None and len(mask) != len(heap.word):
        raise MaskLengthMismatch(f"mask length {len(mask)} != {len(heap.word)}")
    defects = set(defects or ())
    cols = range(1, heap.n)
    width = max(3, len(str(heap.n - 1)) + 2)
    grid = {}
    for j, (x, y) in enumerate(heap.entries):
        if mask is None:
            mark = MARK_ENTRY
        elif mask[j]:
            mark = MARK_ONE
        else:
            mark = MARK_ZERO_DEFECT if (j + 1) in defects else MARK_PLAIN_ZERO
        grid[x, y] = mark
    top = max((y for _, y in heap.entries), default=-1)
    lines = []
    for y in range(top, -1, -1):
        row = "".join(grid.get((x, y), MARK_EMPTY).center(width) for x in cols)
        lines.append(row.rstrip())
    lines.append("".join(f"s{x}".center(width) for x in cols).rstrip())
    return "\n".join(lines)
