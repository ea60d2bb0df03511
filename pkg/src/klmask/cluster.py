"""
Braid clusters and contracted reduced expressions.

A contracted expression ``a_0 c_1 a_1 ... c_M a_M`` is stored as its word
plus the list of cluster spans; the filler segments ``a_j`` are the gaps.
Cluster ``(start, m, k)`` occupies word positions ``start .. start + 2k``
(0-indexed) with letters ``s_{m+1} ... s_{m+k+1} ... s_{m+1}``.

:func:`contract` builds the expression from the 1-line notation by a
sequence of length-decreasing moves; the recorded moves, read backwards, give
the reduced word.
"""

from dataclasses import dataclass

from .errors import NoClusters, NotABraidCluster, NotMaximallyClustered
from .perm import MC_PATTERNS, avoids_all, count_321
from .words import evaluate, is_reduced, some_reduced_word

__all__ = [
    "BraidCluster", "ClusterDecomposition", "DecompositionCheck",
    "contract", "canonicalize_cluster", "verify_decomposition",
    "truncate_last_cluster", "has_short_braid",
]


@dataclass(frozen=True)
class BraidCluster:
    m: int
    k: int

    @property
    def letters(self) -> tuple:
        up = tuple(range(self.m + 1, self.m + self.k + 2))
        return up + up[-2::-1]

    @property
    def generators(self) -> frozenset:
        return frozenset(range(self.m + 1, self.m + self.k + 2))


@dataclass(frozen=True)
class ClusterDecomposition:
    n: int
    word: tuple
    clusters: tuple     # ((start, BraidCluster), ...) sorted by start

    @property
    def M(self) -> int:
        return len(self.clusters)

    def permutation(self) -> tuple:
        return evaluate(self.word, self.n)

    @property
    def segments(self) -> tuple:
        """
        Alternating ``("a", lo, hi)`` / ``("c", lo, hi)`` half-open index
        ranges covering the word, starting and ending with a filler.
        """
        out = []
        pos = 0
        for start, c in self.clusters:
            out.append(("a", pos, start))
            out.append(("c", start, start + 2 * c.k + 1))
            pos = start + 2 * c.k + 1
        out.append(("a", pos, len(self.word)))
        return tuple(out)

    @property
    def central_positions(self) -> tuple:
        """1-indexed positions ``(p, p+1, p+2)`` of every central braid."""
        return tuple((start + c.k, start + c.k + 1, start + c.k + 2)
                     for start, c in self.clusters)

    @property
    def central_starts(self) -> frozenset:
        """0-indexed word positions of the first letter of each central braid."""
        return frozenset(start + c.k - 1 for start, c in self.clusters)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "word": list(self.word),
            "segments": [{"kind": kind, "start": lo, "stop": hi}
                         for kind, lo, hi in self.segments],
            "clusters": [{"start": s, "m": c.m, "k": c.k}
                         for s, c in self.clusters],
            "central_positions": [list(t) for t in self.central_positions],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ClusterDecomposition":
        return cls(
            n=data["n"],
            word=tuple(data["word"]),
            clusters=tuple((c["start"], BraidCluster(c["m"], c["k"]))
                           for c in data["clusters"]),
        )


class _Mover:
    """1-line notation plus the record of applied length-decreasing moves."""

    def __init__(self, w):
        self.cur = list(w)
        self.moves = []
        self.clusters = []   # (move index, m, k)

    def swap(self, p):
        # p is a 0-indexed position; the generator is s_{p+1}
        cur = self.cur
        assert cur[p] > cur[p + 1], "move must decrease length"
        cur[p], cur[p + 1] = cur[p + 1], cur[p]
        self.moves.append(p + 1)

    def cluster(self, p0, k):
        """Undo the consecutive ``(k+2) 2 3 ... (k+1) 1`` block at ``p0``."""
        block = self.cur[p0:p0 + k + 2]
        assert block[0] == max(block) and block[-1] == min(block)
        assert all(a < b for a, b in zip(block[1:-1], block[2:-1]))
        self.clusters.append((len(self.moves), p0, k))
        for p in range(p0, p0 + k + 1):
            self.swap(p)
        for p in range(p0 + k - 1, p0 - 1, -1):
            self.swap(p)

    def bring_right(self, src, dst):
        """Move the entry at ``src`` right until it sits at ``dst``."""
        while src < dst:
            self.swap(src)
            src += 1


def _leftmost_321(cur):
    n = len(cur)
    for j in range(1, n - 1):
        lefts = [a for a in range(j) if cur[a] > cur[j]]
        if not lefts:
            continue
        rights = [c for c in range(j + 1, n) if cur[c] < cur[j]]
        if rights:
            if len(lefts) != 1 or len(rights) != 1:
                raise NotMaximallyClustered(
                    f"entry at position {j + 1} plays the 2 in several [321]-instances")
            return lefts[0], j, rights[0]
    return None


def contract(w) -> ClusterDecomposition:
    """
    Contracted reduced expression of a maximally-clustered permutation.

    >>> d = contract((4, 2, 3, 1))
    >>> d.word, d.clusters
    ((1, 2, 3, 2, 1), ((0, BraidCluster(m=0, k=2)),))
    """
    w = tuple(w)
    if not avoids_all(w, MC_PATTERNS):
        raise NotMaximallyClustered(f"{w} contains one of 3421, 4312, 4321")
    mv = _Mover(w)
    cur = mv.cur
    while True:
        inst = _leftmost_321(cur)
        if inst is None:
            break
        i, j, k = inst
        mv.bring_right(i, j - 1)
        three = cur[j - 1]
        h = next((p for p in range(j + 1, k) if cur[p] > three), k)
        pos = k
        one = cur[k]
        while pos > h:
            e = cur[pos - 1]
            bigger = [p for p in range(pos - 1) if cur[p] > e]
            if bigger:
                # e is a 2 for some other instance that ends in our 1
                z = bigger[0]
                twos = [p for p in range(z + 1, pos) if one < cur[p] < cur[z]]
                first = twos[0]
                assert twos == list(range(first, pos))
                mv.bring_right(z, first - 1)
                mv.cluster(first - 1, pos - first)
                pos = first - 1
            else:
                mv.swap(pos - 1)
                pos -= 1
        mv.cluster(j - 1, h - j)
    for letter in reversed(some_reduced_word(tuple(cur))):
        mv.swap(letter - 1)

    L = len(mv.moves)
    word = tuple(reversed(mv.moves))
    clusters = sorted((L - 1 - (t + 2 * k), BraidCluster(p0, k))
                      for t, p0, k in mv.clusters)
    return ClusterDecomposition(n=len(w), word=word, clusters=tuple(clusters))


def _is_cluster_shape(word) -> bool:
    L = len(word)
    if L % 2 == 0 or tuple(word) != tuple(reversed(word)):
        return False
    k = L // 2
    half = word[:k + 1]
    for p in range(k):
        partners = [q for q in range(p + 1, k + 1) if abs(half[p] - half[q]) == 1]
        if len(partners) != 1:
            return False
    return True


def canonicalize_cluster(word) -> BraidCluster:
    """
    Canonical form ``s_{m+1} ... s_{m+k+1} ... s_{m+1}`` of a braid cluster.

    >>> canonicalize_cluster((3, 2, 3)).letters
    (2, 3, 2)
    """
    word = tuple(word)
    if not word or not _is_cluster_shape(word):
        raise NotABraidCluster(f"{word} is not a braid cluster")
    n = max(word) + 1
    if not is_reduced(word, n):
        raise NotABraidCluster(f"{word} is not reduced")
    k = len(word) // 2
    lo, hi = min(word), max(word)
    if hi - lo != k:
        raise NotABraidCluster(f"{word} does not have interval support of size {k + 1}")
    canon = BraidCluster(lo - 1, k)
    if evaluate(canon.letters, n) != evaluate(word, n):
        raise NotABraidCluster(f"{word} does not match its canonical form")
    return canon


def has_short_braid(word) -> bool:
    return any(word[t] == word[t + 2] and abs(word[t] - word[t + 1]) == 1
               for t in range(len(word) - 2))


@dataclass(frozen=True)
class DecompositionCheck:
    ok: bool
    reasons: tuple

    def __bool__(self):
        return self.ok


def verify_decomposition(d: ClusterDecomposition) -> DecompositionCheck:
    """Check every structural invariant of a contracted expression."""
    reasons = []
    word, n = d.word, d.n
    if any(not 1 <= c <= n - 1 for c in word):
        return DecompositionCheck(False, ("letter out of range",))
    if not is_reduced(word, n):
        reasons.append("word is not reduced")
    prev_end = 0
    for start, c in d.clusters:
        end = start + 2 * c.k + 1
        if start < prev_end or end > len(word):
            reasons.append(f"cluster at {start} overlaps or overruns the word")
            continue
        prev_end = end
        if c.k < 1:
            reasons.append(f"cluster at {start} has k={c.k}")
        if word[start:end] != c.letters:
            reasons.append(f"cluster at {start} is not canonical")
        others = word[:start] + word[end:]
        shared = c.generators.intersection(others)
        if shared:
            reasons.append(f"cluster at {start} shares generators {sorted(shared)}")
    for kind, lo, hi in d.segments:
        if kind == "a" and has_short_braid(word[lo:hi]):
            reasons.append(f"filler {lo}:{hi} contains a short braid")
    total = sum(c.k for _, c in d.clusters)
    if not reasons or "word is not reduced" not in reasons:
        n321 = count_321(evaluate(word, n))
        if total != n321:
            reasons.append(f"sum of k is {total} but N(w) = {n321}")
    return DecompositionCheck(not reasons, tuple(reasons))


def truncate_last_cluster(d: ClusterDecomposition) -> ClusterDecomposition:
    """Drop the final ``k`` letters of the last cluster."""
    if not d.clusters:
        raise NoClusters("decomposition has no clusters")
    start, c = d.clusters[-1]
    cut = start + c.k + 1
    word = d.word[:cut] + d.word[cut + c.k:]
    return ClusterDecomposition(n=d.n, word=word, clusters=d.clusters[:-1])
