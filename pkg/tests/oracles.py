"""Brute-force reference computations, independent of the klmask code paths."""

from functools import lru_cache
from itertools import combinations, permutations, product


def perms(n):
    return list(permutations(range(1, n + 1)))


def inversions(w):
    return sum(1 for a, b in combinations(range(len(w)), 2) if w[a] > w[b])


def standardize(seq):
    ranks = sorted(seq)
    return tuple(ranks.index(v) + 1 for v in seq)


def pattern_instances(w, p):
    return [tuple(i + 1 for i in idx)
            for idx in combinations(range(len(w)), len(p))
            if standardize([w[i] for i in idx]) == tuple(p)]


def contains(w, p):
    return bool(pattern_instances(w, p))


def apply_word(word, n):
    w = list(range(1, n + 1))
    for i in word:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


@lru_cache(maxsize=None)
def reduced_words(w):
    """Every reduced word, by peeling right descents recursively."""
    if all(w[i] < w[i + 1] for i in range(len(w) - 1)):
        return ((),)
    out = []
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            u = list(w)
            u[i - 1], u[i] = u[i], u[i - 1]
            out.extend(word + (i,) for word in reduced_words(tuple(u)))
    return tuple(sorted(out))


def commutation_classes(w):
    """Partition of the reduced words of w under commuting moves."""
    words = set(reduced_words(w))
    classes = []
    while words:
        seed = words.pop()
        group, stack = {seed}, [seed]
        while stack:
            cur = stack.pop()
            for t in range(len(cur) - 1):
                if abs(cur[t] - cur[t + 1]) >= 2:
                    nxt = cur[:t] + (cur[t + 1], cur[t]) + cur[t + 2:]
                    if nxt not in group:
                        group.add(nxt)
                        stack.append(nxt)
        words -= group
        classes.append(frozenset(group))
    return classes


def bruhat_tableau(x, w):
    """Tableau criterion for Bruhat order in S_n."""
    n = len(w)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if (sum(1 for a in range(i) if x[a] >= k)
                    > sum(1 for a in range(i) if w[a] >= k)):
                return False
    return True


def subword_products(word, n):
    return {apply_word([c for c, b in zip(word, bits) if b], n)
            for bits in product((0, 1), repeat=len(word))}


def cluster_pattern(m):
    """The pattern (m+2) 2 3 ... (m+1) 1."""
    return (m + 2,) + tuple(range(2, m + 2)) + (1,)


def maximal_cluster_instances(w):
    """Instances of (m+2) 2 3 ... (m+1) 1, m >= 1, not inside a larger one."""
    found = []
    for m in range(1, len(w) - 1):
        found.extend(set(inst) for inst in pattern_instances(w, cluster_pattern(m)))
    return [s for s in found if not any(s < t for t in found)]


def catalan(n):
    from math import comb
    return comb(2 * n, n) // (n + 1)
