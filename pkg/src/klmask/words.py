"""
Words in the generators ``s_1, ..., s_{n-1}``: evaluation, reducedness,
canonical reduced words, support and Bruhat order.

Words are tuples of generator indices; the rank ``n`` travels alongside.

>>> evaluate((2, 3, 1, 2), 4)
(3, 4, 1, 2)
>>> some_reduced_word((3, 2, 1))
(1, 2, 1)
"""

from dataclasses import dataclass

from .errors import LetterOutOfRange, RankMismatch
from .perm import identity, length

__all__ = [
    "Support", "evaluate", "is_reduced", "some_reduced_word", "support",
    "bruhat_leq", "lower_interval", "format_word", "parse_word",
]


@dataclass(frozen=True)
class Support:
    generators: frozenset
    connected: bool


def evaluate(word, n: int) -> tuple:
    """Multiply the letters of ``word`` left to right, starting at the identity."""
    w = list(range(1, n + 1))
    for i in word:
        if not 1 <= i <= n - 1:
            raise LetterOutOfRange(f"letter {i} outside 1..{n - 1}")
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def is_reduced(word, n: int) -> bool:
    return length(evaluate(word, n)) == len(word)


def some_reduced_word(w) -> tuple:
    """
    Strip the smallest right descent until the identity is reached and read
    the stripped letters backwards.
    """
    cur = list(w)
    letters = []
    while True:
        for i in range(1, len(cur)):
            if cur[i - 1] > cur[i]:
                cur[i - 1], cur[i] = cur[i], cur[i - 1]
                letters.append(i)
                break
        else:
            break
    return tuple(reversed(letters))


def support(w) -> Support:
    gens = frozenset(some_reduced_word(w))
    connected = not gens or max(gens) - min(gens) + 1 == len(gens)
    return Support(gens, connected)


def bruhat_leq(x, w) -> bool:
    """
    Test ``x <= w`` by greedily matching ``x`` against one reduced word of
    ``w``, read from the right.
    """
    if len(x) != len(w):
        raise RankMismatch(f"ranks differ: {len(x)} vs {len(w)}")
    u = list(x)
    for i in reversed(some_reduced_word(w)):
        if u[i - 1] > u[i]:
            u[i - 1], u[i] = u[i], u[i - 1]
    return tuple(u) == identity(len(x))


def lower_interval(w) -> frozenset:
    """All ``x <= w``, built as the set of subword products of one reduced word."""
    elems = {identity(len(w))}
    for i in some_reduced_word(w):
        grown = set(elems)
        for u in elems:
            lst = list(u)
            lst[i - 1], lst[i] = lst[i], lst[i - 1]
            grown.add(tuple(lst))
        elems = grown
    return frozenset(elems)


def format_word(word) -> str:
    return ",".join(str(i) for i in word)


def parse_word(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))
