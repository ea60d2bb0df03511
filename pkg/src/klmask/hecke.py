"""
Exact Hecke algebra arithmetic for the symmetric group.

Coefficients live in ``Z[v, v^-1]`` with ``v = q^(1/2)``; a
:class:`LaurentPoly` stores its nonzero coefficients keyed by the power of
``v``.  Hecke elements are finite maps from permutations (1-line tuples) to
coefficients in the ``T`` basis.
"""

from fractions import Fraction
from functools import lru_cache

from .cluster import contract
from .errors import NotMCHexagonAvoiding, RankMismatch
from .mask import mask_sum, subword_eval, defect_stats
from .perm import classify, identity, length, times_simple
from .words import some_reduced_word

__all__ = [
    "LaurentPoly", "HeckeElement", "ZERO", "ONE", "V", "Q",
    "T", "t_multiply_right", "bar_involution", "is_bar_invariant",
    "h_of_masks", "h_from_sums", "cprime", "cprime_product", "ensure_mc_hexagon_avoiding",
]


class LaurentPoly:
    """
    Integer Laurent polynomial in ``v``.

    >>> q = LaurentPoly({2: 1})
    >>> str(q.bar())
    'q^{-1}'
    >>> str(LaurentPoly({0: 1}) + q)
    '1 + q'
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = {int(e): int(c) for e, c in dict(coeffs).items() if c}
        self._hash = None

    @classmethod
    def from_q(cls, coeffs) -> "LaurentPoly":
        """Polynomial in ``q`` from its coefficient list, constant term first."""
        return cls({2 * i: c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by ``v**e``."""
        return LaurentPoly({k + e: c for k, c in self._c.items()})

    def bar(self) -> "LaurentPoly":
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def is_q_polynomial(self) -> bool:
        """Only even, nonnegative powers of ``v``."""
        return all(e >= 0 and e % 2 == 0 for e in self._c)

    def q_degree(self):
        """Degree in ``q`` as a Fraction (``None`` for zero)."""
        if not self._c:
            return None
        return Fraction(max(self._c), 2)

    def q_coefficients(self) -> list:
        """Coefficient list in ``q`` for a polynomial in ``q``."""
        if not self._c:
            return []
        assert self.is_q_polynomial()
        top = max(self._c) // 2
        return [self._c.get(2 * i, 0) for i in range(top + 1)]

    def __repr__(self):
        return f"LaurentPoly({self._c!r})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> dict:
        return {str(e): c for e, c in self.items()}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls({int(e): c for e, c in data.items()})


def _q_power(e: int) -> str:
    if e == 0:
        return ""
    if e == 2:
        return "q"
    if e % 2 == 0 and e > 0:
        return f"q^{e // 2}"
    if e % 2 == 0:
        return f"q^{{{e // 2}}}"
    return f"q^{{{e}/2}}"


def format_poly(p: LaurentPoly) -> str:
    """Render in powers of ``q``, lowest power first."""
    if not p:
        return "0"
    parts = []
    for e, c in p.items():
        mono = _q_power(e)
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
V = LaurentPoly({1: 1})
Q = LaurentPoly({2: 1})
_Q_INV = LaurentPoly({-2: 1})
_Q_INV_MINUS_ONE = LaurentPoly({-2: 1, 0: -1})
_Q_MINUS_ONE = LaurentPoly({2: 1, 0: -1})


class HeckeElement:
    """Finite ``T``-basis expansion; all permutations share one rank."""

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms=None):
        self.n = n
        self._t = {}
        for x, c in dict(terms or {}).items():
            if len(x) != n:
                raise RankMismatch(f"term {x} not in rank {n}")
            if not isinstance(c, LaurentPoly):
                c = LaurentPoly(c)
            if c:
                self._t[tuple(x)] = c

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def coefficient(self, x) -> LaurentPoly:
        return self._t.get(tuple(x), ZERO)

    def items(self):
        return sorted(self._t.items(), key=lambda kv: (length(kv[0]), kv[0]))

    def __len__(self):
        return len(self._t)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self._t == other._t

    def __add__(self, other):
        if self.n != other.n:
            raise RankMismatch(f"ranks differ: {self.n} vs {other.n}")
        out = dict(self._t)
        for x, c in other._t.items():
            out[x] = out.get(x, ZERO) + c
        return HeckeElement(self.n, out)

    def __neg__(self):
        return HeckeElement(self.n, {x: -c for x, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: LaurentPoly) -> "HeckeElement":
        return HeckeElement(self.n, {x: p * c for x, p in self._t.items()})

    def __repr__(self):
        inner = " + ".join(f"({c})T{x}" for x, c in self.items())
        return f"HeckeElement(n={self.n}: {inner or '0'})"

    def to_json(self) -> list:
        return [{"x": list(x), "coefficient": c.to_json()} for x, c in self.items()]


def T(x) -> HeckeElement:
    return HeckeElement(len(x), {tuple(x): ONE})


def t_multiply_right(h: HeckeElement, i: int) -> HeckeElement:
    """``h * T_{s_i}``."""
    out = {}
    for x, c in h._t.items():
        xs = times_simple(x, i)
        if x[i - 1] < x[i]:
            out[xs] = out.get(xs, ZERO) + c
        else:
            out[x] = out.get(x, ZERO) + c * _Q_MINUS_ONE
            out[xs] = out.get(xs, ZERO) + c * Q
    return HeckeElement(h.n, out)


def _times_inverse_generator(h: HeckeElement, i: int) -> HeckeElement:
    # T_s^{-1} = q^{-1} T_s + (q^{-1} - 1) T_1
    return t_multiply_right(h, i).scale(_Q_INV) + h.scale(_Q_INV_MINUS_ONE)


@lru_cache(maxsize=None)
def _bar_T(x: tuple) -> HeckeElement:
    h = T(identity(len(x)))
    for i in some_reduced_word(x):
        h = _times_inverse_generator(h, i)
    return h


def bar_involution(h: HeckeElement) -> HeckeElement:
    out = {}
    for x, c in h._t.items():
        cb = c.bar()
        for y, p in _bar_T(x)._t.items():
            out[y] = out.get(y, ZERO) + cb * p
    return HeckeElement(h.n, out)


def is_bar_invariant(h: HeckeElement) -> bool:
    return bar_involution(h) == h


def h_of_masks(d, masks) -> HeckeElement:
    """
    ``q^{-l/2} * sum over masks of q^{d(σ)} T_{w^σ}`` for an explicit stream
    of masks on ``d.word``.

    >>> from klmask.cluster import ClusterDecomposition
    >>> h_of_masks(ClusterDecomposition(2, (1,), ()), [(0,), (1,)])
    HeckeElement(n=2: (q^{-1/2})T(1, 2) + (q^{-1/2})T(2, 1))
    """
    word, n = d.word, d.n
    out = {}
    for mask in masks:
        x = subword_eval(word, mask, n)
        d = defect_stats(word, mask, n).d
        out[x] = out.get(x, ZERO) + LaurentPoly({2 * d - len(word): 1})
    return HeckeElement(n, out)


def h_from_sums(sums: dict, n: int, ell: int) -> HeckeElement:
    """Hecke element from :func:`klmask.mask.mask_sum` output."""
    return HeckeElement(n, {
        x: LaurentPoly({2 * d - ell: c for d, c in poly.items()})
        for x, poly in sums.items()
    })


def ensure_mc_hexagon_avoiding(w):
    if not classify(w).mc_hexagon_avoiding:
        raise NotMCHexagonAvoiding(
            f"{w} contains one of the seven maximally-clustered hexagon patterns")


def cprime(w) -> HeckeElement:
    """
    Kazhdan-Lusztig basis element ``C'_w`` from the 10*-avoiding masks on
    the contracted expression for ``w``.
    """
    w = tuple(w)
    ensure_mc_hexagon_avoiding(w)
    d = contract(w)
    return h_from_sums(mask_sum(d.word, d.n, d.central_starts), d.n, len(d.word))


def cprime_product(word, n: int) -> HeckeElement:
    """``C'_{s_{w_1}} ... C'_{s_{w_k}}`` with ``C'_s = q^{-1/2}(T_1 + T_s)``."""
    v_inv = LaurentPoly({-1: 1})
    h = T(identity(n))
    for i in word:
        h = (h + t_multiply_right(h, i)).scale(v_inv)
    return h
