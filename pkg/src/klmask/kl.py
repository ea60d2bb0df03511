"""
Kazhdan-Lusztig polynomials two ways: the 10*-avoiding mask sum on a
contracted expression, and the classical descent recursion with
mu-coefficient corrections, kept as an independent oracle.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .cluster import contract
from .errors import CapExceeded, RankMismatch
from .hecke import LaurentPoly, ensure_mc_hexagon_avoiding
from .mask import mask_sum
from .perm import length, oneline_str, times_simple
from .words import bruhat_leq, lower_interval

__all__ = [
    "RECURSION_LENGTH_CAP", "KLTable", "VerifyReport",
    "kl_masks", "kl_recursion", "kl_table", "verify", "clear_caches",
]

RECURSION_LENGTH_CAP = 20


@lru_cache(maxsize=4096)
def _contracted_sums(w: tuple):
    d = contract(w)
    return d, mask_sum(d.word, d.n, d.central_starts)


def _poly_from_defects(defects: dict) -> LaurentPoly:
    return LaurentPoly({2 * d: c for d, c in defects.items()})


def kl_masks(x, w) -> LaurentPoly:
    """
    ``P_{x,w}`` as the defect generating function of the 10*-avoiding masks
    that evaluate to ``x``.

    >>> str(kl_masks((1, 2, 3, 4), (4, 2, 3, 1)))
    '1 + q'
    """
    x, w = tuple(x), tuple(w)
    if len(x) != len(w):
        raise RankMismatch(f"ranks differ: {len(x)} vs {len(w)}")
    ensure_mc_hexagon_avoiding(w)
    _, sums = _contracted_sums(w)
    return _poly_from_defects(sums.get(x, {}))


# --- recursion oracle: polynomials in q as coefficient tuples ---------------

def _add(a, b, scale=1, shift=0):
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for i, c in enumerate(b):
        out[i + shift] += scale * c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _first_descent(w):
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            return i
    return None


@lru_cache(maxsize=8192)
def _interval(w):
    return lower_interval(w)


@lru_cache(maxsize=None)
def _mu_list(v):
    """``(z, mu(z, v))`` for every ``z < v`` with nonzero mu."""
    lv = length(v)
    out = []
    for z in _interval(v):
        gap = lv - length(z)
        if gap % 2 == 1:
            p = _P(z, v)
            top = (gap - 1) // 2
            if len(p) > top and p[top]:
                out.append((z, p[top]))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def _P(x, w):
    if x == w:
        return (1,)
    if not bruhat_leq(x, w):
        return ()
    s = _first_descent(w)
    xs = times_simple(x, s)
    if x[s - 1] > x[s]:
        return _P(xs, w)
    v = times_simple(w, s)
    res = _add(_P(x, v), _P(xs, v), shift=1)
    lw = length(w)
    for z, mu in _mu_list(v):
        if z[s - 1] > z[s] and bruhat_leq(x, z):
            res = _add(res, _P(x, z), scale=-mu, shift=(lw - length(z)) // 2)
    return res


def kl_recursion(x, w) -> LaurentPoly:
    """
    >>> str(kl_recursion((1, 2, 3, 4), (3, 4, 1, 2)))
    '1 + q'
    """
    x, w = tuple(x), tuple(w)
    if len(x) != len(w):
        raise RankMismatch(f"ranks differ: {len(x)} vs {len(w)}")
    if length(w) > RECURSION_LENGTH_CAP:
        raise CapExceeded(f"l(w) = {length(w)} exceeds recursion cap {RECURSION_LENGTH_CAP}")
    return LaurentPoly.from_q(_P(x, w))


def clear_caches():
    for fn in (_contracted_sums, _interval, _mu_list, _P):
        fn.cache_clear()


def _row_order(x):
    return (length(x), x)


@dataclass
class KLTable:
    w: tuple
    method: str
    rows: dict = field(default_factory=dict)   # x -> LaurentPoly, in row order

    def to_tsv(self) -> str:
        lines = [f"x\tP_x,{oneline_str(self.w)}"]
        lines += [f"{oneline_str(x)}\t{p}" for x, p in self.rows.items()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "w": list(self.w),
            "method": self.method,
            "rows": [{"x": list(x), "P": p.to_json(), "text": str(p)}
                     for x, p in self.rows.items()],
        }


def kl_table(w, method: str = "masks") -> KLTable:
    """Rows ``P_{x,w}`` for every ``x <= w``, ordered by length then 1-line."""
    w = tuple(w)
    xs = sorted(lower_interval(w), key=_row_order)
    if method == "masks":
        ensure_mc_hexagon_avoiding(w)
        _, sums = _contracted_sums(w)
        rows = {x: _poly_from_defects(sums.get(x, {})) for x in xs}
    elif method == "recursion":
        rows = {x: kl_recursion(x, w) for x in xs}
    else:
        raise ValueError(f"unknown method {method!r}")
    return KLTable(w, method, rows)


@dataclass
class VerifyReport:
    w: tuple
    pairs_checked: int = 0
    mismatches: list = field(default_factory=list)    # (x, masks, recursion)
    violations: list = field(default_factory=list)    # (x, reason)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.violations

    def to_json(self) -> dict:
        return {
            "w": list(self.w),
            "ok": self.ok,
            "pairs_checked": self.pairs_checked,
            "mismatches": [{"x": list(x), "masks": str(a), "recursion": str(b)}
                           for x, a, b in self.mismatches],
            "violations": [{"x": list(x), "reason": r} for x, r in self.violations],
        }


def verify(w) -> VerifyReport:
    """Compare the mask formula against the recursion on every ``x <= w``."""
    w = tuple(w)
    ensure_mc_hexagon_avoiding(w)
    report = VerifyReport(w)
    masks = kl_table(w, "masks")
    lw = length(w)
    _, sums = _contracted_sums(w)
    for x in sums:
        if x not in masks.rows:
            report.violations.append((x, "mask evaluates outside the Bruhat interval"))
    for x, p in masks.rows.items():
        report.pairs_checked += 1
        r = kl_recursion(x, w)
        if p != r:
            report.mismatches.append((x, p, r))
        if not p.is_q_polynomial():
            report.violations.append((x, "not a polynomial in q"))
            continue
        coeffs = p.q_coefficients()
        if any(c < 0 for c in coeffs):
            report.violations.append((x, "negative coefficient"))
        if not coeffs or coeffs[0] != 1:
            report.violations.append((x, "constant term is not 1"))
        if x != w and 2 * (len(coeffs) - 1) > lw - length(x) - 1:
            report.violations.append((x, "degree bound exceeded"))
    return report
