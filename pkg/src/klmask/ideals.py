"""
Translating heap-avoidance into classical pattern avoidance inside a pattern
class ``S^P``: upper sets ``U^P(h)``, ideal patterns, and the resulting
characterization check.
"""

from dataclasses import dataclass, field

from .errors import NotInClass, RankCapExceeded
from .heap import DEFAULT_CLASS_CAP, heap_contains
from .perm import FB_PATTERNS, MC_PATTERNS, all_perms, avoids, avoids_all

__all__ = [
    "PatternClass", "MC", "FB", "ALL", "CLASSES", "IDEAL_RANK_CAP",
    "UpperSet", "CharacterizationReport",
    "upper_set", "one_point_extensions", "is_ideal_pattern",
    "characterization_check",
]

IDEAL_RANK_CAP = 8


@dataclass(frozen=True)
class PatternClass:
    name: str
    patterns: tuple

    def __contains__(self, w) -> bool:
        return avoids_all(w, self.patterns)

    def members(self, n: int):
        return (w for w in all_perms(n) if w in self)


MC = PatternClass("mc", MC_PATTERNS)
FB = PatternClass("fb", FB_PATTERNS)
ALL = PatternClass("all", ())
CLASSES = {"mc": MC, "fb": FB, "all": ALL}


@dataclass(frozen=True)
class UpperSet:
    h: tuple
    cls: PatternClass
    members: tuple

    def to_json(self) -> list:
        return ["".join(map(str, w)) if len(w) <= 9 else ",".join(map(str, w))
                for w in self.members]


def upper_set(h, cls: PatternClass, cap: int = DEFAULT_CLASS_CAP) -> UpperSet:
    """
    Elements of ``S^P_{r(h)}`` that heap-contain ``h``.

    >>> upper_set((3, 2, 1), ALL).members
    ((3, 2, 1),)
    """
    h = tuple(h)
    if len(h) > IDEAL_RANK_CAP:
        raise RankCapExceeded(f"rank {len(h)} exceeds {IDEAL_RANK_CAP}")
    found = tuple(w for w in cls.members(len(h)) if heap_contains(w, h, cap))
    return UpperSet(h, cls, found)


def one_point_extensions(p) -> list:
    """Every permutation of rank ``r(p)+1`` containing ``p`` as a pattern, sorted."""
    r = len(p)
    out = set()
    for value in range(1, r + 2):
        shifted = [v + 1 if v >= value else v for v in p]
        for pos in range(r + 1):
            out.add(tuple(shifted[:pos] + [value] + shifted[pos:]))
    return sorted(out)


def is_ideal_pattern(p, cls: PatternClass, cap: int = DEFAULT_CLASS_CAP) -> bool:
    """Every class member one rank up that contains ``p`` also heap-contains it."""
    p = tuple(p)
    if len(p) > IDEAL_RANK_CAP:
        raise RankCapExceeded(f"rank {len(p)} exceeds {IDEAL_RANK_CAP}")
    if p not in cls:
        raise NotInClass(f"{p} is not in class {cls.name}")
    return all(heap_contains(q, p, cap)
               for q in one_point_extensions(p) if q in cls)


@dataclass
class CharacterizationReport:
    cls: str
    n: int
    heap_side: int = 0
    pattern_side: int = 0
    extra_patterns: tuple = ()
    counterexamples: list = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return not self.counterexamples


def characterization_check(cls: PatternClass, H, n: int,
                           cap: int = DEFAULT_CLASS_CAP) -> CharacterizationReport:
    """
    Compare the members of ``S^P_n`` heap-avoiding all of ``H`` with those
    avoiding ``P ∪ P'`` as 1-line patterns, ``P' = ∪ U^P(h)``.
    """
    if n > IDEAL_RANK_CAP:
        raise RankCapExceeded(f"rank {n} exceeds {IDEAL_RANK_CAP}")
    H = [tuple(h) for h in H]
    extra = []
    for h in H:
        extra.extend(upper_set(h, cls, cap).members)
    report = CharacterizationReport(cls.name, n, extra_patterns=tuple(extra))
    for w in cls.members(n):
        heap_ok = not any(heap_contains(w, h, cap) for h in H)
        pattern_ok = all(avoids(w, p) for p in extra)
        report.heap_side += heap_ok
        report.pattern_side += pattern_ok
        if heap_ok != pattern_ok:
            report.counterexamples.append(w)
    return report
