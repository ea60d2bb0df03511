"""
Sweeps over whole symmetric groups: censuses and theorem verification.

Work is fanned out over a process pool when ``KLMASK_THREADS`` (or an
explicit ``workers`` argument) exceeds 1; results are always returned in
input order so output does not depend on the worker count.
"""

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .kl import verify
from .perm import all_perms, classify

__all__ = [
    "CENSUS_LABELS", "default_workers", "parallel_map", "census",
    "mc_hexagon_avoiding", "SweepResult", "verify_sweep",
]

CENSUS_LABELS = ("all", "fully_commutative", "freely_braided",
                 "maximally_clustered", "mc_hexagon_avoiding")


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("KLMASK_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn, items, workers=None) -> list:
    workers = default_workers() if workers is None else workers
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * workers))))


def _census_row(w):
    c = classify(w)
    return (c.fully_commutative, c.freely_braided,
            c.maximally_clustered, c.mc_hexagon_avoiding)


def census(n: int, workers=None) -> dict:
    """Counts of each class in ``S_n``, keyed by label."""
    rows = parallel_map(_census_row, all_perms(n), workers)
    counts = {"all": len(rows)}
    for i, label in enumerate(CENSUS_LABELS[1:]):
        counts[label] = sum(1 for r in rows if r[i])
    return counts


def mc_hexagon_avoiding(n: int) -> list:
    return [w for w in all_perms(n) if classify(w).mc_hexagon_avoiding]


@dataclass
class SweepResult:
    n: int
    elements: int
    pairs_checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_sweep(n: int, sample=None, seed: int = 0, workers=None) -> SweepResult:
    """
    Verify the mask formula against the recursion on every (or a seeded
    random sample of) maximally-clustered hexagon-avoiding ``w`` in ``S_n``.
    """
    ws = mc_hexagon_avoiding(n)
    if sample is not None and sample < len(ws):
        ws = sorted(random.Random(seed).sample(ws, sample))
    reports = parallel_map(verify, ws, workers)
    return SweepResult(
        n=n,
        elements=len(reports),
        pairs_checked=sum(r.pairs_checked for r in reports),
        failures=[r for r in reports if not r.ok],
    )
