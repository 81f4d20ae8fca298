"""Level-by-level check that V_k(SU(2)) and twisted K-theory agree as rings.

At level k the twist is m = k + 2. Both sides are free of rank k + 1 and the
comparison identifies V_a with the class of X<a>; no isomorphism is searched
for, the structure constants must match entry by entry.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .fusion import build_fusion_ring
from .twisted_k import TheoremViolation, TwistClass, certify_injective, cokernel, mv_map


@dataclass(frozen=True)
class Mismatch:
    a: int
    b: int
    c: int
    fusion: int
    quotient: int


@dataclass(frozen=True)
class TheoremReport:
    k: int
    m: int
    rank_match: bool
    k1_vanishes: bool
    mismatches: tuple[Mismatch, ...] = field(default=())

    @property
    def verdict(self) -> bool:
        return self.rank_match and self.k1_vanishes and not self.mismatches

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "rank_match": self.rank_match,
            "k1_vanishes": self.k1_vanishes,
            "mismatches": [[x.a, x.b, x.c, x.fusion, x.quotient] for x in self.mismatches],
            "verdict": self.verdict,
        }

    def summary_line(self) -> str:
        status = "PASS" if self.verdict else "FAIL"
        line = f"{status} k={self.k} m={self.m} rank={self.k + 1}"
        if not self.k1_vanishes:
            line += " K1!=0"
        if not self.rank_match:
            line += " rank-mismatch"
        for x in self.mismatches:
            line += f" N[{x.a},{x.b},{x.c}]: fusion={x.fusion} quotient={x.quotient}"
        return line


def compare_tensors(fusion_N: np.ndarray, quotient_N: np.ndarray) -> tuple[Mismatch, ...]:
    diff = np.argwhere(fusion_N != quotient_N)
    return tuple(
        Mismatch(int(a), int(b), int(c), int(fusion_N[a, b, c]), int(quotient_N[a, b, c]))
        for a, b, c in diff
    )


def verify_level(k: int) -> TheoremReport:
    twist = TwistClass.from_level(k)
    ring = build_fusion_ring(k)
    mv = mv_map(twist)
    try:
        certify_injective(mv)
        k1_vanishes = True
    except TheoremViolation:
        k1_vanishes = False
    try:
        q = cokernel(mv)
    except TheoremViolation:
        return TheoremReport(k, twist.m, rank_match=False, k1_vanishes=k1_vanishes)
    rank_match = q.rank == ring.rank == k + 1
    mismatches = compare_tensors(ring.N, q.structure_constants) if rank_match else ()
    return TheoremReport(k, twist.m, rank_match, k1_vanishes, mismatches)


def verify_range(k_max: int, workers: int | None = None) -> list[TheoremReport]:
    """Reports for levels 0..k_max in level order.

    ``workers > 1`` spreads levels over processes; the result order is the
    same either way.
    """
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    levels = range(k_max + 1)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(verify_level, levels))
    return [verify_level(k) for k in levels]


def summarize(reports: list[TheoremReport]) -> str:
    lines = [r.summary_line() for r in reports]
    passed = sum(r.verdict for r in reports)
    lines.append(f"{passed}/{len(reports)} levels verified")
    return "\n".join(lines)
