"""Twisted equivariant K-theory of SU(2) acting on itself by conjugation.

Cover SU(2) by U = SU(2) - {-1} and V = SU(2) - {+1}. Both are equivariantly
contractible and U n V retracts onto SU(2)/T, so the Mayer-Vietoris sequence
in K-homology reduces to a single map

    R(T) -> R(SU(2)) x R(SU(2)),    p -> (ind(p), ind(a^m p))

of R(SU(2))-modules, where m is the twisting class as a multiple of the
generator of H^3_G(G) = Z. R(T) is free of rank two over R(SU(2)) on 1 and
a^-1, so the map is a 2x2 matrix over R(SU(2)). Its kernel is K_1 and its
cokernel is K_0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .induction import induce
from .laurent import LaurentPoly
from .rep_ring import ONE, RepRingElem, rep_mul
from . import rep_ring

# dim SU(2); the Poincare-dual cohomological degree of the nonzero group
DEGREE = 3
DUAL_COXETER = 2


class TheoremViolation(ArithmeticError):
    """The computation contradicted a fact that holds for SU(2)."""


@dataclass(frozen=True)
class TwistClass:
    m: int

    def __post_init__(self):
        if not isinstance(self.m, (int, np.integer)) or self.m < 1:
            raise ValueError(f"twist multiple m must be an integer >= 1, got {self.m!r}")

    @classmethod
    def from_level(cls, k: int) -> TwistClass:
        return cls(k + DUAL_COXETER)

    @property
    def level(self) -> int:
        return self.m - DUAL_COXETER


# R(T) generators over R(SU(2)), as torus exponents: 1 and a^-1
GENERATORS = (0, -1)


@dataclass(frozen=True)
class MVMap:
    """Matrix of the Mayer-Vietoris map.

    ``entries[i][j]``: generator i (1, then a^-1) pushed to side j (U, then V).
    """

    m: int
    entries: tuple[tuple[RepRingElem, RepRingElem], tuple[RepRingElem, RepRingElem]]

    def row(self, i: int) -> tuple[RepRingElem, RepRingElem]:
        return self.entries[i]


def mv_map(t: TwistClass | int) -> MVMap:
    if not isinstance(t, TwistClass):
        t = TwistClass(t)
    rows = []
    for g in GENERATORS:
        rho = LaurentPoly.monomial(g)
        twisted = LaurentPoly.monomial(g + t.m)
        rows.append((induce(rho), induce(twisted)))
    return MVMap(t.m, (rows[0], rows[1]))


def certify_injective(mv: MVMap) -> RepRingElem:
    """Determinant of the Mayer-Vietoris matrix over R(SU(2)).

    R(SU(2)) is an integral domain, so a nonzero determinant means the map is
    injective and K_1 vanishes. With rows ordered (1, a^-1) and columns
    (U, V) the determinant is +X<m-1>.
    """
    (a, b), (c, d) = mv.entries
    det = rep_mul(a, d) - rep_mul(b, c)
    if not det:
        raise TheoremViolation(f"Mayer-Vietoris map has zero determinant at m={mv.m}")
    return det


def fold_weight(n: int, m: int) -> tuple[int, int]:
    """Reduce X<n> modulo X<m-1>; returns ``(sign, weight)`` with sign 0 for zero.

    From X<1> X<m-1+j> = X<m+j> + X<m-2+j> one gets X<m-1+j> = -X<m-1-j>
    in the quotient, a reflection about m-1. Weights that land below zero
    follow the same recursion run backwards: X<-1> = 0, X<-n-2> = -X<n>.
    """
    if m == 1:
        return 0, 0
    sign = 1
    top = m - 1
    while n >= top:
        if n == top:
            return 0, 0
        n = 2 * top - n
        sign = -sign
        if n < 0:
            if n == -1:
                return 0, 0
            n = -n - 2
            sign = -sign
    return sign, n


def reduce_mod_relation(x: RepRingElem, m: int) -> np.ndarray:
    """Coordinates of the class of ``x`` in the basis X<0>, ..., X<m-2>."""
    out = np.zeros(max(m - 1, 0), dtype=np.int64)
    for n, c in x.items():
        s, w = fold_weight(n, m)
        if s:
            out[w] += s * c
    return out


@lru_cache(maxsize=None)
def _irrep_product(a: int, b: int) -> tuple[np.ndarray, np.ndarray]:
    # X<a> X<b> in R(SU(2)) does not depend on m; cache it across twists
    x = rep_mul(rep_ring.chi(a), rep_ring.chi(b))
    weights = np.fromiter((n for n, _ in x.items()), dtype=np.int64, count=len(x))
    coeffs = np.fromiter((c for _, c in x.items()), dtype=np.int64, count=len(x))
    return weights, coeffs


@lru_cache(maxsize=256)
def _fold_table(m: int) -> tuple[np.ndarray, np.ndarray]:
    # products of basis elements have weight <= 2(m-2)
    signs, targets = zip(*(fold_weight(n, m) for n in range(max(2 * m - 3, 1))))
    return np.array(signs, dtype=np.int64), np.array(targets, dtype=np.int64)


def _product_coords(m: int, a: int, b: int) -> np.ndarray:
    weights, coeffs = _irrep_product(a, b)
    signs, targets = _fold_table(m)
    out = np.zeros(max(m - 1, 0), dtype=np.int64)
    np.add.at(out, targets[weights], signs[weights] * coeffs)
    return out


@dataclass(frozen=True, eq=False)
class QuotientPresentation:
    """K_0 as the ring R(SU(2)) / <relation>, with its multiplication table.

    ``structure_constants[a, b, c]`` is the coefficient of [X<c>] in
    [X<a>] [X<b>]. K_1 is zero; the nonzero group sits in degree 3 (odd)
    once Poincare duality moves from K-homology to K-cohomology.
    """

    m: int
    relation: RepRingElem
    basis: tuple[int, ...]
    structure_constants: np.ndarray = field(repr=False)
    degree: int = DEGREE
    k1_rank: int = 0

    def __post_init__(self):
        r = self.rank
        if len(self.basis) != self.m - 1:
            raise TheoremViolation(f"rank {len(self.basis)} != m-1 = {self.m - 1}")
        if self.structure_constants.shape != (r, r, r):
            raise ValueError(f"structure constants have shape {self.structure_constants.shape}")
        self.structure_constants.setflags(write=False)
        N = self.structure_constants
        if r:
            if not np.array_equal(N[0], np.eye(r, dtype=N.dtype)):
                raise TheoremViolation("[X0] is not a unit in the quotient")
            if not np.array_equal(N, N.transpose(1, 0, 2)):
                raise TheoremViolation("quotient multiplication is not commutative")

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def level(self) -> int:
        return self.m - DUAL_COXETER

    @property
    def parity(self) -> str:
        return "odd" if self.degree % 2 else "even"

    def is_associative(self) -> bool:
        N = self.structure_constants
        # ([a][b])[c] and [a]([b][c]) for all a, b, c, by batched contraction
        left = np.einsum("abe,ecd->abcd", N, N)
        right = np.einsum("bce,aed->abcd", N, N)
        return bool(np.array_equal(left, right))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "level": self.level,
            "rank": self.rank,
            "relation": rep_ring.to_json(self.relation),
            "structure_constants": self.structure_constants.tolist(),
            "k1_rank": self.k1_rank,
            "degree": self.degree,
        }


def _unit_sign(x: RepRingElem) -> int:
    if x == ONE:
        return 1
    if x == -ONE:
        return -1
    return 0


def cokernel(mv: MVMap) -> QuotientPresentation:
    """Present coker(mv) as a cyclic R(SU(2))-module R / <relation>.

    Finds an entry that is a unit (+-X<0>), clears its column with a row
    operation and its row with a column operation; the entry left in the
    other row and column generates the relation ideal.
    """
    pivot = None
    for i in range(2):
        for j in range(2):
            s = _unit_sign(mv.entries[i][j])
            if s:
                pivot = (i, j, s)
                break
        if pivot:
            break
    if pivot is None:
        raise TheoremViolation(f"no unit entry in the Mayer-Vietoris matrix at m={mv.m}")
    i, j, s = pivot
    pivot_row = mv.entries[i]
    other_row = mv.entries[1 - i]
    factor = other_row[j] * s
    relation = other_row[1 - j] - rep_mul(factor, pivot_row[1 - j])

    m = mv.m
    if len(relation) != 1 or relation.top_weight() != m - 1 or abs(relation[m - 1]) != 1:
        raise TheoremViolation(f"relation {relation} is not +-X<{m - 1}>")

    r = m - 1
    N = np.zeros((r, r, r), dtype=np.int64)
    for a in range(r):
        for b in range(r):
            N[a, b] = _product_coords(m, a, b)
    return QuotientPresentation(m=m, relation=relation, basis=tuple(range(r)), structure_constants=N)


def quotient_mul(q: QuotientPresentation, a: int, b: int) -> np.ndarray:
    """[X<a>] [X<b>] in the quotient, as integer coordinates over ``q.basis``."""
    for label in (a, b):
        if not 0 <= label < q.rank:
            raise IndexError(f"basis index {label} out of range 0..{q.rank - 1}")
    return _product_coords(q.m, a, b)


def twisted_k_theory(m: int) -> QuotientPresentation:
    """K_0 of the m-twisted equivariant K-homology of SU(2), after checking K_1 = 0."""
    mv = mv_map(TwistClass(m))
    certify_injective(mv)
    return cokernel(mv)
