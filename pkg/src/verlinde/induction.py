"""Holomorphic induction R(T) -> R(SU(2)) (Borel-Weil).

A torus weight a^n becomes the virtual representation on the holomorphic
sections (and first cohomology, with a sign) of the associated line bundle
over SU(2)/T = CP^1. On characters this is

    a^n  ->  X<n>         n >= 0
    a^-1 ->  0
    a^n  -> -X<-n-2>      n <= -2
"""

from __future__ import annotations

from .laurent import LaurentPoly, check_coefficient
from .rep_ring import RepRingElem


def induce_monomial(n: int) -> RepRingElem:
    if n >= 0:
        return RepRingElem._from_canonical({n: 1})
    if n == -1:
        return RepRingElem.zero()
    return RepRingElem._from_canonical({-n - 2: -1})


def induce(p: LaurentPoly) -> RepRingElem:
    """Linear extension of :func:`induce_monomial`; a map of R(SU(2))-modules."""
    acc: dict[int, int] = {}
    for e, c in p.items():
        if e >= 0:
            acc[e] = acc.get(e, 0) + c
        elif e <= -2:
            acc[-e - 2] = acc.get(-e - 2, 0) - c
    return RepRingElem._from_canonical(
        {n: check_coefficient(c) for n, c in sorted(acc.items()) if c}
    )
