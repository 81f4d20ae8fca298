"""Exact Laurent polynomials in one variable: the ring Z[a, a^-1] = R(T).

Coefficients are Python ints held to the signed 64-bit range; anything
leaving that range raises :class:`CoefficientOverflowError` instead of
wrapping.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping

import numpy as np

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

# below this many term pairs the dict convolution beats numpy's setup cost
_DENSE_MIN_PAIRS = 256


class CoefficientOverflowError(OverflowError):
    """A coefficient left the signed 64-bit range."""


def check_coefficient(c: int) -> int:
    if not INT64_MIN <= c <= INT64_MAX:
        raise CoefficientOverflowError(f"coefficient {c} does not fit in 64 bits")
    return c


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``sum c_e * a^e``.

    The term map never stores a zero coefficient, so two polynomials are
    equal exactly when their term maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            e, c = int(e), int(c)
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: check_coefficient(c) for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def _from_canonical(cls, terms: dict[int, int]) -> LaurentPoly:
        # caller guarantees: sorted keys, nonzero and range-checked values
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls({exponent: coefficient})

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls._from_canonical({})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls._from_canonical({0: 1})

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def degree(self) -> int | None:
        """Largest exponent, or None for the zero polynomial."""
        return next(reversed(self._terms), None)

    def valuation(self) -> int | None:
        """Smallest exponent, or None for the zero polynomial."""
        return next(iter(self._terms), None)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"

    def __str__(self) -> str:
        return to_text(self)

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else laurent_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._from_canonical({e: check_coefficient(-c) for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else laurent_add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else laurent_add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else laurent_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only monomials with unit coefficient are invertible")
            (e, c), = self._terms.items()
            return LaurentPoly({e * n: c ** -n})
        result = LaurentPoly.one()
        for _ in range(n):
            result = laurent_mul(result, self)
        return result


def _coerce(x) -> LaurentPoly | None:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, np.integer)):
        return LaurentPoly({0: int(x)})
    return None


ALPHA = LaurentPoly._from_canonical({1: 1})


def laurent_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    acc = dict(p._terms)
    for e, c in q._terms.items():
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly._from_canonical(
        {e: check_coefficient(c) for e, c in sorted(acc.items()) if c}
    )


def laurent_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if not p or not q:
        return LaurentPoly.zero()
    if len(p) * len(q) >= _DENSE_MIN_PAIRS and _dense_is_safe(p, q):
        return _mul_dense(p, q)
    acc: dict[int, int] = {}
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            e = e1 + e2
            acc[e] = acc.get(e, 0) + c1 * c2
    return LaurentPoly._from_canonical(
        {e: check_coefficient(c) for e, c in sorted(acc.items()) if c}
    )


def _dense_is_safe(p: LaurentPoly, q: LaurentPoly) -> bool:
    span_p = p.degree() - p.valuation() + 1
    span_q = q.degree() - q.valuation() + 1
    if span_p > 4 * len(p) or span_q > 4 * len(q):
        return False
    # every partial sum of the convolution is bounded by this product,
    # so int64 arithmetic inside numpy cannot wrap
    bound = sum(abs(c) for c in p._terms.values()) * sum(abs(c) for c in q._terms.values())
    return bound <= INT64_MAX


def _dense(p: LaurentPoly) -> tuple[int, np.ndarray]:
    lo = p.valuation()
    arr = np.zeros(p.degree() - lo + 1, dtype=np.int64)
    for e, c in p._terms.items():
        arr[e - lo] = c
    return lo, arr


def _mul_dense(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    lo_p, a = _dense(p)
    lo_q, b = _dense(q)
    prod = np.convolve(a, b)
    lo = lo_p + lo_q
    nz = np.flatnonzero(prod)
    return LaurentPoly._from_canonical({int(i) + lo: int(prod[i]) for i in nz})


def weyl_involution(p: LaurentPoly) -> LaurentPoly:
    """Reflect exponents, a^e -> a^-e (the Weyl group of SU(2) acting on T)."""
    return LaurentPoly._from_canonical({-e: c for e, c in reversed(p._terms.items())})


def is_weyl_symmetric(p: LaurentPoly) -> bool:
    return all(p[-e] == c for e, c in p.items())


def to_text(p: LaurentPoly) -> str:
    """Render as ``c*a^e + ...`` in ascending exponent order; ``0`` if empty."""
    if not p:
        return "0"
    return " + ".join(f"{c}*a^{e}" for e, c in p.items())


def to_json(p: LaurentPoly) -> list[list[int]]:
    return [[e, c] for e, c in p.items()]


def from_json(pairs: Iterable[Iterable[int]]) -> LaurentPoly:
    return LaurentPoly((e, c) for e, c in pairs)
