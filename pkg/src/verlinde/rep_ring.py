"""The representation ring R(SU(2)) in the basis of irreducible characters.

``chi(n)`` is Sym^n of the two-dimensional representation, of dimension
n + 1 and highest weight n. Elements are stored as multiplicities over these
characters; products go through the torus (restrict, multiply, decompose).
"""

from __future__ import annotations

from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping

from .laurent import LaurentPoly, check_coefficient, laurent_mul


class NotWeylSymmetricError(ValueError):
    """A Laurent polynomial that is not fixed by a -> a^-1 cannot be a character."""


class RepRingElem:
    """Immutable integer combination ``sum m_n * X<n>`` of irreducible characters."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for n, c in items:
            n, c = int(n), int(c)
            if n < 0:
                raise ValueError(f"highest weight must be >= 0, got {n}")
            acc[n] = acc.get(n, 0) + c
        self._coeffs = {n: check_coefficient(c) for n, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def _from_canonical(cls, coeffs: dict[int, int]) -> RepRingElem:
        x = cls.__new__(cls)
        x._coeffs = coeffs
        x._hash = None
        return x

    @classmethod
    def zero(cls) -> RepRingElem:
        return cls._from_canonical({})

    @property
    def coeffs(self) -> Mapping[int, int]:
        return MappingProxyType(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, n: int) -> int:
        return self._coeffs.get(n, 0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def top_weight(self) -> int | None:
        return next(reversed(self._coeffs), None)

    def dimension(self) -> int:
        """Virtual dimension: sum of m_n * (n + 1)."""
        return sum(c * (n + 1) for n, c in self._coeffs.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, RepRingElem):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"RepRingElem({self._coeffs!r})"

    def __str__(self) -> str:
        return to_text(self)

    def __add__(self, other):
        if isinstance(other, int):
            other = RepRingElem({0: other})
        if not isinstance(other, RepRingElem):
            return NotImplemented
        acc = dict(self._coeffs)
        for n, c in other._coeffs.items():
            acc[n] = acc.get(n, 0) + c
        return RepRingElem._from_canonical(
            {n: check_coefficient(c) for n, c in sorted(acc.items()) if c}
        )

    __radd__ = __add__

    def __neg__(self) -> RepRingElem:
        return RepRingElem._from_canonical({n: check_coefficient(-c) for n, c in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = RepRingElem({0: other})
        if not isinstance(other, RepRingElem):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return RepRingElem.zero()
            return RepRingElem._from_canonical(
                {n: check_coefficient(c * other) for n, c in self._coeffs.items()}
            )
        if not isinstance(other, RepRingElem):
            return NotImplemented
        return rep_mul(self, other)

    __rmul__ = __mul__


def chi(n: int, multiplicity: int = 1) -> RepRingElem:
    """The irreducible character of highest weight ``n`` (times ``multiplicity``)."""
    return RepRingElem({n: multiplicity})


ONE = RepRingElem._from_canonical({0: 1})
SIGMA = RepRingElem._from_canonical({1: 1})


@lru_cache(maxsize=512)
def char_of_irrep(n: int) -> LaurentPoly:
    """Character of Sym^n restricted to the torus: a^n + a^(n-2) + ... + a^-n."""
    if n < 0:
        raise ValueError(f"highest weight must be >= 0, got {n}")
    return LaurentPoly._from_canonical({e: 1 for e in range(-n, n + 1, 2)})


def restrict(x: RepRingElem) -> LaurentPoly:
    if len(x) == 1:
        (n, c), = x.items()
        if c == 1:
            return char_of_irrep(n)
    acc: dict[int, int] = {}
    for n, c in x.items():
        for e in range(-n, n + 1, 2):
            acc[e] = acc.get(e, 0) + c
    return LaurentPoly._from_canonical(
        {e: check_coefficient(c) for e, c in sorted(acc.items()) if c}
    )


def decompose(p: LaurentPoly) -> RepRingElem:
    """Write a Weyl-symmetric Laurent polynomial as a sum of irreducible characters.

    Peels off ``c * char_of_irrep(n)`` for the current leading term ``c * a^n``
    until nothing is left. Each peel lowers every exponent ``n, n-2, ..., -n``
    by ``c``, so the subtraction is tracked as a running total per parity
    class rather than materialised.

    Raises :class:`NotWeylSymmetricError` naming an exponent whose mirror
    image carries a different coefficient.
    """
    for e, c in p.items():
        if p[-e] != c:
            raise NotWeylSymmetricError(
                f"coefficient of a^{e} is {c} but coefficient of a^{-e} is {p[-e]}"
            )
    peeled = [0, 0]
    out: dict[int, int] = {}
    for n in range(p.degree() or 0, -1, -1):
        residual = p[n] - peeled[n & 1]
        if residual:
            out[n] = check_coefficient(residual)
            peeled[n & 1] += residual
    return RepRingElem._from_canonical(dict(sorted(out.items())))


def rep_mul(x: RepRingElem, y: RepRingElem) -> RepRingElem:
    if not x or not y:
        return RepRingElem.zero()
    return decompose(laurent_mul(restrict(x), restrict(y)))


def to_text(x: RepRingElem) -> str:
    """Render as ``X0 - 2·X3 + X5``; unit coefficients are dropped."""
    if not x:
        return "0"
    parts = []
    for i, (n, c) in enumerate(x.items()):
        mag = "" if abs(c) == 1 else f"{abs(c)}·"
        term = f"{mag}X{n}"
        if i == 0:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def to_json(x: RepRingElem) -> list[list[int]]:
    return [[n, c] for n, c in x.items()]


def from_json(pairs: Iterable[Iterable[int]]) -> RepRingElem:
    return RepRingElem((n, c) for n, c in pairs)
