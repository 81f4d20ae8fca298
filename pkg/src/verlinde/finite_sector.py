"""Level-0 K_G(G) for a finite abelian group G acting on itself by conjugation.

Conjugation is trivial, so a G-equivariant vector bundle over G is just a
representation of G sitting over each point. Its K-group is free on pairs
(g, phi) of a point and a character, and pushing forward along the group
multiplication convolves supports while tensoring fibers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z/n_1 x ... x Z/n_r. Elements and characters are tuples reduced mod n_i."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(n) for n in self.cyclic_orders)
        if not orders:
            raise ValueError("need at least one cyclic factor")
        if any(n < 2 for n in orders):
            raise ValueError(f"cyclic orders must be >= 2, got {orders}")
        object.__setattr__(self, "cyclic_orders", orders)

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.cyclic_orders)

    @cached_property
    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(n) for n in self.cyclic_orders)))

    @property
    def characters(self) -> list[tuple[int, ...]]:
        # labelled by the same tuples: phi(g) = exp(2 pi i <phi, g>)
        return self.elements

    @cached_property
    def _coords(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64).reshape(self.order, len(self.cyclic_orders))

    def index(self, g) -> int:
        i = 0
        for x, n in zip(g, self.cyclic_orders):
            i = i * n + x % n
        return i

    def mul(self, g, h) -> tuple[int, ...]:
        return tuple((x + y) % n for x, y, n in zip(g, h, self.cyclic_orders))

    def pairing(self, phi, g) -> Fraction:
        """<phi, g> = sum phi_i g_i / n_i in Q/Z, returned in [0, 1)."""
        return sum(
            (Fraction(p * x, n) for p, x, n in zip(phi, g, self.cyclic_orders)), Fraction(0)
        ) % 1

    @cached_property
    def multiplication_table(self) -> np.ndarray:
        orders = np.array(self.cyclic_orders)
        c = self._coords
        s = (c[:, None, :] + c[None, :, :]) % orders
        return _encode(s, orders)

    @cached_property
    def character_values(self) -> np.ndarray:
        """``values[phi, g]``: <phi, g> scaled by the exponent L, as an integer mod L."""
        L = self.exponent
        weights = np.array([L // n for n in self.cyclic_orders], dtype=np.int64)
        c = self._coords
        return (c * weights) @ c.T % L

    @cached_property
    def character_product_table(self) -> np.ndarray:
        """Index of phi1 (x) phi2, found by matching pointwise character values."""
        vals = self.character_values
        L = self.exponent
        lookup = {row.tobytes(): i for i, row in enumerate(vals)}
        if len(lookup) != self.order:
            raise ArithmeticError("characters are not distinguished by their values")
        prod = (vals[:, None, :] + vals[None, :, :]) % L
        n = self.order
        table = np.empty((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                table[i, j] = lookup[prod[i, j].tobytes()]
        return table


def _encode(coords: np.ndarray, orders: np.ndarray) -> np.ndarray:
    idx = np.zeros(coords.shape[:-1], dtype=np.int64)
    for i, n in enumerate(orders):
        idx = idx * int(n) + coords[..., i]
    return idx


@dataclass(frozen=True, eq=False)
class KGGRing:
    """K_G(G) on the basis (g, phi), indexed ``g_index * |G| + phi_index``.

    ``product[i, j]`` is the basis index of ``e_i * e_j``; every structure
    constant is 0 or 1 with exactly one 1 per pair, so this table carries the
    whole tensor.
    """

    group: FiniteAbelianGroup
    product: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.product.setflags(write=False)

    @property
    def rank(self) -> int:
        return self.group.order ** 2

    @property
    def basis(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        G = self.group
        return [(g, phi) for g in G.elements for phi in G.characters]

    @property
    def unit(self) -> int:
        return 0

    def structure_constants(self) -> np.ndarray:
        """Dense N[i, j, c]; size rank**3, so only sensible for small groups."""
        n = self.rank
        N = np.zeros((n, n, n), dtype=np.int64)
        i, j = np.indices((n, n))
        N[i, j, self.product] = 1
        return N

    def convolve(self, f: np.ndarray, h: np.ndarray) -> np.ndarray:
        """Product of two general elements given as integer arrays ``[g, phi]``.

        ``(f * h)(x) = sum over g1 g2 = x of f(g1) (x) h(g2)``.
        """
        G = self.group
        n = G.order
        out = np.zeros((n, n), dtype=np.int64)
        gm = G.multiplication_table
        cm = G.character_product_table
        for g1, p1 in zip(*np.nonzero(f)):
            for g2, p2 in zip(*np.nonzero(h)):
                out[gm[g1, g2], cm[p1, p2]] += f[g1, p1] * h[g2, p2]
        return out

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.product, self.product.T))

    def is_associative(self) -> bool:
        P = self.product
        return bool(np.array_equal(P[P, :], P[:, P]))

    def is_unital(self) -> bool:
        ids = np.arange(self.rank)
        return bool(np.array_equal(self.product[self.unit], ids) and np.array_equal(self.product[:, self.unit], ids))

    def to_json(self) -> dict:
        n = self.rank
        i, j = np.indices((n, n))
        triples = np.stack([i.ravel(), j.ravel(), self.product.ravel()], axis=1)
        return {
            "orders": list(self.group.cyclic_orders),
            "rank": n,
            "N": triples.tolist(),
        }


def kgg_ring(G: FiniteAbelianGroup) -> KGGRing:
    n = G.order
    gm = G.multiplication_table
    cm = G.character_product_table
    # basis (g, phi) -> g * n + phi; product of deltas at (g1, phi1), (g2, phi2)
    point = gm[:, None, :, None]
    fiber = cm[None, :, None, :]
    product = (point * n + fiber).reshape(n * n, n * n)
    return KGGRing(G, product)


def abelian_groups(max_order: int) -> list[FiniteAbelianGroup]:
    """One representative per isomorphism class of nontrivial abelian groups
    of order <= max_order, in invariant-factor form n_1 | n_2 | ...
    """
    found = []

    def extend(factors: tuple[int, ...], size: int):
        if factors:
            found.append(FiniteAbelianGroup(factors))
        last = factors[-1] if factors else 1
        n = last if factors else 2
        while size * n <= max_order:
            if n % last == 0:
                extend(factors + (n,), size * n)
            n += 1

    extend((), 1)
    return sorted(found, key=lambda G: (G.order, G.cyclic_orders))
