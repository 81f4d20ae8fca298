"""The level-k fusion ring of SU(2) and its modular S-matrix.

Labels are highest weights a = 0..k (twice the spin). The truncated
Clebsch-Gordan rule produces the exact integer fusion tensor; the Verlinde
formula over the sine S-matrix is a floating-point cross-check only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_TOLERANCE = 1e-9


class FusionRingError(ValueError):
    """A fusion tensor failed one of its structural invariants."""


class OracleDisagreement(ArithmeticError):
    """The numeric Verlinde sum is not close to a nonnegative integer."""


def _check_level(k: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError(f"level must be an integer >= 0, got {k!r}")


def _check_labels(k: int, *labels: int) -> None:
    for x in labels:
        if not 0 <= x <= k:
            raise ValueError(f"label {x} out of range 0..{k}")


def _rule(k, a, b, c):
    # vectorises over numpy arrays of labels
    return (
        ((a + b + c) % 2 == 0)
        & (np.abs(a - b) <= c)
        & (c <= np.minimum(a + b, 2 * k - a - b))
    )


def fusion_coeff(k: int, a: int, b: int, c: int) -> int:
    """Multiplicity N_ab^c of V_c in V_a * V_b at level k (0 or 1)."""
    _check_level(k)
    _check_labels(k, a, b, c)
    return int(_rule(k, a, b, c))


@dataclass(frozen=True, eq=False)
class FusionRing:
    """V_k(SU(2)): labels 0..k with fusion tensor ``N[a, b, c] = N_ab^c``."""

    k: int
    N: np.ndarray = field(repr=False)

    def __post_init__(self):
        _check_level(self.k)
        K = self.k + 1
        N = self.N
        if N.shape != (K, K, K):
            raise FusionRingError(f"fusion tensor has shape {N.shape}, expected {(K, K, K)}")
        N.setflags(write=False)
        if not np.array_equal(N[0], np.eye(K, dtype=N.dtype)):
            raise FusionRingError("label 0 is not the unit")
        if not np.isin(N, (0, 1)).all():
            raise FusionRingError("fusion multiplicity outside {0, 1}")
        for perm in ((1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)):
            if not np.array_equal(N, N.transpose(perm)):
                raise FusionRingError(f"fusion tensor not invariant under axis permutation {perm}")

    @property
    def labels(self) -> range:
        return range(self.k + 1)

    @property
    def rank(self) -> int:
        return self.k + 1

    def product(self, a: int, b: int) -> list[int]:
        """Labels c with N_ab^c = 1, ascending."""
        _check_labels(self.k, a, b)
        return [int(c) for c in np.flatnonzero(self.N[a, b])]

    def is_associative(self) -> bool:
        N = self.N.astype(np.float64)
        K = self.rank
        flat_left = N.reshape(K * K, K)
        flat_right = N.reshape(K, K * K)
        for a in range(K):
            # sum_e N_ab^e N_ec^d  vs  sum_e N_bc^e N_ae^d
            left = N[a] @ flat_right
            right = (flat_left @ N[a]).reshape(K, K * K)
            if not np.array_equal(left, right):
                return False
        return True

    def to_json(self) -> dict:
        return {"k": self.k, "N": self.N.tolist()}

    def to_text(self) -> str:
        lines = []
        for a in self.labels:
            for b in range(a, self.k + 1):
                rhs = " + ".join(f"V_{c}" for c in self.product(a, b)) or "0"
                lines.append(f"V_{a}·V_{b} = {rhs}")
        return "\n".join(lines)


def build_fusion_ring(k: int) -> FusionRing:
    _check_level(k)
    a, b, c = np.ogrid[0 : k + 1, 0 : k + 1, 0 : k + 1]
    N = _rule(k, a, b, c).astype(np.int64)
    return FusionRing(k, N)


@dataclass(frozen=True, eq=False)
class SMatrix:
    """S_ab = sqrt(2/(k+2)) sin(pi (a+1)(b+1) / (k+2)) for labels 0..k."""

    k: int
    entries: np.ndarray = field(repr=False)
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        S = self.entries
        S.setflags(write=False)
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if not np.allclose(S, S.T, rtol=0, atol=self.tolerance):
            raise ArithmeticError("S-matrix is not symmetric")
        if not (S[0] > 0).all():
            raise ArithmeticError("first row of the S-matrix is not strictly positive")

    def orthogonality_residual(self) -> float:
        S = self.entries
        return float(np.abs(S @ S.T - np.eye(self.k + 1)).max())


def s_matrix(k: int, tolerance: float = DEFAULT_TOLERANCE) -> SMatrix:
    _check_level(k)
    n = k + 2
    idx = np.arange(1, k + 2)
    S = np.sqrt(2.0 / n) * np.sin(np.pi * np.outer(idx, idx) / n)
    return SMatrix(k, S, tolerance)


def verlinde_coeff_numeric(s: SMatrix, a: int, b: int, c: int) -> float:
    """sum_l S_al S_bl S_cl / S_0l, which should be a nonnegative integer."""
    _check_labels(s.k, a, b, c)
    S = s.entries
    value = float(np.sum(S[a] * S[b] * S[c] / S[0]))
    nearest = round(value)
    if nearest < 0 or abs(value - nearest) > s.tolerance:
        raise OracleDisagreement(
            f"Verlinde sum for ({a}, {b}, {c}) at level {s.k} is {value!r}, "
            f"not within {s.tolerance} of a nonnegative integer"
        )
    return value


def verlinde_tensor_numeric(s: SMatrix) -> np.ndarray:
    """All Verlinde sums at once, shape (k+1, k+1, k+1); no integrality check."""
    S = s.entries
    return np.einsum("al,bl,cl,l->abc", S, S, S, 1.0 / S[0])
