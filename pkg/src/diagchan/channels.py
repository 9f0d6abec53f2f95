"""Diagonal channels on the orthonormal Hermitian basis.

A diagonal channel is described by n^2 real coefficients in basis order,
with leading coefficient 1 (trace preservation). This module provides the
four named depolarizing-type families with parameter-range validation,
channel application, Choi matrix assembly, and verification of complete
positivity and trace preservation.

Most functions accept either a validated :class:`DiagonalChannel` or a raw
coefficient vector. The raw-vector path exists so that out-of-range or
non-trace-preserving coefficient sets can still be *checked* (and reported
unhealthy) even though :class:`DiagonalChannel` refuses to carry them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .basis import expand, orthonormal_basis, reconstruct
from .linalg import DEFAULT_TOL, dagger, hermitian_eigenvalues, matrix_unit, max_norm

#: Slack applied to family parameter bounds and coefficient bounds.
BOUND_SLACK = 1e-12


class ChannelFamily(Enum):
    """The four named diagonal channel families."""

    DEPOLARIZING = "depolarizing"
    TRANSPOSE_DEPOLARIZING = "transpose_depolarizing"
    HYBRID_DEPOLARIZING_CLASSICAL = "hybrid_depolarizing_classical"
    HYBRID_TRANSPOSE_DEPOLARIZING_CLASSICAL = "hybrid_transpose_depolarizing_classical"


# Sign of p on the (symmetric, antisymmetric, diagonal) coefficient blocks.
_FAMILY_SIGNS = {
    ChannelFamily.DEPOLARIZING: (1.0, 1.0, 1.0),
    ChannelFamily.TRANSPOSE_DEPOLARIZING: (1.0, -1.0, 1.0),
    ChannelFamily.HYBRID_DEPOLARIZING_CLASSICAL: (-1.0, -1.0, 1.0),
    ChannelFamily.HYBRID_TRANSPOSE_DEPOLARIZING_CLASSICAL: (-1.0, 1.0, 1.0),
}


def family_parameter_range(family: ChannelFamily | str, n: int) -> tuple[float, float]:
    """Closed interval [lo, hi] of mixing parameters giving a valid channel."""
    family = ChannelFamily(family)
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n}")
    if family is ChannelFamily.DEPOLARIZING:
        return (-1.0 / (n * n - 1), 1.0)
    if family is ChannelFamily.HYBRID_DEPOLARIZING_CLASSICAL:
        return (-1.0 / (2 * n - 1), 1.0 / (n - 1) ** 2)
    # Both transpose variants share one interval.
    return (-1.0 / (n - 1), 1.0 / (n + 1))


@dataclass(frozen=True, eq=False)
class DiagonalChannel:
    """A diagonal channel: dimension plus n^2 coefficients in basis order.

    Construction requires a leading coefficient of exactly 1 (within 1e-12,
    then snapped) and all coefficients in [-1, 1]; both are necessary for a
    trace-preserving channel, though not sufficient for complete positivity,
    which is checked on demand via :func:`is_completely_positive`.
    """

    dim: int
    coefficients: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coefficients, dtype=np.float64).ravel()
        n = self.dim
        if n < 2:
            raise ValueError(f"dimension must be at least 2, got {n}")
        if arr.size != n * n:
            raise ValueError(f"expected {n * n} coefficients for dimension {n}, got {arr.size}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        if abs(arr[0] - 1.0) > BOUND_SLACK:
            raise ValueError(f"leading coefficient must be 1, got {arr[0]!r}")
        arr[0] = 1.0
        worst = float(np.max(np.abs(arr)))
        if worst > 1.0 + BOUND_SLACK:
            pos = int(np.argmax(np.abs(arr)))
            raise ValueError(
                f"coefficient {arr[pos]!r} at basis position {pos} lies outside [-1, 1]"
            )
        arr = np.clip(arr, -1.0, 1.0)
        arr.setflags(write=False)
        object.__setattr__(self, "coefficients", arr)

    @classmethod
    def from_family(cls, family: ChannelFamily | str, n: int, p: float) -> "DiagonalChannel":
        """Build a family channel, validating p against the family's interval."""
        family = ChannelFamily(family)
        lo, hi = family_parameter_range(family, n)
        if not (lo - BOUND_SLACK <= p <= hi + BOUND_SLACK):
            raise ValueError(
                f"{family.value}: p={p!r} outside the valid range [{lo!r}, {hi!r}] for n={n}"
            )
        num_pairs = n * (n - 1) // 2
        s_sym, s_anti, s_diag = _FAMILY_SIGNS[family]
        coeffs = np.concatenate([
            [1.0],
            np.full(num_pairs, s_sym * p),
            np.full(num_pairs, s_anti * p),
            np.full(n - 1, s_diag * p),
        ])
        return cls(n, coeffs)

    def apply(self, a) -> np.ndarray:
        return apply_channel(self, a)

    def choi(self) -> np.ndarray:
        return choi_matrix(self)

    def compose(self, other: "DiagonalChannel") -> "DiagonalChannel":
        """Composition with another diagonal channel (coefficients multiply)."""
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return DiagonalChannel(self.dim, self.coefficients * other.coefficients)


def channel_coefficients(channel) -> tuple[int, np.ndarray]:
    """Normalize a channel argument to (dimension, coefficient vector).

    Accepts a :class:`DiagonalChannel` or any length-n^2 real vector.
    Raw vectors skip the construction-time invariants so that broken
    channels can still be diagnosed.
    """
    if isinstance(channel, DiagonalChannel):
        return channel.dim, channel.coefficients
    arr = np.asarray(channel, dtype=np.float64).ravel()
    n = math.isqrt(arr.size)
    if n < 2 or n * n != arr.size:
        raise ValueError(
            f"coefficient vector length {arr.size} is not n^2 for any dimension n >= 2"
        )
    if not np.all(np.isfinite(arr)):
        raise ValueError("coefficients must be finite")
    return n, arr


def apply_channel(channel, a) -> np.ndarray:
    """Apply a diagonal channel: expand, scale each coefficient, reconstruct."""
    n, coeffs = channel_coefficients(channel)
    basis = orthonormal_basis(n)
    return reconstruct(coeffs * expand(a, basis), basis)


def choi_matrix(channel) -> np.ndarray:
    """The n^2 x n^2 Choi matrix, assembled block-wise.

    Block (i, j) of size n x n is the channel image of the matrix unit
    E_ij. The result is validated Hermitian and symmetrized exactly.
    """
    n, coeffs = channel_coefficients(channel)
    c = np.zeros((n * n, n * n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            block = apply_channel(coeffs, matrix_unit(n, i, j))
            c[i * n:(i + 1) * n, j * n:(j + 1) * n] = block
    drift = max_norm(c - dagger(c))
    if drift > 1e-12:
        raise ArithmeticError(f"Choi matrix failed the Hermiticity check: drift {drift:.3e}")
    return (c + dagger(c)) / 2.0


def min_choi_eigenvalue(channel) -> float:
    """Smallest eigenvalue of the Choi matrix (negative means not CP)."""
    return float(hermitian_eigenvalues(choi_matrix(channel))[0])


def is_completely_positive(channel, tol: float = DEFAULT_TOL) -> bool:
    """Whether the Choi matrix is positive semidefinite to within ``tol``."""
    return min_choi_eigenvalue(channel) >= -tol


def is_trace_preserving(channel, tol: float = DEFAULT_TOL) -> bool:
    """Whether the channel preserves the trace of every basis element."""
    n, coeffs = channel_coefficients(channel)
    basis = orthonormal_basis(n)
    for element in basis:
        drift = abs(complex(np.trace(apply_channel(coeffs, element))) - complex(np.trace(element)))
        if drift > tol:
            return False
    return True
