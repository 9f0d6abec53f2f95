"""Classical transition probabilities induced on the computational basis.

A diagonal channel sends each basis projector E_kk to a diagonal matrix, so
its action on computational basis states is a classical Markov kernel:
P[k][j] is the j-th diagonal entry of the image of E_kk. The kernel is
computed two independent ways, by direct channel application and from a
closed form in the diagonal-block coefficients alone, so each can serve as
an oracle for the other.
"""

from __future__ import annotations

import numpy as np

from .basis import diagonal_block_slice
from .channels import apply_channel, channel_coefficients
from .linalg import matrix_unit, max_norm

#: Negative entries above this threshold are rounding noise and clamped to 0.
CLAMP_ATOL = 1e-12


def _clamp_noise(p: np.ndarray) -> np.ndarray:
    p[(p < 0.0) & (p >= -CLAMP_ATOL)] = 0.0
    return p


def diagonal_block_coefficients(channel) -> np.ndarray:
    """The n-1 coefficients acting on the traceless diagonal directions."""
    n, coeffs = channel_coefficients(channel)
    return coeffs[diagonal_block_slice(n)]


def transition_direct(channel, tol: float = 1e-12) -> np.ndarray:
    """Transition matrix by direct application to the basis projectors.

    Row k holds the diagonal of the channel image of E_kk. The image must be
    diagonal to within ``tol``; anything else signals a broken channel or
    basis and raises ArithmeticError.
    """
    n, coeffs = channel_coefficients(channel)
    p = np.empty((n, n))
    for k in range(n):
        image = apply_channel(coeffs, matrix_unit(n, k, k))
        off = max_norm(image - np.diag(np.diag(image)))
        if off > tol:
            raise ArithmeticError(
                f"image of basis projector {k + 1} is not diagonal "
                f"(off-diagonal magnitude {off:.3e})"
            )
        diag = np.diag(image)
        if max_norm(diag.imag) > tol:
            raise ArithmeticError(
                f"image of basis projector {k + 1} has complex diagonal entries"
            )
        p[k] = diag.real
    return _clamp_noise(p)


def transition_closed_form(t, n: int) -> np.ndarray:
    """Transition matrix from the n-1 diagonal-block coefficients alone.

    Entry conventions (1-based k for the source state, j for the target):

    * j < k:  1/n - t[k-1]/k + tail(k)
    * j = k:  1/n + (k-1) t[k-1]/k + tail(k)
    * j > k:  1/n - t[j-1]/j + tail(j)

    where tail(m) = sum_{i=m}^{n-1} t[i] / (i (i+1)). For k = 1 the t[k-1]
    term carries coefficient zero and is never evaluated.
    """
    t = np.asarray(t, dtype=np.float64).ravel()
    if t.size != n - 1:
        raise ValueError(f"expected {n - 1} coefficients for dimension {n}, got {t.size}")
    # tail[m] = sum_{i=m}^{n-1} t_i / (i(i+1)), 1-based i; tail[n] = 0.
    tail = np.zeros(n + 1)
    for m in range(n - 1, 0, -1):
        tail[m] = tail[m + 1] + t[m - 1] / (m * (m + 1.0))
    p = np.empty((n, n))
    for k in range(1, n + 1):
        below = 1.0 / n - (t[k - 2] / k if k > 1 else 0.0) + tail[k]
        diag = 1.0 / n + ((k - 1.0) * t[k - 2] / k if k > 1 else 0.0) + tail[k]
        p[k - 1, :k - 1] = below
        p[k - 1, k - 1] = diag
        for j in range(k + 1, n + 1):
            p[k - 1, j - 1] = 1.0 / n - t[j - 2] / j + tail[j]
    return _clamp_noise(p)


def is_row_stochastic(p, tol: float = 1e-12) -> bool:
    """Whether all entries are >= -tol and every row sums to 1 within tol."""
    p = np.asarray(p, dtype=np.float64)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {p.shape}")
    if float(np.min(p)) < -tol:
        return False
    return bool(np.all(np.abs(p.sum(axis=1) - 1.0) <= tol))
