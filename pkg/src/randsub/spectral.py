"""Perron-Frobenius data and inflation-length vectors of a substitution matrix."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .substitution import ValidationError, primitivity_exponent

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 10**6


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class PerronData:
    """Dominant eigenvalue with right and left eigenvectors.

    ``R`` is normalised to unit 1-norm and ``L`` so that ``L @ R == 1``.
    """

    lam: float
    R: np.ndarray
    L: np.ndarray
    residual: float
    iterations: int


def _power_iteration(matrix: np.ndarray, tol: float) -> tuple[np.ndarray, int]:
    n = matrix.shape[0]
    v = np.full(n, 1.0 / n)
    for it in range(1, MAX_ITERATIONS + 1):
        w = matrix @ v
        w /= w.sum()
        if np.max(np.abs(w - v)) < tol:
            return w, it
        v = w
    raise ConvergenceError(f"power iteration did not converge within {MAX_ITERATIONS} steps")


def perron_data(matrix, tol: float = DEFAULT_TOL) -> PerronData:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if primitivity_exponent(matrix) is None:
        raise ValidationError("substitution matrix is not primitive")
    M = np.asarray(matrix, dtype=float)
    R, it_r = _power_iteration(M, tol)
    lam = float((M @ R).sum() / R.sum())
    if lam <= 1.0:
        raise ValidationError(f"Perron eigenvalue {lam} <= 1; entropy bounds are undefined")
    L, it_l = _power_iteration(M.T, tol)
    L = L / (L @ R)
    residual = max(np.max(np.abs(M @ R - lam * R)), np.max(np.abs(L @ M - lam * L)))
    R.setflags(write=False)
    L.setflags(write=False)
    return PerronData(lam, R, L, float(residual), max(it_r, it_l))


def length_vector(matrix, m: int) -> tuple[int, ...]:
    """Exact word lengths of level-m inflation words, one entry per letter.

    Uses Python integers, so there is no overflow at any level.
    """
    if m < 1:
        raise ValueError("level must be >= 1")
    cols = [[int(x) for x in row] for row in np.asarray(matrix)]
    n = len(cols)
    lengths = [1] * n
    for _ in range(m):
        lengths = [sum(lengths[i] * cols[i][j] for i in range(n)) for j in range(n)]
    return tuple(lengths)
