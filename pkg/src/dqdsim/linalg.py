"""Dense linear algebra for small real symmetric matrices.

The whole model lives in a 4-dimensional real Hilbert space, so instead of
pulling in LAPACK the production path uses a cyclic Jacobi eigensolver
specialized to symmetric 4x4 (and 2x2) matrices.  Jacobi is branch-free,
provably convergent for symmetric input and gives high relative accuracy at
this size.  All routines are pure functions; nothing here keeps state, so
everything is safe to call from worker threads.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

__all__ = [
    "EigenSystem",
    "JacobiConvergenceError",
    "PSD_CLIP",
    "boltzmann_weights",
    "eigen_sym4",
    "eigvals_sym4",
    "sqrt_psd4",
    "sym_matrix",
]

# Negative eigenvalues above this magnitude are treated as genuine errors
# rather than roundoff.
PSD_CLIP = 1e-12

_MAX_SWEEPS = 100


class JacobiConvergenceError(RuntimeError):
    """Jacobi iteration hit the sweep cap without converging.

    Unreachable for finite symmetric input; seeing it means the input
    violated the preconditions.
    """


class EigenSystem(NamedTuple):
    """Eigendecomposition of a real symmetric matrix.

    values:  eigenvalues sorted ascending.
    vectors: orthonormal eigenvectors, one per column, aligned with values.
    """

    values: np.ndarray
    vectors: np.ndarray


def sym_matrix(entries) -> np.ndarray:
    """Constructor for symmetric matrices: validate shape, symmetrize exactly.

    Entries must be finite; the result stores (m + m.T)/2 so that
    m[i, j] == m[j, i] holds bitwise.
    """
    m = np.array(entries, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return (m + m.T) / 2.0


def _check_sym(m, size) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.shape != (size, size):
        raise ValueError(f"expected a {size}x{size} matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    scale = max(1.0, float(np.abs(m).max()))
    if float(np.abs(m - m.T).max()) > 1e-8 * scale:
        raise ValueError("matrix is not symmetric")
    return m


def _jacobi(m: np.ndarray, need_vectors: bool):
    """Cyclic Jacobi sweeps on a small symmetric matrix.

    Returns (values ascending, vectors or None).  Convergence is declared
    when the off-diagonal Frobenius norm drops below 1e-14 * (1 + ||m||_F);
    after _MAX_SWEEPS sweeps without convergence the solver gives up.

    Plain Python floats throughout: at n == 4 scalar arithmetic beats numpy
    dispatch overhead by a wide margin.
    """
    n = m.shape[0]
    a = [[float(m[i, j]) for j in range(n)] for i in range(n)]
    v = [[float(i == j) for j in range(n)] for i in range(n)] if need_vectors else None
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    fro = math.sqrt(math.fsum(a[i][j] ** 2 for i in range(n) for j in range(n)))
    off_target = 1e-14 * (1.0 + fro)

    for sweep in range(_MAX_SWEEPS + 1):
        off = math.sqrt(2.0 * math.fsum(a[p][q] ** 2 for p, q in pairs))
        if off <= off_target:
            break
        if sweep == _MAX_SWEEPS:
            raise JacobiConvergenceError(
                f"no convergence after {_MAX_SWEEPS} sweeps "
                f"(off-diagonal norm {off:.3e})"
            )
        for p, q in pairs:
            apq = a[p][q]
            if apq == 0.0:
                continue
            theta = (a[q][q] - a[p][p]) / (2.0 * apq)
            if theta >= 0.0:
                t = 1.0 / (theta + math.sqrt(1.0 + theta * theta))
            else:
                t = -1.0 / (-theta + math.sqrt(1.0 + theta * theta))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            a[p][p] -= t * apq
            a[q][q] += t * apq
            a[p][q] = a[q][p] = 0.0
            for i in range(n):
                if i != p and i != q:
                    aip, aiq = a[i][p], a[i][q]
                    a[i][p] = a[p][i] = aip * c - aiq * s
                    a[i][q] = a[q][i] = aiq * c + aip * s
            if v is not None:
                for i in range(n):
                    vip, viq = v[i][p], v[i][q]
                    v[i][p] = vip * c - viq * s
                    v[i][q] = viq * c + vip * s

    values = np.array([a[i][i] for i in range(n)])
    order = np.argsort(values, kind="stable")
    if v is None:
        return values[order], None
    return values[order], np.array(v)[:, order]


def eigen_sym4(m) -> EigenSystem:
    """Full eigendecomposition of a symmetric 4x4 matrix.

    Deterministic for identical input.  Within degenerate subspaces the
    eigenvector basis is an arbitrary (but reproducible) orthonormal choice,
    so comparisons across inputs should go through eigenspace projectors.
    """
    values, vectors = _jacobi(_check_sym(m, 4), need_vectors=True)
    return EigenSystem(values=values, vectors=vectors)


def eigvals_sym4(m) -> np.ndarray:
    """Eigenvalues of a symmetric 4x4 matrix, sorted ascending."""
    values, _ = _jacobi(_check_sym(m, 4), need_vectors=False)
    return values


def boltzmann_weights(values, beta: float):
    """Boltzmann weights exp(-beta * (E_i - E_min)) and their sum.

    The uniform shift by the lowest energy makes the largest weight exactly 1,
    so no exponent can overflow however large beta * |E| gets; the shift
    cancels when the weights are normalized into populations.  Raw
    exp(-beta * E) is deliberately never formed.
    """
    vals = np.asarray(values, dtype=float)
    if vals.ndim != 1 or vals.size == 0:
        raise ValueError("expected a non-empty 1-d array of energies")
    if not np.all(np.isfinite(vals)):
        raise ValueError("energies must be finite")
    beta = float(beta)
    if not math.isfinite(beta) or beta <= 0.0:
        raise ValueError(f"beta must be positive and finite, got {beta}")
    weights = np.exp(-beta * (vals - vals.min()))
    return weights, float(weights.sum())


def sqrt_psd4(m) -> np.ndarray:
    """Symmetric PSD square root of a symmetric PSD 4x4 matrix.

    Eigenvalues in [-PSD_CLIP, 0) are clipped to zero as roundoff; anything
    more negative raises, since silently clamping would hide real bugs.
    """
    values, vectors = _jacobi(_check_sym(m, 4), need_vectors=True)
    if values[0] < -PSD_CLIP:
        raise ValueError(
            f"not positive semidefinite: smallest eigenvalue {values[0]:.3e}"
        )
    root = np.sqrt(np.clip(values, 0.0, None))
    s = (vectors * root) @ vectors.T
    return (s + s.T) / 2.0
