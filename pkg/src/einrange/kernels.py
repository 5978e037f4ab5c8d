"""Desk-scale dense complex matrix factorizations.

Thin contracts over LAPACK (via numpy.linalg): the promises here are the
residual bounds, orderings, and canonicalizations that the rest of the
package and its fixtures rely on, not any particular iteration scheme.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import KernelError, ShapeError, SingularMatrixError

__all__ = [
    "SvdResult",
    "svd",
    "herm_eig",
    "gen_eig",
    "hpd_sqrt",
    "hpd_inv_sqrt",
    "inverse",
    "solve",
    "rank",
    "sort_eigenvalues",
]

HERMITIAN_RTOL = 1e-10
HPD_MIN_EIG_RATIO = 1e-10
SOLVE_PIVOT_RTOL = 1e-12


@dataclass(frozen=True)
class SvdResult:
    """A = U @ diag(s) @ V^H with unitary U, V and nonincreasing s >= 0."""

    U: np.ndarray
    s: np.ndarray
    V: np.ndarray

    def reconstruct(self) -> np.ndarray:
        m, n = self.U.shape[0], self.V.shape[0]
        k = min(m, n)
        return (self.U[:, :k] * self.s[:k]) @ self.V[:, :k].conj().T


def _as_matrix(a) -> np.ndarray:
    mat = np.asarray(a, dtype=np.complex128)
    if mat.ndim != 2:
        raise ShapeError(f"expected a matrix, got ndim {mat.ndim}")
    return mat


def svd(a) -> SvdResult:
    """Full SVD with deterministic sign canonicalization.

    Each column of U has its largest-magnitude entry rotated to the
    positive real axis (the phase moves into the paired V column), so
    factor fixtures compare across runs despite SVD non-uniqueness.
    """
    mat = _as_matrix(a)
    try:
        u, s, vh = np.linalg.svd(mat, full_matrices=True)
    except np.linalg.LinAlgError as exc:
        raise KernelError(f"svd did not converge: {exc}") from exc
    v = vh.conj().T
    m, n = mat.shape
    k = min(m, n)
    for j in range(u.shape[1]):
        i = int(np.argmax(np.abs(u[:, j])))
        pivot = u[i, j]
        if abs(pivot) > 0:
            phase = pivot / abs(pivot)
            u[:, j] = u[:, j] / phase
            if j < k and j < v.shape[1]:
                v[:, j] = v[:, j] / phase
    for j in range(k, v.shape[1]):
        i = int(np.argmax(np.abs(v[:, j])))
        pivot = v[i, j]
        if abs(pivot) > 0:
            v[:, j] = v[:, j] / (pivot / abs(pivot))
    return SvdResult(U=u, s=s, V=v)


def _check_hermitian(mat: np.ndarray, what: str):
    scale = np.linalg.norm(mat)
    dev = np.linalg.norm(mat - mat.conj().T)
    if dev > HERMITIAN_RTOL * max(scale, 1e-300):
        raise ShapeError(
            f"{what} requires a Hermitian matrix "
            f"(asymmetry {dev:.3e} vs scale {scale:.3e})"
        )


def herm_eig(a) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix: ascending real values,
    unitary eigenvector matrix."""
    mat = _as_matrix(a)
    _check_hermitian(mat, "herm_eig")
    try:
        vals, vecs = np.linalg.eigh(mat)
    except np.linalg.LinAlgError as exc:
        raise KernelError(f"herm_eig did not converge: {exc}") from exc
    return vals, vecs


def sort_eigenvalues(vals) -> np.ndarray:
    """Deterministic spectrum order: descending modulus, then ascending arg."""
    vals = np.asarray(vals, dtype=np.complex128)
    order = np.lexsort((np.angle(vals), -np.abs(vals)))
    return vals[order]


def gen_eig(a) -> np.ndarray:
    """All eigenvalues (with multiplicity) of a square complex matrix,
    sorted by (descending modulus, ascending arg)."""
    mat = _as_matrix(a)
    if mat.shape[0] != mat.shape[1]:
        raise ShapeError(f"gen_eig needs a square matrix, got {mat.shape}")
    try:
        vals = np.linalg.eigvals(mat)
    except np.linalg.LinAlgError as exc:
        raise KernelError(f"eigenvalue iteration did not converge: {exc}") from exc
    return sort_eigenvalues(vals)


def _hpd_eig(a, what: str) -> tuple[np.ndarray, np.ndarray]:
    mat = _as_matrix(a)
    _check_hermitian(mat, what)
    vals, vecs = np.linalg.eigh(mat)
    vmax = float(vals[-1])
    vmin = float(vals[0])
    if vmax <= 0 or vmin <= HPD_MIN_EIG_RATIO * vmax:
        raise SingularMatrixError(
            f"{what} requires positive definiteness; min eigenvalue {vmin:.6e} "
            f"(max {vmax:.6e})"
        )
    return vals, vecs


def hpd_sqrt(a) -> np.ndarray:
    """Hermitian positive definite square root."""
    vals, vecs = _hpd_eig(a, "hpd_sqrt")
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def hpd_inv_sqrt(a) -> np.ndarray:
    """Inverse of the Hermitian positive definite square root."""
    vals, vecs = _hpd_eig(a, "hpd_inv_sqrt")
    return (vecs / np.sqrt(vals)) @ vecs.conj().T


def _check_nonsingular(mat: np.ndarray, what: str):
    s = np.linalg.svd(mat, compute_uv=False)
    if s[0] == 0 or s[-1] <= SOLVE_PIVOT_RTOL * s[0]:
        raise SingularMatrixError(
            f"{what}: matrix numerically singular "
            f"(sigma_min {s[-1]:.3e}, sigma_max {s[0]:.3e})"
        )


def inverse(a) -> np.ndarray:
    mat = _as_matrix(a)
    if mat.shape[0] != mat.shape[1]:
        raise ShapeError(f"inverse needs a square matrix, got {mat.shape}")
    _check_nonsingular(mat, "inverse")
    return np.linalg.inv(mat)


def solve(a, b) -> np.ndarray:
    mat = _as_matrix(a)
    rhs = np.asarray(b, dtype=np.complex128)
    if mat.shape[0] != mat.shape[1]:
        raise ShapeError(f"solve needs a square matrix, got {mat.shape}")
    _check_nonsingular(mat, "solve")
    return np.linalg.solve(mat, rhs)


def rank(s, m: int, n: int) -> int:
    """Numerical rank from nonincreasing singular values: count of
    s_i > max(m, n) * eps * s_1."""
    s = np.asarray(s, dtype=np.float64)
    if s.size == 0 or s[0] == 0:
        return 0
    tol = max(m, n) * np.finfo(np.float64).eps * s[0]
    return int(np.count_nonzero(s > tol))
