"""Eigenvalues of even-order square tensors and the single-weight
structure predicates (weighted self-conjugate, weighted normal, weighted EP).

The single-weight theory works with the similarity transform
A_tilde = N^{1/2} * A * N^{-1/2}: it preserves the spectrum, turns
weighted self-conjugacy into Hermitian-ness, and weighted normality into
plain normality of A_tilde.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ShapeError
from .tensor import DenseTensor, rsh, rsh_inv
from .winverse import WeightPair, as_weight, weighted_conj_transpose, wmp_inverse

__all__ = [
    "Spectrum",
    "eigenvalues",
    "spectral_radius",
    "tilde_n",
    "tilde_mn",
    "is_weighted_self_conjugate",
    "is_weighted_normal",
    "is_weighted_ep",
]

PREDICATE_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset, ordered by (descending modulus, ascending arg)."""

    values: tuple[complex, ...]
    row_shape: tuple[int, ...]

    @property
    def radius(self) -> float:
        return abs(self.values[0]) if self.values else 0.0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def _require_square(a: DenseTensor, what: str):
    if not a.is_square():
        raise ShapeError(
            f"{what} needs an even-order square tensor, got "
            f"{a.row_shape} x {a.col_shape}"
        )


def eigenvalues(a: DenseTensor) -> Spectrum:
    """Spectrum of an even-order square tensor (eigentensors are the
    inverse reshapes of the matrix eigenvectors)."""
    _require_square(a, "eigenvalues")
    vals = kernels.gen_eig(rsh(a))
    return Spectrum(tuple(complex(v) for v in vals), a.row_shape)


def spectral_radius(a: DenseTensor) -> float:
    return eigenvalues(a).radius


def tilde_n(a: DenseTensor, n_weight) -> DenseTensor:
    """Spectrum-preserving similarity N^{1/2} * A * N^{-1/2}."""
    _require_square(a, "tilde_n")
    w = as_weight(n_weight)
    if w.shape != a.row_shape:
        raise ShapeError(
            f"weight shape {w.shape} does not match tensor group {a.row_shape}"
        )
    return rsh_inv(w.sqrt @ rsh(a) @ w.inv_sqrt, a.row_shape, a.col_shape)


def tilde_mn(a: DenseTensor, weights: WeightPair) -> DenseTensor:
    """Two-sided congruence M^{1/2} * A * N^{-1/2} (the transform whose
    plain SVD carries the (M, N) singular values)."""
    weights.check_conformable(a)
    return rsh_inv(
        weights.m_sqrt @ rsh(a) @ weights.n_inv_sqrt, a.row_shape, a.col_shape
    )


def is_weighted_self_conjugate(
    a: DenseTensor, n_weight, tol: float = PREDICATE_TOL
) -> bool:
    """True when A equals its (N, N) weighted conjugate transpose."""
    _require_square(a, "is_weighted_self_conjugate")
    pair = WeightPair.nn(n_weight)
    sharp = weighted_conj_transpose(a, pair)
    scale = 1.0 + np.linalg.norm(rsh(a))
    return bool(np.linalg.norm(rsh(sharp) - rsh(a)) <= tol * scale)


def is_weighted_normal(a: DenseTensor, n_weight, tol: float = PREDICATE_TOL) -> bool:
    """True when A commutes with its (N, N) weighted conjugate transpose."""
    _require_square(a, "is_weighted_normal")
    pair = WeightPair.nn(n_weight)
    sharp = rsh(weighted_conj_transpose(a, pair))
    a_mat = rsh(a)
    comm = sharp @ a_mat - a_mat @ sharp
    scale = 1.0 + np.linalg.norm(a_mat) ** 2
    return bool(np.linalg.norm(comm) <= tol * scale)


def is_weighted_ep(a: DenseTensor, weights: WeightPair, tol: float = PREDICATE_TOL) -> bool:
    """True when A commutes with its weighted Moore-Penrose inverse."""
    _require_square(a, "is_weighted_ep")
    x = wmp_inverse(a, weights)
    a_mat, x_mat = rsh(a), rsh(x)
    comm = a_mat @ x_mat - x_mat @ a_mat
    scale = 1.0 + np.linalg.norm(a_mat) * np.linalg.norm(x_mat)
    return bool(np.linalg.norm(comm) <= tol * scale)
