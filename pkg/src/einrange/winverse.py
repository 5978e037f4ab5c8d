"""Weighted SVD and (weighted) Moore-Penrose inverses via the Einstein product.

The weighted SVD of A with Hermitian positive definite weights (M, N)
factors A = U * S * V^H where U is M-orthogonal (U^H * M * U = I), V is
N^{-1}-orthogonal, and S is hyperdiagonal with the (M, N) singular values.
The construction is the classical congruence recipe: take the plain SVD of
M^{1/2} A N^{-1/2} on the reshaped matrices and pull the factors back
through M^{-1/2} and N^{1/2}.  The factors are not unique; only the
singular values and the defining relations are contractual.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ShapeError, SingularMatrixError, WeightError
from .tensor import (
    DenseTensor,
    conj_transpose,
    einstein_product,
    identity_tensor,
    rsh,
    rsh_inv,
)

__all__ = [
    "Weight",
    "WeightPair",
    "WsvdFactors",
    "wsvd",
    "hyperdiag_pinv",
    "mp_inverse",
    "wmp_inverse",
    "wmp_inverse_via_tilde",
    "weighted_conj_transpose",
    "wmp_limit",
    "penrose_residuals",
]

LIMIT_LAMBDA_DECADES = tuple(10.0 ** -k for k in range(2, 9))


class Weight:
    """A validated Hermitian positive definite weight with cached factors.

    Caches the reshaped matrix together with its square root, inverse
    square root, and inverse, so repeated transforms do not refactorize.
    Immutable after construction; safe to share.
    """

    __slots__ = ("tensor", "mat", "sqrt", "inv_sqrt", "inv")

    def __init__(self, tensor: DenseTensor):
        if not tensor.is_square():
            raise WeightError(
                f"weight must be square: {tensor.row_shape} x {tensor.col_shape}"
            )
        mat = rsh(tensor)
        scale = np.linalg.norm(mat)
        herm_dev = np.linalg.norm(mat - mat.conj().T)
        if herm_dev > kernels.HERMITIAN_RTOL * max(scale, 1e-300):
            raise WeightError(
                f"weight not Hermitian (asymmetry {herm_dev:.3e} vs scale {scale:.3e})"
            )
        try:
            sqrt = kernels.hpd_sqrt(mat)
            inv_sqrt = kernels.hpd_inv_sqrt(mat)
        except SingularMatrixError as exc:
            raise WeightError(f"weight not positive definite: {exc}") from exc
        self.tensor = tensor
        self.mat = mat
        self.sqrt = sqrt
        self.inv_sqrt = inv_sqrt
        self.inv = inv_sqrt @ inv_sqrt

    @property
    def shape(self) -> tuple[int, ...]:
        return self.tensor.row_shape

    @property
    def size(self) -> int:
        return self.tensor.row_size

    def inv_tensor(self) -> DenseTensor:
        return rsh_inv(self.inv, self.shape, self.shape)

    @classmethod
    def identity(cls, shape) -> "Weight":
        return cls(identity_tensor(shape))


def as_weight(w) -> Weight:
    """Accept a Weight or a raw DenseTensor (validated on the spot)."""
    if isinstance(w, Weight):
        return w
    if isinstance(w, DenseTensor):
        return Weight(w)
    raise WeightError(f"not a weight: {type(w).__name__}")


class WeightPair:
    """The (M, N) weight pair for tensors in C^{I_1..M x J_1..N}.

    M weighs the row-mode space, N the column-mode space.  Exposes the
    cached reshaped factors m_sqrt, m_inv_sqrt, n_sqrt, n_inv_sqrt.
    """

    __slots__ = ("m", "n")

    def __init__(self, m, n):
        self.m = as_weight(m)
        self.n = as_weight(n)

    @property
    def M(self) -> DenseTensor:
        return self.m.tensor

    @property
    def N(self) -> DenseTensor:
        return self.n.tensor

    @property
    def m_sqrt(self) -> np.ndarray:
        return self.m.sqrt

    @property
    def m_inv_sqrt(self) -> np.ndarray:
        return self.m.inv_sqrt

    @property
    def n_sqrt(self) -> np.ndarray:
        return self.n.sqrt

    @property
    def n_inv_sqrt(self) -> np.ndarray:
        return self.n.inv_sqrt

    @classmethod
    def identity(cls, row_shape, col_shape) -> "WeightPair":
        return cls(Weight.identity(row_shape), Weight.identity(col_shape))

    @classmethod
    def nn(cls, n) -> "WeightPair":
        """Single-weight pair (N, N) for the even-order square theory."""
        w = as_weight(n)
        return cls(w, w)

    def check_conformable(self, a: DenseTensor):
        if self.m.shape != a.row_shape or self.n.shape != a.col_shape:
            raise WeightError(
                f"weights of shapes {self.m.shape} / {self.n.shape} do not "
                f"conform to tensor {a.row_shape} x {a.col_shape}"
            )


@dataclass(frozen=True)
class WsvdFactors:
    """Weighted SVD factors: A = U * S(s) * V^H with rank r.

    ``s`` is nonincreasing; entries below the rank cutoff are stored as
    exact zeros.  Entry k of ``s`` sits at hyperdiagonal position (k, k)
    of the paired column-major linear indices.
    """

    U: DenseTensor
    s: np.ndarray
    V: DenseTensor
    rank: int
    row_shape: tuple[int, ...]
    col_shape: tuple[int, ...]

    def s_tensor(self) -> DenseTensor:
        """The hyperdiagonal middle factor as a tensor."""
        m = int(np.prod(self.row_shape)) if self.row_shape else 1
        n = int(np.prod(self.col_shape)) if self.col_shape else 1
        mat = np.zeros((m, n), dtype=np.complex128)
        k = min(m, n, self.s.size)
        mat[np.arange(k), np.arange(k)] = self.s[:k]
        return rsh_inv(mat, self.row_shape, self.col_shape)

    def reconstruct(self) -> DenseTensor:
        return einstein_product(
            einstein_product(self.U, self.s_tensor()), conj_transpose(self.V)
        )


def wsvd(a: DenseTensor, weights: WeightPair) -> WsvdFactors:
    """Weighted SVD of ``a`` with respect to ``weights``.

    Factors satisfy U^H * M * U = I, V^H * N^{-1} * V = I, and
    A = U * S * V^H; the s values are the (M, N) singular values.
    """
    weights.check_conformable(a)
    a_tilde = weights.m_sqrt @ rsh(a) @ weights.n_inv_sqrt
    res = kernels.svd(a_tilde)
    r = kernels.rank(res.s, *a_tilde.shape)
    s = res.s.copy()
    s[r:] = 0.0
    u = rsh_inv(weights.m_inv_sqrt @ res.U, a.row_shape, a.row_shape)
    v = rsh_inv(weights.n_sqrt @ res.V, a.col_shape, a.col_shape)
    return WsvdFactors(
        U=u, s=s, V=v, rank=r, row_shape=a.row_shape, col_shape=a.col_shape
    )


def hyperdiag_pinv(s: DenseTensor, off_diag_tol: float = 1e-12) -> DenseTensor:
    """Pseudoinverse of a hyperdiagonal tensor.

    Nonzero hyperdiagonal entries are reciprocated, everything else is
    zero, and the mode groups transpose.  Inputs carrying more than
    ``off_diag_tol`` of relative off-hyperdiagonal mass are rejected.
    """
    mat = rsh(s)
    m, n = mat.shape
    k = min(m, n)
    diag = np.diag(mat).copy()
    off = mat.copy()
    off[np.arange(k), np.arange(k)] = 0.0
    smax = float(np.max(np.abs(diag))) if k else 0.0
    if off.size and np.max(np.abs(off)) > off_diag_tol * max(1.0, smax):
        raise ShapeError(
            f"tensor is not hyperdiagonal (off-diagonal mass "
            f"{np.max(np.abs(off)):.3e})"
        )
    cutoff = max(m, n) * np.finfo(np.float64).eps * smax
    out = np.zeros((n, m), dtype=np.complex128)
    for i in range(k):
        if np.abs(diag[i]) > cutoff:
            out[i, i] = 1.0 / diag[i]
    return rsh_inv(out, s.col_shape, s.row_shape)


def mp_inverse(a: DenseTensor) -> DenseTensor:
    """Moore-Penrose inverse (identity weights); always exists."""
    res = kernels.svd(rsh(a))
    m, n = a.row_size, a.col_size
    r = kernels.rank(res.s, m, n)
    if r == 0:
        return rsh_inv(np.zeros((n, m)), a.col_shape, a.row_shape)
    pinv = (res.V[:, :r] / res.s[:r]) @ res.U[:, :r].conj().T
    return rsh_inv(pinv, a.col_shape, a.row_shape)


def wmp_inverse(a: DenseTensor, weights: WeightPair) -> DenseTensor:
    """Weighted Moore-Penrose inverse computed from the weighted SVD:
    N^{-1} * V * S_pinv * U^H * M."""
    f = wsvd(a, weights)
    s_pinv = hyperdiag_pinv(f.s_tensor())
    n_inv = weights.n.inv_tensor()
    out = einstein_product(n_inv, f.V)
    out = einstein_product(out, s_pinv)
    out = einstein_product(out, conj_transpose(f.U))
    return einstein_product(out, weights.m.tensor)


def wmp_inverse_via_tilde(a: DenseTensor, weights: WeightPair) -> DenseTensor:
    """Independent route: N^{-1/2} * pinv(M^{1/2} A N^{-1/2}) * M^{1/2}."""
    weights.check_conformable(a)
    a_tilde = rsh_inv(
        weights.m_sqrt @ rsh(a) @ weights.n_inv_sqrt, a.row_shape, a.col_shape
    )
    pinv_tilde = mp_inverse(a_tilde)
    return rsh_inv(
        weights.n_inv_sqrt @ rsh(pinv_tilde) @ weights.m_sqrt,
        a.col_shape,
        a.row_shape,
    )


def weighted_conj_transpose(a: DenseTensor, weights: WeightPair) -> DenseTensor:
    """Weighted conjugate transpose N^{-1} * A^H * M; reduces to A^H for
    identity weights."""
    weights.check_conformable(a)
    out = weights.n.inv @ rsh(conj_transpose(a)) @ weights.m.mat
    return rsh_inv(out, a.col_shape, a.row_shape)


def wmp_limit(
    a: DenseTensor, weights: WeightPair, lam: float, side: str = "left"
) -> DenseTensor:
    """Regularized-resolvent approximation of the weighted MP inverse.

    side="left":  (lam*I + A^# * A)^{-1} * A^#
    side="right": A^# * (lam*I + A * A^#)^{-1}

    Both converge to :func:`wmp_inverse` as lam -> 0+, along a route that
    never touches an SVD, which makes this the independent cross-check.
    """
    if lam <= 0:
        raise ShapeError(f"limit parameter must be positive, got {lam}")
    sharp = rsh(weighted_conj_transpose(a, weights))
    a_mat = rsh(a)
    if side == "left":
        gram = sharp @ a_mat
        out = kernels.solve(lam * np.eye(gram.shape[0]) + gram, sharp)
    elif side == "right":
        gram = a_mat @ sharp
        out = sharp @ kernels.inverse(lam * np.eye(gram.shape[0]) + gram)
    else:
        raise ShapeError(f"side must be 'left' or 'right', got {side!r}")
    return rsh_inv(out, a.col_shape, a.row_shape)


def penrose_residuals(
    a: DenseTensor, x: DenseTensor, weights: WeightPair
) -> tuple[float, float, float, float]:
    """Frobenius residuals of the four weighted Penrose equations.

    (1) A X A = A            (2) X A X = X
    (3) (M A X)^H = M A X    (4) (N X A)^H = N X A

    All four vanish exactly at the weighted MP inverse and at no other X.
    """
    weights.check_conformable(a)
    if x.row_shape != a.col_shape or x.col_shape != a.row_shape:
        raise ShapeError(
            f"candidate inverse has shape {x.row_shape} x {x.col_shape}, "
            f"expected {a.col_shape} x {a.row_shape}"
        )
    a_mat, x_mat = rsh(a), rsh(x)
    ax = a_mat @ x_mat
    xa = x_mat @ a_mat
    r1 = np.linalg.norm(ax @ a_mat - a_mat)
    r2 = np.linalg.norm(xa @ x_mat - x_mat)
    max_ = weights.m.mat @ ax
    nxa = weights.n.mat @ xa
    r3 = np.linalg.norm(max_.conj().T - max_)
    r4 = np.linalg.norm(nxa.conj().T - nxa)
    return float(r1), float(r2), float(r3), float(r4)
