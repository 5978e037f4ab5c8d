"""Numerical-range approximation and numerical radius.

The boundary is traced with the support-function sweep: for each angle
theta, the top eigenpair of the Hermitian part of e^{i theta} A supplies
a point of W(A) lying on a supporting line, so the polygon through the
swept points is an inner approximation of W(A) whose hull converges to it.
Random unit-tensor Rayleigh samples fill the interior.  Every emitted
point is an exact Rayleigh quotient, hence genuinely inside W(A).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import KernelError, ShapeError
from .hull import Hull2D, hull_of
from .tensor import DenseTensor, from_matrix, rsh
from .winverse import Weight, WeightPair, wmp_inverse

__all__ = [
    "NRApprox",
    "rayleigh",
    "nr_boundary",
    "nr_sample",
    "numerical_range",
    "numerical_radius",
    "wshift_build",
    "wshift_wmp",
]

DEFAULT_THETAS = 500  # boundary resolution used by the reporting surface
WSHIFT_CHECK_TOL = 1e-9


@dataclass(frozen=True)
class NRApprox:
    """Numerical-range approximation.

    boundary: (theta, point) pairs on the uniform angle grid of [0, 2pi);
    samples:  interior Rayleigh points at random unit tensors;
    radius:   max modulus over boundary and samples.
    """

    boundary: tuple[tuple[float, complex], ...]
    samples: tuple[complex, ...]
    radius: float
    seed: int | None = None

    def boundary_points(self) -> np.ndarray:
        return np.asarray([p for _, p in self.boundary], dtype=np.complex128)

    def hull(self) -> Hull2D:
        return hull_of(self.boundary_points())


def rayleigh(a: DenseTensor, x: DenseTensor) -> complex:
    """Normalized quadratic form <A * x, x> / ||x||^2; scale-invariant."""
    if not x.is_vector_like():
        raise ShapeError("rayleigh needs a vector-like probe tensor")
    if a.col_shape != x.row_shape:
        raise ShapeError(
            f"operand {a.row_shape} x {a.col_shape} cannot act on {x.row_shape}"
        )
    vec = x.flat()
    nrm2 = float(np.vdot(vec, vec).real)
    if nrm2 == 0.0:
        raise ShapeError("rayleigh quotient of the zero tensor")
    return complex(np.vdot(vec, rsh(a) @ vec) / nrm2)


def _require_square(a: DenseTensor, what: str):
    if not a.is_square():
        raise ShapeError(
            f"{what} needs an even-order square tensor, got "
            f"{a.row_shape} x {a.col_shape}"
        )


def _sweep(mat: np.ndarray, n_theta: int) -> tuple[np.ndarray, np.ndarray]:
    thetas = 2.0 * np.pi * np.arange(n_theta) / n_theta
    phases = np.exp(1j * thetas)
    rotated = phases[:, None, None] * mat[None, :, :]
    herm = 0.5 * (rotated + rotated.conj().transpose(0, 2, 1))
    try:
        _, vecs = np.linalg.eigh(herm)
    except np.linalg.LinAlgError as exc:
        raise KernelError(f"boundary sweep eigh failed: {exc}") from exc
    top = vecs[:, :, -1]  # eigh is ascending; last column is the top eigenpair
    points = np.einsum("ki,ij,kj->k", top.conj(), mat, top)
    return thetas, points


def nr_boundary(a: DenseTensor, n_theta: int = DEFAULT_THETAS) -> NRApprox:
    """Boundary sweep of the numerical range on a uniform theta grid."""
    _require_square(a, "nr_boundary")
    if n_theta < 8:
        raise ShapeError(f"n_theta must be at least 8, got {n_theta}")
    thetas, points = _sweep(rsh(a), int(n_theta))
    radius = float(np.max(np.abs(points)))
    return NRApprox(
        boundary=tuple(zip(thetas.tolist(), map(complex, points))),
        samples=(),
        radius=radius,
    )


def nr_sample(a: DenseTensor, n_samples: int, seed: int) -> list[complex]:
    """Rayleigh points at seeded complex-Gaussian random unit tensors."""
    _require_square(a, "nr_sample")
    rng = np.random.default_rng(seed)
    mat = rsh(a)
    p = mat.shape[0]
    out: list[complex] = []
    for _ in range(int(n_samples)):
        v = rng.standard_normal(p) + 1j * rng.standard_normal(p)
        v /= np.linalg.norm(v)
        out.append(complex(np.vdot(v, mat @ v)))
    return out


def numerical_range(
    a: DenseTensor, n_theta: int = DEFAULT_THETAS, n_samples: int = 0, seed: int = 0
) -> NRApprox:
    """Boundary sweep plus interior samples, with the combined radius."""
    base = nr_boundary(a, n_theta)
    samples = tuple(nr_sample(a, n_samples, seed)) if n_samples else ()
    radius = base.radius
    if samples:
        radius = max(radius, float(np.max(np.abs(samples))))
    return NRApprox(
        boundary=base.boundary, samples=samples, radius=radius, seed=seed
    )


def numerical_radius(a: DenseTensor, n_theta: int = 720) -> float:
    """Max modulus over swept boundary points.  Exact up to grid
    resolution: the max-modulus point of a convex set is extreme."""
    return nr_boundary(a, n_theta).radius


def wshift_build(coeffs, n: int) -> DenseTensor:
    """Shift matrix with the given superdiagonal, as an order-2 tensor."""
    coeffs = [complex(c) for c in coeffs]
    if len(coeffs) != n - 1:
        raise ShapeError(
            f"shift of size {n} needs {n - 1} superdiagonal entries, "
            f"got {len(coeffs)}"
        )
    mat = np.zeros((n, n), dtype=np.complex128)
    for k, c in enumerate(coeffs):
        mat[k, k + 1] = c
    return from_matrix(mat)


def wshift_wmp(coeffs, m_diag, n_diag) -> DenseTensor:
    """Weighted MP inverse of a shift matrix under positive diagonal weights.

    For any positive diagonal weights the inverse is the subdiagonal
    reciprocal shift (entries 1/a_k, with 0 where a_k = 0); the closed
    form is verified against the generic weighted inverse before being
    returned.
    """
    coeffs = [complex(c) for c in coeffs]
    n = len(coeffs) + 1
    m_diag = np.asarray(m_diag, dtype=np.float64)
    n_diag = np.asarray(n_diag, dtype=np.float64)
    if m_diag.shape != (n,) or n_diag.shape != (n,):
        raise ShapeError(
            f"diagonal weights must have length {n}, got "
            f"{m_diag.shape} and {n_diag.shape}"
        )
    if np.any(m_diag <= 0) or np.any(n_diag <= 0):
        raise ShapeError("diagonal weights must be positive")
    closed = np.zeros((n, n), dtype=np.complex128)
    for k, c in enumerate(coeffs):
        if c != 0:
            closed[k + 1, k] = 1.0 / c
    shift = wshift_build(coeffs, n)
    weights = WeightPair(
        Weight(from_matrix(np.diag(m_diag))), Weight(from_matrix(np.diag(n_diag)))
    )
    generic = wmp_inverse(shift, weights)
    dev = float(np.max(np.abs(rsh(generic) - closed)))
    if dev > WSHIFT_CHECK_TOL * (1.0 + float(np.max(np.abs(closed)))):
        raise KernelError(
            f"weighted shift inverse mismatch: closed form deviates by {dev:.3e}"
        )
    return from_matrix(closed)
