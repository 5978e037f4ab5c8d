"""Weighted inner products, weighted vector norms, and operator norms.

The weighted operator norm ||A||_MN is the largest (M, N) singular value;
it is computed exactly (desk scale) as the spectral norm of the congruence
transform M^{1/2} A N^{-1/2} rather than by power iteration.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .tensor import DenseTensor, rsh
from .winverse import WeightPair, as_weight, wmp_inverse, wsvd

__all__ = [
    "NormReport",
    "weighted_inner",
    "weighted_vec_norm",
    "op_norm",
    "weighted_op_norm",
    "norm_report",
]


def weighted_inner(x: DenseTensor, y: DenseTensor, weight) -> complex:
    """Weighted inner product <x, y>_W = <W * x, y> on vector-like tensors."""
    w = as_weight(weight)
    if not (x.is_vector_like() and y.is_vector_like()):
        raise ShapeError("weighted inner product needs vector-like tensors")
    if x.row_shape != y.row_shape or w.shape != x.row_shape:
        raise ShapeError(
            f"shape mismatch: x {x.row_shape}, y {y.row_shape}, weight {w.shape}"
        )
    wx = w.mat @ x.flat()
    return complex(np.vdot(y.flat(), wx))


def weighted_vec_norm(x: DenseTensor, weight) -> float:
    """||x||_W = ||W^{1/2} * x|| (the factorized form keeps it exactly
    nonnegative)."""
    w = as_weight(weight)
    if not x.is_vector_like():
        raise ShapeError("weighted norm needs a vector-like tensor")
    if w.shape != x.row_shape:
        raise ShapeError(
            f"weight shape {w.shape} does not match tensor {x.row_shape}"
        )
    return float(np.linalg.norm(w.sqrt @ x.flat()))


def op_norm(a: DenseTensor) -> float:
    """Spectral norm: largest singular value of the reshaped matrix."""
    s = np.linalg.svd(rsh(a), compute_uv=False)
    return float(s[0]) if s.size else 0.0


def weighted_op_norm(a: DenseTensor, weights: WeightPair, direction: str = "mn") -> float:
    """Weighted operator norm.

    direction="mn": operand maps the N-weighted space into the M-weighted
    one (||M^{1/2} A N^{-1/2}||); direction="nm" is the reverse-direction
    norm used for inverses (||N^{1/2} B M^{-1/2}||).
    """
    direction = direction.lower()
    if direction == "mn":
        weights.check_conformable(a)
        mat = weights.m_sqrt @ rsh(a) @ weights.n_inv_sqrt
    elif direction == "nm":
        if weights.n.shape != a.row_shape or weights.m.shape != a.col_shape:
            raise ShapeError(
                f"operand {a.row_shape} x {a.col_shape} does not conform to "
                f"reversed weights {weights.n.shape} / {weights.m.shape}"
            )
        mat = weights.n_sqrt @ rsh(a) @ weights.m.inv_sqrt
    else:
        raise ShapeError(f"direction must be 'mn' or 'nm', got {direction!r}")
    s = np.linalg.svd(mat, compute_uv=False)
    return float(s[0]) if s.size else 0.0


@dataclass(frozen=True)
class NormReport:
    """Norm summary for a tensor under a weight pair.

    ``weighted_nm`` is the reverse-direction norm of the weighted MP
    inverse.  ``mu_min`` is the smallest *nonzero* (M, N) singular value,
    so that weighted_nm == 1/mu_min also holds for rank-deficient input.
    """

    spectral: float
    weighted_mn: float
    weighted_nm: float
    mu_max: float
    mu_min: float


def norm_report(a: DenseTensor, weights: WeightPair) -> NormReport:
    f = wsvd(a, weights)
    x = wmp_inverse(a, weights)
    mu = f.s[: f.rank]
    mu_max = float(mu[0]) if mu.size else 0.0
    mu_min = float(mu[-1]) if mu.size else 0.0
    return NormReport(
        spectral=op_norm(a),
        weighted_mn=weighted_op_norm(a, weights, "mn"),
        weighted_nm=weighted_op_norm(x, weights, "nm"),
        mu_max=mu_max,
        mu_min=mu_min,
    )
