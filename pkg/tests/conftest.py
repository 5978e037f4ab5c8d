"""Shared helpers: seeded random tensors, weights, and structured instances."""

import numpy as np
import pytest

from einrange import DenseTensor, Weight, WeightPair, from_matrix, rsh_inv

# (row_shape, col_shape) pool with mode products <= 24
SHAPE_POOL = [
    ((2,), (2,)),
    ((3,), (2,)),
    ((2, 2), (3,)),
    ((2, 3), (2, 2)),
    ((4,), (2, 3)),
    ((2, 2, 2), (3,)),
    ((2, 3), (4,)),
    ((6,), (6,)),
    ((2, 2), (2, 2)),
]

SQUARE_SHAPE_POOL = [(2,), (3,), (4,), (2, 2), (5,), (2, 3)]


def rand_complex(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def rand_tensor(rng, row_shape, col_shape=()):
    return DenseTensor(rand_complex(rng, tuple(row_shape) + tuple(col_shape)),
                       len(tuple(row_shape)))


def rand_unitary(rng, n):
    q, r = np.linalg.qr(rand_complex(rng, (n, n)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def rand_hpd(rng, n, eig_range=(0.5, 2.0)):
    q = rand_unitary(rng, n)
    vals = rng.uniform(*eig_range, size=n)
    mat = (q * vals) @ q.conj().T
    return 0.5 * (mat + mat.conj().T)


def rand_weight(rng, shape, eig_range=(0.5, 2.0)):
    shape = tuple(shape)
    n = int(np.prod(shape))
    return Weight(rsh_inv(rand_hpd(rng, n, eig_range), shape, shape))


def rand_weight_pair(rng, row_shape, col_shape, eig_range=(0.5, 2.0)):
    return WeightPair(
        rand_weight(rng, row_shape, eig_range), rand_weight(rng, col_shape, eig_range)
    )


def rand_instance(rng, shapes=SHAPE_POOL):
    """Random tensor with random HPD weights at a pool shape."""
    row_shape, col_shape = shapes[rng.integers(len(shapes))]
    a = rand_tensor(rng, row_shape, col_shape)
    return a, rand_weight_pair(rng, row_shape, col_shape)


def instance_with_singular_values(rng, row_shape, col_shape, s_values, weights=None):
    """Tensor whose (M, N) singular values are exactly ``s_values``."""
    row_shape, col_shape = tuple(row_shape), tuple(col_shape)
    m = int(np.prod(row_shape))
    n = int(np.prod(col_shape))
    if weights is None:
        weights = rand_weight_pair(rng, row_shape, col_shape)
    s_mat = np.zeros((m, n))
    k = min(m, n, len(s_values))
    s_mat[np.arange(k), np.arange(k)] = np.sort(np.asarray(s_values))[::-1][:k]
    tilde = rand_unitary(rng, m) @ s_mat @ rand_unitary(rng, n).conj().T
    a_mat = weights.m_inv_sqrt @ tilde @ weights.n_sqrt
    return rsh_inv(a_mat, row_shape, col_shape), weights


def well_conditioned_instance(rng, mu_range=(0.5, 2.0), shapes=SHAPE_POOL):
    """Full-rank instance with (M, N) singular values inside ``mu_range``."""
    row_shape, col_shape = shapes[rng.integers(len(shapes))]
    k = min(int(np.prod(row_shape)), int(np.prod(col_shape)))
    s_values = rng.uniform(*mu_range, size=k)
    return instance_with_singular_values(rng, row_shape, col_shape, s_values)


def weighted_normal_instance(rng, shape, eigvals=None, weight=None):
    """A = N^{-1/2} B N^{1/2} with B normal, so A is weighted normal
    with respect to N (and weighted EP)."""
    shape = tuple(shape)
    p = int(np.prod(shape))
    if weight is None:
        weight = rand_weight(rng, shape)
    if eigvals is None:
        eigvals = rand_complex(rng, p)
    q = rand_unitary(rng, p)
    b = (q * np.asarray(eigvals)) @ q.conj().T
    a_mat = weight.inv_sqrt @ b @ weight.sqrt
    return rsh_inv(a_mat, shape, shape), weight


def conjugated_hermitian_instance(rng, shape, weight=None):
    """A = N^{-1/2} H N^{1/2} with H Hermitian: weighted self-conjugate."""
    shape = tuple(shape)
    p = int(np.prod(shape))
    if weight is None:
        weight = rand_weight(rng, shape)
    h = rand_complex(rng, (p, p))
    h = 0.5 * (h + h.conj().T)
    a_mat = weight.inv_sqrt @ h @ weight.sqrt
    return rsh_inv(a_mat, shape, shape), weight


def real_matrix_tensor(rng, n):
    return from_matrix(rng.standard_normal((n, n)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
