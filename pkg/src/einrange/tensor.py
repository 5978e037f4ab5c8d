"""Dense complex tensors with an explicit row-mode/column-mode split.

A tensor in C^{I_1 x ... x I_M x J_1 x ... x J_N} is stored as a numpy
array of shape ``row_shape + col_shape``.  Flat (serialized) data and the
matrix reshape both use column-major linearization of the concatenated
multi-index, i.e. Matlab ``reshape`` semantics: the first mode varies
fastest.  Row-major linearization would silently permute the factors of
every decomposition built on the reshape, so the order is load-bearing.

A tensor with empty ``col_shape`` models a "vector-like" element of
C^{I_1 x ... x I_M}; one with both groups empty is a scalar (these arise
as intermediate values of inner products).
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import ShapeError

__all__ = [
    "DenseTensor",
    "einstein_product",
    "rsh",
    "rsh_inv",
    "conj_transpose",
    "pi_transpose",
    "block_diag_embed",
    "inner",
    "norm",
    "frobenius",
    "identity_tensor",
    "zeros",
    "from_matrix",
]


class DenseTensor:
    """Immutable dense complex tensor with ``m`` row modes and ``n`` col modes.

    Parameters
    ----------
    array: array_like of shape row_shape + col_shape (complex entries).
    row_ndim: number of leading modes that form the row group.
    """

    __slots__ = ("_array", "_row_ndim")

    def __init__(self, array, row_ndim: int):
        arr = np.asarray(array, dtype=np.complex128)
        if not 0 <= row_ndim <= arr.ndim:
            raise ShapeError(
                f"row_ndim {row_ndim} out of range for array of order {arr.ndim}"
            )
        if any(d <= 0 for d in arr.shape):
            raise ShapeError(f"zero-extent mode in shape {arr.shape}")
        if not np.isfinite(arr).all():
            raise ShapeError("tensor entries must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        self._array = arr
        self._row_ndim = int(row_ndim)

    @classmethod
    def from_flat(
        cls,
        row_shape: Sequence[int],
        col_shape: Sequence[int],
        values: Iterable[complex],
    ) -> "DenseTensor":
        """Build from flat column-major data over (row_shape, col_shape)."""
        row_shape = tuple(int(d) for d in row_shape)
        col_shape = tuple(int(d) for d in col_shape)
        shape = row_shape + col_shape
        total = math.prod(shape)
        flat = np.asarray(list(values), dtype=np.complex128)
        if flat.size != total:
            raise ShapeError(
                f"flat data has {flat.size} entries, shape {shape} needs {total}"
            )
        return cls(flat.reshape(shape, order="F"), len(row_shape))

    @property
    def array(self) -> np.ndarray:
        """Read-only ndarray view, shape ``row_shape + col_shape``."""
        return self._array

    @property
    def row_shape(self) -> tuple[int, ...]:
        return self._array.shape[: self._row_ndim]

    @property
    def col_shape(self) -> tuple[int, ...]:
        return self._array.shape[self._row_ndim :]

    @property
    def row_ndim(self) -> int:
        return self._row_ndim

    @property
    def col_ndim(self) -> int:
        return self._array.ndim - self._row_ndim

    @property
    def order(self) -> int:
        return self._array.ndim

    @property
    def row_size(self) -> int:
        return math.prod(self.row_shape)

    @property
    def col_size(self) -> int:
        return math.prod(self.col_shape)

    def is_square(self) -> bool:
        return self.row_shape == self.col_shape

    def is_vector_like(self) -> bool:
        return self.col_ndim == 0

    def flat(self) -> np.ndarray:
        """Flat column-major data (the serialization order)."""
        return self._array.ravel(order="F")

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return (
            self._row_ndim == other._row_ndim
            and self._array.shape == other._array.shape
            and bool(np.array_equal(self._array, other._array))
        )

    def __hash__(self):
        return hash((self._row_ndim, self._array.shape, self._array.tobytes()))

    def __add__(self, other: "DenseTensor") -> "DenseTensor":
        self._require_same_shape(other, "add")
        return DenseTensor(self._array + other._array, self._row_ndim)

    def __sub__(self, other: "DenseTensor") -> "DenseTensor":
        self._require_same_shape(other, "subtract")
        return DenseTensor(self._array - other._array, self._row_ndim)

    def __mul__(self, scalar) -> "DenseTensor":
        return DenseTensor(self._array * complex(scalar), self._row_ndim)

    __rmul__ = __mul__

    def __neg__(self) -> "DenseTensor":
        return DenseTensor(-self._array, self._row_ndim)

    def _require_same_shape(self, other: "DenseTensor", what: str):
        if (
            self._row_ndim != other._row_ndim
            or self._array.shape != other._array.shape
        ):
            raise ShapeError(
                f"cannot {what} tensors of shapes {self.row_shape}x{self.col_shape} "
                f"and {other.row_shape}x{other.col_shape}"
            )

    def __repr__(self) -> str:
        return (
            f"DenseTensor(row_shape={self.row_shape}, col_shape={self.col_shape})"
        )


def zeros(row_shape: Sequence[int], col_shape: Sequence[int] = ()) -> DenseTensor:
    """The zero tensor of the given mode shapes."""
    row_shape = tuple(row_shape)
    col_shape = tuple(col_shape)
    return DenseTensor(np.zeros(row_shape + col_shape), len(row_shape))


def identity_tensor(shape: Sequence[int]) -> DenseTensor:
    """Even-order square identity: reshape of the p x p identity matrix."""
    shape = tuple(shape)
    p = math.prod(shape)
    return rsh_inv(np.eye(p), shape, shape)


def from_matrix(mat) -> DenseTensor:
    """Order-2 tensor (one row mode, one col mode) from a 2-D array."""
    mat = np.asarray(mat, dtype=np.complex128)
    if mat.ndim != 2:
        raise ShapeError(f"expected a 2-D array, got ndim {mat.ndim}")
    return DenseTensor(mat, 1)


def einstein_product(a: DenseTensor, b: DenseTensor) -> DenseTensor:
    """Contraction of a's column modes against b's row modes.

    For a in C^{I x K} and b in C^{K x J} the entry at (i, j) is the sum
    over the K multi-index of a[i, k] * b[k, j].  When b has no column
    modes the result is vector-like; when the contracted group is empty
    the product degenerates to the outer product (used for rank-one
    assemblies like u (x) v^H).
    """
    if a.col_shape != b.row_shape:
        raise ShapeError(
            f"einstein product needs left col_shape == right row_shape; "
            f"got {a.col_shape} vs {b.row_shape}"
        )
    n = a.col_ndim
    if n == 0:
        out = np.multiply.outer(a.array, b.array)
    else:
        axes_a = list(range(a.row_ndim, a.row_ndim + n))
        axes_b = list(range(n))
        out = np.tensordot(a.array, b.array, axes=(axes_a, axes_b))
    return DenseTensor(out, a.row_ndim)


def rsh(a: DenseTensor) -> np.ndarray:
    """Flatten the row and column mode groups into a matrix (column-major)."""
    return np.reshape(a.array, (a.row_size, a.col_size), order="F")


def rsh_inv(
    mat, row_shape: Sequence[int], col_shape: Sequence[int] = ()
) -> DenseTensor:
    """Inverse reshape: matrix back to a tensor with the given mode groups."""
    row_shape = tuple(int(d) for d in row_shape)
    col_shape = tuple(int(d) for d in col_shape)
    mat = np.asarray(mat, dtype=np.complex128)
    if mat.ndim == 1:
        mat = mat.reshape(-1, 1)
    m = math.prod(row_shape)
    n = math.prod(col_shape)
    if mat.shape != (m, n):
        raise ShapeError(
            f"matrix of shape {mat.shape} cannot reshape to "
            f"{row_shape} x {col_shape} (needs {(m, n)})"
        )
    arr = np.reshape(mat, row_shape + col_shape, order="F")
    return DenseTensor(arr, len(row_shape))


def conj_transpose(a: DenseTensor) -> DenseTensor:
    """Swap the row and column mode groups and conjugate the entries."""
    axes = tuple(range(a.row_ndim, a.order)) + tuple(range(a.row_ndim))
    return DenseTensor(np.conjugate(np.transpose(a.array, axes)), a.col_ndim)


def pi_transpose(
    a: DenseTensor, perm: Sequence[int], row_ndim: int | None = None
) -> DenseTensor:
    """General mode permutation: result mode k is input mode perm[k].

    ``perm`` is 0-based over all modes.  The identity permutation is
    accepted and returns a copy.  A bare permutation does not determine
    how the result splits into row/column groups, so ``row_ndim`` may
    override the split (default: keep the input's row mode count).
    """
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(a.order)):
        raise ShapeError(
            f"perm {perm} is not a permutation of {a.order} modes"
        )
    if row_ndim is None:
        row_ndim = a.row_ndim
    return DenseTensor(np.transpose(a.array, perm), row_ndim)


def block_diag_embed(b: DenseTensor) -> DenseTensor:
    """Embed a square tensor as the leading block of a doubled-extent tensor.

    Every mode extent doubles; the entries with all indices in the leading
    half reproduce ``b`` and everything else is zero, i.e. the block
    pattern [[B, O], [O, O]].
    """
    if not b.is_square():
        raise ShapeError(
            f"block embedding needs row_shape == col_shape, got "
            f"{b.row_shape} x {b.col_shape}"
        )
    doubled = tuple(2 * d for d in b.row_shape)
    out = np.zeros(doubled + doubled, dtype=np.complex128)
    corner = tuple(slice(0, d) for d in b.row_shape) * 2
    out[corner] = b.array
    return DenseTensor(out, b.row_ndim)


def inner(x: DenseTensor, y: DenseTensor) -> complex:
    """Sesquilinear inner product <x, y> = y^H * x of vector-like tensors."""
    if not (x.is_vector_like() and y.is_vector_like()):
        raise ShapeError("inner product needs vector-like tensors")
    if x.row_shape != y.row_shape:
        raise ShapeError(
            f"inner product shape mismatch: {x.row_shape} vs {y.row_shape}"
        )
    return complex(np.vdot(y.flat(), x.flat()))


def norm(x: DenseTensor) -> float:
    """Norm induced by :func:`inner`; zero iff x is the zero tensor."""
    if not x.is_vector_like():
        raise ShapeError("norm is defined for vector-like tensors")
    return float(np.linalg.norm(x.flat()))


def frobenius(a: DenseTensor) -> float:
    """Frobenius norm over all entries (residual bookkeeping)."""
    return float(np.linalg.norm(a.array.ravel()))
