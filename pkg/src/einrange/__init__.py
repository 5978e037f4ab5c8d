"""einrange: dense complex tensor algebra over the Einstein product.

Weighted singular value decomposition, (weighted) Moore-Penrose inverses,
weighted operator norms, spectral predicates, and numerical-range
estimation for even-order square tensors.
"""

__version__ = "0.1.0"

from .errors import (
    EinrangeError,
    FormatError,
    KernelError,
    ShapeError,
    SingularMatrixError,
    WeightError,
)
from .hull import (
    Hull2D,
    hull_contains,
    hull_hausdorff,
    hull_of,
    hulls_intersect,
)
from .numrange import (
    NRApprox,
    nr_boundary,
    nr_sample,
    numerical_radius,
    numerical_range,
    rayleigh,
    wshift_build,
    wshift_wmp,
)
from .spectral import (
    Spectrum,
    eigenvalues,
    is_weighted_ep,
    is_weighted_normal,
    is_weighted_self_conjugate,
    spectral_radius,
    tilde_mn,
    tilde_n,
)
from .tensor import (
    DenseTensor,
    block_diag_embed,
    conj_transpose,
    einstein_product,
    frobenius,
    from_matrix,
    identity_tensor,
    inner,
    norm,
    pi_transpose,
    rsh,
    rsh_inv,
    zeros,
)
from .winverse import (
    Weight,
    WeightPair,
    WsvdFactors,
    hyperdiag_pinv,
    mp_inverse,
    penrose_residuals,
    weighted_conj_transpose,
    wmp_inverse,
    wmp_inverse_via_tilde,
    wmp_limit,
    wsvd,
)
from .wnorms import (
    NormReport,
    norm_report,
    op_norm,
    weighted_inner,
    weighted_op_norm,
    weighted_vec_norm,
)

__all__ = [
    "__version__",
    "EinrangeError",
    "FormatError",
    "KernelError",
    "ShapeError",
    "SingularMatrixError",
    "WeightError",
    "DenseTensor",
    "Weight",
    "WeightPair",
    "WsvdFactors",
    "Spectrum",
    "NormReport",
    "NRApprox",
    "Hull2D",
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
    "wsvd",
    "hyperdiag_pinv",
    "mp_inverse",
    "wmp_inverse",
    "wmp_inverse_via_tilde",
    "weighted_conj_transpose",
    "wmp_limit",
    "penrose_residuals",
    "eigenvalues",
    "spectral_radius",
    "tilde_n",
    "tilde_mn",
    "is_weighted_self_conjugate",
    "is_weighted_normal",
    "is_weighted_ep",
    "weighted_inner",
    "weighted_vec_norm",
    "op_norm",
    "weighted_op_norm",
    "norm_report",
    "rayleigh",
    "nr_boundary",
    "nr_sample",
    "numerical_range",
    "numerical_radius",
    "hull_of",
    "hull_contains",
    "hulls_intersect",
    "hull_hausdorff",
    "wshift_build",
    "wshift_wmp",
]
