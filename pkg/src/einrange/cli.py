"""Command-line surface: JSON tensors in, CSV/JSON reports (and figures) out.

Exit codes: 0 success, 2 input/validation failure, 3 numerical failure.
Every command is deterministic given its inputs and seed; rerunning
produces byte-identical CSV and report files.  Wall time is logged to
stderr so it never perturbs the report bytes.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

import numpy as np

from . import __version__
from .errors import EinrangeError, FormatError, KernelError, ShapeError, WeightError
from .hull import boundary_distance, hull_contains
from .numrange import numerical_range
from .spectral import (
    PREDICATE_TOL,
    eigenvalues,
    is_weighted_ep,
    is_weighted_normal,
    is_weighted_self_conjugate,
)
from .tensor import DenseTensor, frobenius, rsh
from .tensor_io import (
    dump_tensor,
    file_digest,
    format_complex,
    load_tensor,
    write_boundary_csv,
    write_report,
    write_samples_csv,
)
from .winverse import (
    Weight,
    WeightPair,
    mp_inverse,
    penrose_residuals,
    wmp_inverse,
    wmp_limit,
    wsvd,
)
from .wnorms import norm_report

ZERO_BAND = 1e-3  # exclusion band for zero-containment verdicts at the boundary


def _env_seed() -> int:
    raw = os.environ.get("EINRANGE_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise FormatError(f"EINRANGE_SEED must be an integer, got {raw!r}")


def _load(path) -> DenseTensor:
    return load_tensor(path)


def _load_weight(path):
    try:
        return Weight(_load(path))
    except WeightError as exc:
        raise WeightError(f"{path}: {exc}") from exc


def _load_weights(args) -> WeightPair:
    return WeightPair(_load_weight(args.weight_m), _load_weight(args.weight_n))


def _base_report(command: str, inputs: dict, seed=None) -> dict:
    report = {
        "command": command,
        "version": __version__,
        "inputs": {name: file_digest(path) for name, path in inputs.items()},
    }
    if seed is not None:
        report["seed"] = int(seed)
    return report


def cmd_wsvd(args) -> int:
    a = _load(args.input)
    weights = _load_weights(args)
    factors = wsvd(a, weights)
    os.makedirs(args.out_dir, exist_ok=True)
    paths = {
        "U": os.path.join(args.out_dir, "U.json"),
        "S": os.path.join(args.out_dir, "S.json"),
        "V": os.path.join(args.out_dir, "V.json"),
    }
    dump_tensor(factors.U, paths["U"])
    dump_tensor(factors.s_tensor(), paths["S"])
    dump_tensor(factors.V, paths["V"])

    u_mat, v_mat = rsh(factors.U), rsh(factors.V)
    recon = frobenius(factors.reconstruct() - a)
    orth_u = np.linalg.norm(
        u_mat.conj().T @ weights.m.mat @ u_mat - np.eye(u_mat.shape[1])
    )
    orth_v = np.linalg.norm(
        v_mat.conj().T @ weights.n.inv @ v_mat - np.eye(v_mat.shape[1])
    )
    report = _base_report(
        "wsvd",
        {"input": args.input, "weight_m": args.weight_m, "weight_n": args.weight_n},
    )
    report["singular_values"] = [float(s) for s in factors.s]
    report["rank"] = factors.rank
    report["residuals"] = {
        "reconstruction": float(recon),
        "u_weight_orthogonality": float(orth_u),
        "v_weight_orthogonality": float(orth_v),
    }
    report["outputs"] = sorted(paths.values())
    report_path = os.path.join(args.out_dir, "report.json")
    write_report(report, report_path)
    print(report_path)
    return 0


def _pinv_common(args, weighted: bool) -> int:
    a = _load(args.input)
    if weighted:
        weights = _load_weights(args)
    else:
        weights = WeightPair.identity(a.row_shape, a.col_shape)

    via = getattr(args, "via", None)
    if via is None:
        x = wmp_inverse(a, weights) if weighted else mp_inverse(a)
        route = "wsvd"
    else:
        if not via.startswith("limit:"):
            raise FormatError(f"--via must look like limit:LAMBDA, got {via!r}")
        try:
            lam = float(via.split(":", 1)[1])
        except ValueError:
            raise FormatError(f"bad --via lambda in {via!r}")
        if lam <= 0:
            raise FormatError("--via limit lambda must be positive")
        x = wmp_limit(a, weights, lam)
        route = f"limit:{lam:g}"

    dump_tensor(x, args.out)
    inputs = {"input": args.input}
    if weighted:
        inputs["weight_m"] = args.weight_m
        inputs["weight_n"] = args.weight_n
    report = _base_report("wpinv" if weighted else "pinv", inputs)
    report["route"] = route
    if args.check:
        r1, r2, r3, r4 = penrose_residuals(a, x, weights)
        report["residuals"] = {
            "solution": r1,
            "inverse": r2,
            "m_symmetry": r3,
            "n_symmetry": r4,
        }
    report["outputs"] = [args.out]
    report_path = args.report or args.out + ".report.json"
    write_report(report, report_path)
    print(report_path)
    return 0


def cmd_wpinv(args) -> int:
    return _pinv_common(args, weighted=True)


def cmd_pinv(args) -> int:
    return _pinv_common(args, weighted=False)


def cmd_eig(args) -> int:
    a = _load(args.input)
    spectrum = eigenvalues(a)
    print(", ".join(format_complex(v) for v in spectrum))
    if args.report:
        report = _base_report("eig", {"input": args.input})
        report["eigenvalues"] = list(spectrum)
        report["spectral_radius"] = spectrum.radius
        write_report(report, args.report)
    return 0


def cmd_norms(args) -> int:
    a = _load(args.input)
    if args.weight_m and args.weight_n:
        weights = _load_weights(args)
    else:
        weights = WeightPair.identity(a.row_shape, a.col_shape)
    rep = norm_report(a, weights)
    for name in ("spectral", "weighted_mn", "weighted_nm", "mu_max", "mu_min"):
        print(f"{name} = {getattr(rep, name):.12g}")
    if args.report:
        report = _base_report("norms", {"input": args.input})
        report["norms"] = {
            "spectral": rep.spectral,
            "weighted_mn": rep.weighted_mn,
            "weighted_nm": rep.weighted_nm,
            "mu_max": rep.mu_max,
            "mu_min": rep.mu_min,
        }
        write_report(report, args.report)
    return 0


def cmd_classify(args) -> int:
    a = _load(args.input)
    weights = _load_weights(args)
    tol = args.tol
    sc = is_weighted_self_conjugate(a, weights.n, tol)
    wn = is_weighted_normal(a, weights.n, tol)
    ep = is_weighted_ep(a, weights, tol)
    x = wmp_inverse(a, weights)
    comm = np.linalg.norm(rsh(a) @ rsh(x) - rsh(x) @ rsh(a))
    print(f"self_conjugate = {str(sc).lower()}")
    print(f"weighted_normal = {str(wn).lower()}")
    print(f"weighted_ep = {str(ep).lower()}")
    if args.report:
        report = _base_report(
            "classify",
            {
                "input": args.input,
                "weight_m": args.weight_m,
                "weight_n": args.weight_n,
            },
        )
        report["tolerances"] = {"predicate": tol}
        report["predicates"] = {
            "self_conjugate": sc,
            "weighted_normal": wn,
            "weighted_ep": ep,
        }
        report["residuals"] = {"ep_commutator": float(comm)}
        write_report(report, args.report)
    return 0


def _numrange_operands(args, a: DenseTensor):
    """(label, tensor) pairs for the requested operands."""
    which = args.of
    operands = [("a", a)]
    if which in ("wpinv", "both"):
        if not (args.weight_m and args.weight_n):
            raise FormatError("--of wpinv/both requires --weight-m and --weight-n")
        weights = _load_weights(args)
        if which == "both":
            operands.append(("pinv", mp_inverse(a)))
        operands.append(("wpinv", wmp_inverse(a, weights)))
    if which == "wpinv":
        operands = operands[1:]
    return operands


def cmd_numrange(args) -> int:
    a = _load(args.input)
    seed = args.seed if args.seed is not None else _env_seed()
    operands = _numrange_operands(args, a)

    inputs = {"input": args.input}
    if args.of in ("wpinv", "both"):
        inputs["weight_m"] = args.weight_m
        inputs["weight_n"] = args.weight_n
    report = _base_report("numrange", inputs, seed=seed)
    report["thetas"] = args.thetas
    report["samples"] = args.samples
    report["tolerances"] = {"zero_boundary_band": ZERO_BAND}
    results = {}
    outputs = []
    approxes = {}
    spectra = {}
    for idx, (label, tensor) in enumerate(operands):
        approx = numerical_range(
            tensor, n_theta=args.thetas, n_samples=args.samples, seed=seed + idx
        )
        approxes[label] = approx
        spectra[label] = list(eigenvalues(tensor))
        boundary_path = f"{args.csv}_{label}_boundary.csv"
        write_boundary_csv(boundary_path, approx.boundary)
        outputs.append(boundary_path)
        if args.samples:
            samples_path = f"{args.csv}_{label}_samples.csv"
            write_samples_csv(samples_path, approx.samples)
            outputs.append(samples_path)
        h = approx.hull()
        gap = boundary_distance(h, 0.0)
        entry = {
            "radius": approx.radius,
            "contains_zero": hull_contains(h, 0.0),
            "zero_boundary_gap": float(gap),
            "zero_verdict_reliable": bool(gap >= ZERO_BAND),
        }
        results[label] = entry
    report["ranges"] = results
    if args.of == "both" and "wpinv" in results:
        pair_ok = results["a"]["contains_zero"] == results["wpinv"]["contains_zero"]
        reliable = (
            results["a"]["zero_verdict_reliable"]
            and results["wpinv"]["zero_verdict_reliable"]
        )
        report["zero_containment_equivalence"] = {
            "a": results["a"]["contains_zero"],
            "wpinv": results["wpinv"]["contains_zero"],
            "consistent": pair_ok,
            "reliable": reliable,
        }
    if args.plot:
        from .plotting import render_numrange_figure

        fig_path = render_numrange_figure(
            approxes,
            spectra,
            out_path=f"{args.csv}_numrange.png",
            title="Numerical ranges",
        )
        outputs.append(fig_path)
    report["outputs"] = outputs
    report_path = f"{args.csv}_report.json"
    write_report(report, report_path)
    print(report_path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="einrange",
        description="Einstein-product tensor algebra: weighted SVD, weighted "
        "Moore-Penrose inverses, norms, and numerical ranges.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"einrange {__version__} (numpy {np.__version__})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wsvd", help="weighted singular value decomposition")
    p.add_argument("--input", required=True, help="tensor JSON file")
    p.add_argument("--weight-m", required=True, help="row-space weight JSON")
    p.add_argument("--weight-n", required=True, help="column-space weight JSON")
    p.add_argument("--out-dir", required=True, help="directory for U/S/V + report")
    p.set_defaults(func=cmd_wsvd)

    p = sub.add_parser("wpinv", help="weighted Moore-Penrose inverse")
    p.add_argument("--input", required=True)
    p.add_argument("--weight-m", required=True)
    p.add_argument("--weight-n", required=True)
    p.add_argument("--out", required=True, help="output tensor JSON")
    p.add_argument("--check", action="store_true",
                   help="append the four defining-equation residuals")
    p.add_argument("--via", default=None, metavar="limit:LAMBDA",
                   help="use the regularized-resolvent route instead of the WSVD")
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_wpinv)

    p = sub.add_parser("pinv", help="Moore-Penrose inverse (identity weights)")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_pinv, via=None)

    p = sub.add_parser("eig", help="eigenvalues of an even-order square tensor")
    p.add_argument("--input", required=True)
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_eig)

    p = sub.add_parser("norms", help="spectral and weighted operator norms")
    p.add_argument("--input", required=True)
    p.add_argument("--weight-m", default=None)
    p.add_argument("--weight-n", default=None)
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_norms)

    p = sub.add_parser("classify",
                       help="weighted self-conjugate / normal / EP predicates")
    p.add_argument("--input", required=True)
    p.add_argument("--weight-m", required=True)
    p.add_argument("--weight-n", required=True)
    p.add_argument("--tol", type=float, default=PREDICATE_TOL,
                   help=f"relative predicate tolerance (default {PREDICATE_TOL:g})")
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("numrange", help="numerical-range boundary and samples")
    p.add_argument("--input", required=True)
    p.add_argument("--weight-m", default=None)
    p.add_argument("--weight-n", default=None)
    p.add_argument("--of", choices=("a", "wpinv", "both"), default="a",
                   help="operand(s): the tensor, its weighted inverse, or "
                   "tensor + plain inverse + weighted inverse")
    p.add_argument("--thetas", type=int, default=500)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed (fallback: EINRANGE_SEED, then 0)")
    p.add_argument("--csv", required=True, metavar="PREFIX",
                   help="prefix for boundary/sample CSV files")
    p.add_argument("--plot", action="store_true",
                   help="also render a PNG figure next to the CSVs")
    p.set_defaults(func=cmd_numrange)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        code = args.func(args)
    except (FormatError, WeightError, ShapeError) as exc:
        print(f"einrange: error: {exc}", file=sys.stderr)
        return 2
    except KernelError as exc:
        print(f"einrange: numerical failure: {exc}", file=sys.stderr)
        return 3
    except EinrangeError as exc:
        print(f"einrange: error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.monotonic() - start
    print(f"einrange: {args.command} finished in {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
