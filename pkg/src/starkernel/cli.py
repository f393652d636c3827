"""Command-line surface.

    starkernel check <spec>              associativity check
    starkernel realize <spec> [--out D]  quantizers, dequantizers, report
    starkernel kernel <spec>             trace-formula kernel
    starkernel dualize <spec>            dual-scheme constants
    starkernel demo <name> [flags]       worked schemes and oscillator checks

Machine-readable JSON goes to stdout, human summaries to stderr.
Exit codes: 0 success, 1 input error, 2 mathematical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from pathlib import Path

from . import _threads  # noqa: F401

import numpy as np

from .algebra import PAULI, check_associativity, kappa_matrix, from_matrix_basis
from .catalog import PAULI_KERNEL_SLICES, exotic_scheme, kappa_scheme, pauli_scheme
from .fock import FockSpace, TruncationWarning
from .linalg import RankError, dump_matrices
from .moyal import (groenewold_identity_residual, moyal_kernel_oracle,
                    moyal_kernel_trace)
from .realization import (dualize, kernel_from_scheme, realize_and_verify,
                          regular_representation)
from .specfile import (SpecFileError, build_report, constants_to_triplets,
                       parse_spec)
from .tomography import (TomoPoint, ground_state_tomogram,
                         ground_state_tomogram_ft, homogeneity_residual,
                         homogeneous_pairing_residual,
                         kernel_identity_residual, non_homogeneous_test,
                         non_homogeneous_test_ft, tomogram)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MATH = 2


def _human(msg: str):
    print(msg, file=sys.stderr)


def _emit(doc: dict, out: Path | None, name: str):
    text = json.dumps(doc, indent=2)
    print(text)
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        (out / name).write_text(text + "\n")


def _read_spec(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc}") from exc
    return parse_spec(text)


def cmd_check(args) -> int:
    sc, _ = _read_spec(args.spec)
    report = check_associativity(sc, tol=args.tol_algebra)
    doc = {
        "scheme": sc.name or Path(args.spec).stem,
        "dim": sc.dim,
        "associativity_residual": report.max_residual,
        "worst_indices": list(report.worst_indices),
        "tolerance": report.tol,
        "passed": report.passed,
    }
    _emit(doc, args.out, "check.json")
    _human(f"associativity residual {report.max_residual:.3e} "
           f"({'pass' if report.passed else 'FAIL'} at {report.tol:g})")
    return EXIT_OK if report.passed else EXIT_MATH


def _realize(args):
    sc, _weight = _read_spec(args.spec)
    with warnings.catch_warnings(record=True) as seen:
        warnings.simplefilter("always", TruncationWarning)
        result = realize_and_verify(sc, name=sc.name or Path(args.spec).stem,
                                    tol=args.tol_algebra)
    report = build_report(result, tolerance=args.tol_algebra,
                          warnings_seen=[w.message for w in seen])
    return sc, result, report


def cmd_realize(args) -> int:
    try:
        sc, result, report = _realize(args)
    except RankError as exc:
        doc = {"error": "rank", "detail": str(exc),
               "gram_rank": exc.rank, "needed": exc.needed}
        _emit(doc, args.out, "report.json")
        _human(f"rank error: {exc}")
        return EXIT_MATH
    scheme = result["scheme"]
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        q_txt = dump_matrices((f"D{j}", m) for j, m in enumerate(scheme.quantizers))
        u_txt = dump_matrices((f"U{j}", m) for j, m in enumerate(scheme.dequantizers))
        (args.out / "quantizers.txt").write_text(q_txt)
        (args.out / "dequantizers.txt").write_text(u_txt)
        header = {"name": scheme.name, "labels": scheme.n, "operator_size": scheme.hdim,
                  "files": {"quantizers": "quantizers.txt",
                            "dequantizers": "dequantizers.txt"}}
        (args.out / "scheme.json").write_text(json.dumps(header, indent=2) + "\n")
    _emit(report.to_dict(), args.out, "report.json")
    _human(f"{scheme.name}: closure {report.quantizer_closure_residual:.2e}, "
           f"duality {report.duality_residual:.2e}, "
           f"recovery {report.kernel_recovery_residual:.2e} "
           f"({'pass' if report.passed else 'FAIL'})")
    return EXIT_OK if report.passed else EXIT_MATH


def cmd_kernel(args) -> int:
    try:
        sc, result, report = _realize(args)
    except RankError as exc:
        _emit({"error": "rank", "detail": str(exc)}, args.out, "kernel.json")
        return EXIT_MATH
    kernel = kernel_from_scheme(result["scheme"])
    doc = {
        "scheme": result["scheme"].name,
        "kernel": constants_to_triplets(kernel.as_structure_constants()),
        "kernel_recovery_residual": report.kernel_recovery_residual,
        "passed": report.passed,
    }
    _emit(doc, args.out, "kernel.json")
    return EXIT_OK if report.passed else EXIT_MATH


def cmd_dualize(args) -> int:
    try:
        sc, result, report = _realize(args)
    except RankError as exc:
        _emit({"error": "rank", "detail": str(exc)}, args.out, "dual.json")
        return EXIT_MATH
    doc = {
        "scheme": result["scheme"].name,
        "dual_constants": report.dual_constants,
        "duality_residual": report.duality_residual,
        "passed": report.passed,
    }
    _emit(doc, args.out, "dual.json")
    return EXIT_OK if report.passed else EXIT_MATH


# --- demos -------------------------------------------------------------------


def _demo_pauli(args) -> tuple[dict, bool]:
    entry = pauli_scheme()
    result = realize_and_verify(entry.constants, name="pauli", tol=args.tol_algebra)
    kernel = kernel_from_scheme(entry.scheme)
    slices = [[[f"{v.real:.6g}{v.imag:+.6g}i" for v in row] for row in kernel.k[:, :, s]]
              for s in range(4)]
    slice_err = max(float(np.abs(kernel.k[:, :, s] - PAULI_KERNEL_SLICES[s]).max())
                    for s in range(4))
    doc = {
        "demo": "pauli",
        "kernel_slices": slices,
        "kernel_vs_reference": slice_err,
        "closure_residual": result["closure_residual"],
        "duality_residual": result["duality_residual"],
        "kernel_recovery_residual": result["kernel_recovery_residual"],
    }
    ok = max(slice_err, result["duality_residual"],
             result["kernel_recovery_residual"]) <= args.tol_algebra
    return doc, ok


def _demo_exotic(args) -> tuple[dict, bool]:
    entry = exotic_scheme()
    result = realize_and_verify(entry.constants, name="exotic", tol=args.tol_algebra)
    dual = result["dual_constants"]
    half_swapped = 0.5 * entry.constants.c.transpose(1, 0, 2)
    dual_err = float(np.abs(dual.c - half_swapped).max())
    doc = {
        "demo": "exotic",
        "closure_residual": result["closure_residual"],
        "duality_residual": result["duality_residual"],
        "kernel_recovery_residual": result["kernel_recovery_residual"],
        "dual_equals_half_swapped_constants": dual_err,
        "dual_constants": constants_to_triplets(dual),
    }
    ok = max(result["closure_residual"], result["duality_residual"],
             result["kernel_recovery_residual"], dual_err) <= args.tol_algebra
    return doc, ok


def _demo_kappa(args) -> tuple[dict, bool]:
    s = np.asarray(args.s, dtype=float)
    entry = kappa_scheme(s)
    kap = kappa_matrix(s)
    brute = from_matrix_basis(PAULI, product=lambda a, b: a @ kap @ b)
    constants_err = float(np.abs(entry.constants.c - brute.c).max())
    result = realize_and_verify(entry.constants, name=entry.name,
                                tol=args.tol_algebra)
    doc = {
        "demo": "kappa",
        "s": [float(v) for v in s],
        "constants_vs_bruteforce": constants_err,
        "closure_residual": result["closure_residual"],
        "duality_residual": result["duality_residual"],
        "kernel_recovery_residual": result["kernel_recovery_residual"],
    }
    if np.allclose(s, [1.0, 0, 0, 0]):
        # at the undeformed point the quantizers are twice the regular
        # representation of the half-Pauli constants, i.e. twice the
        # transposes of the kernel slices (layout note: the slices index
        # (first factor, second factor), the representation (output, input))
        ds = entry.scheme.quantizers
        vs_tr = max(float(np.abs(ds[g] - 2 * PAULI_KERNEL_SLICES[g].T).max())
                    for g in range(4))
        vs_lit = max(float(np.abs(ds[g] - 2 * PAULI_KERNEL_SLICES[g]).max())
                     for g in range(4))
        doc["quantizers_vs_2x_kernel_slices_transposed"] = vs_tr
        doc["quantizers_vs_2x_kernel_slices_literal"] = vs_lit
    ok = max(constants_err, result["closure_residual"],
             result["duality_residual"],
             result["kernel_recovery_residual"]) <= args.tol_algebra
    return doc, ok


def _demo_moyal(args) -> tuple[dict, bool]:
    fs = FockSpace(args.levels)
    zgrid = [0.0, 0.5, 0.5j, -0.7 + 0.3j, 0.6 - 0.8j]
    groen_rows = []
    worst_groen = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        for z1 in zgrid:
            for z2 in zgrid:
                r = groenewold_identity_residual(fs, z1, z2)
                worst_groen = max(worst_groen, r)
                groen_rows.append((np.sqrt(2) * np.real(z1), np.sqrt(2) * np.imag(z1),
                                   np.sqrt(2) * np.real(z2), np.sqrt(2) * np.imag(z2),
                                   fs.trunc, r))
        rng = np.random.default_rng(7)
        kern_rows = []
        worst_kern = 0.0
        for _ in range(args.samples):
            zs = [rng.uniform(0, 0.8) * np.exp(1j * rng.uniform(0, 2 * np.pi))
                  for _ in range(3)]
            err = abs(moyal_kernel_trace(fs, *zs) - moyal_kernel_oracle(*zs))
            worst_kern = max(worst_kern, err)
            row = []
            for z in zs:
                row += [np.sqrt(2) * z.real, np.sqrt(2) * z.imag]
            kern_rows.append((*row, fs.trunc, err))

    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        with (args.out / "moyal_kernel_residuals.csv").open("w", newline="") as f:
            w = csv.writer(f)
            w.writerow(["q1", "p1", "q2", "p2", "q3", "p3", "N", "residual"])
            w.writerows(kern_rows)
        with (args.out / "moyal_groenewold_residuals.csv").open("w", newline="") as f:
            w = csv.writer(f)
            w.writerow(["q1", "p1", "q2", "p2", "N", "residual"])
            w.writerows(groen_rows)

    kernel_tol = 1e-4 if args.levels >= 80 else None
    doc = {
        "demo": "moyal",
        "levels": fs.trunc,
        "groenewold_max_residual": worst_groen,
        "groenewold_tolerance": args.tol_moyal,
        "kernel_trace_max_error": worst_kern,
        "kernel_trace_tolerance": kernel_tol,
        "probe_points": len(groen_rows),
        "kernel_samples": len(kern_rows),
    }
    ok = worst_groen <= args.tol_moyal and (kernel_tol is None or worst_kern <= kernel_tol)
    return doc, ok


def _demo_tomography(args) -> tuple[dict, bool]:
    fs = FockSpace(args.levels)
    probes = [
        (TomoPoint(0.0, 1.0, 0.0), TomoPoint(0.0, 1.0, 0.0)),
        (TomoPoint(0.0, 1.0, 0.0), TomoPoint(0.0, 0.0, 1.0)),
        (TomoPoint(0.5, 1.0, 0.3), TomoPoint(-0.2, 0.7, -1.1)),
    ]
    kernel_res = max(kernel_identity_residual(fs, a, b) for a, b in probes)

    xs = np.linspace(-6.0, 6.0, 481)
    ground = tomogram(fs, fs.fock_state(0), 1.0, 0.0, xs)
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        with (args.out / "tomogram_ground.csv").open("w", newline="") as f:
            w = csv.writer(f)
            w.writerow(["X", "value"])
            w.writerows(zip(ground.xs, ground.values))

    homog = {}
    for n in range(3):
        rho = fs.fock_state(n)
        base = tomogram(fs, rho, 1.0, 0.0, xs)
        for lam in (0.5, 2.0, -1.0):
            lo = min(lam * xs[0], lam * xs[-1]) - 0.5
            hi = max(lam * xs[0], lam * xs[-1]) + 0.5
            gx = np.linspace(lo, hi, int((hi - lo) / 0.05) + 1)
            scaled = tomogram(fs, rho, lam * 1.0, lam * 0.0, gx)
            homog[f"n{n}_lam{lam:g}"] = homogeneity_residual(base, scaled, lam)
    homog_max = max(homog.values())

    pair_ok = homogeneous_pairing_residual(
        ground_state_tomogram, ground_state_tomogram_ft, TomoPoint(0.0, 1.0, 0.0))
    pair_bad = homogeneous_pairing_residual(
        non_homogeneous_test, non_homogeneous_test_ft, TomoPoint(0.0, 1.0, 0.0))

    doc = {
        "demo": "tomography",
        "levels": fs.trunc,
        "kernel_identity_max_residual": kernel_res,
        "kernel_identity_tolerance": args.tol_moyal,
        "homogeneity_residuals": homog,
        "homogeneity_tolerance": args.tol_tomo,
        "ground_state_normalization_defect": ground.normalization_defect(),
        "ground_state_nonnegativity_defect": ground.nonnegativity_defect(),
        "pairing_residual_homogeneous": pair_ok,
        "pairing_residual_non_homogeneous": pair_bad,
    }
    ok = (kernel_res <= args.tol_moyal and homog_max <= args.tol_tomo
          and ground.normalization_defect() <= args.tol_tomo
          and pair_ok <= 1e-4 and pair_bad >= 1e-2)
    return doc, ok


DEMOS = {
    "pauli": _demo_pauli,
    "exotic": _demo_exotic,
    "kappa": _demo_kappa,
    "moyal": _demo_moyal,
    "tomography": _demo_tomography,
}


def cmd_demo(args) -> int:
    try:
        doc, ok = DEMOS[args.name](args)
    except RankError as exc:
        _emit({"demo": args.name, "error": "rank", "detail": str(exc)},
              args.out, f"demo_{args.name}.json")
        return EXIT_MATH
    doc["passed"] = ok
    _emit(doc, args.out, f"demo_{args.name}.json")
    _human(f"demo {args.name}: {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_MATH


def _parse_svec(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected four comma-separated reals, e.g. 1,0,0,0")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1); argparse defaults to 2, which
    # this tool reserves for mathematical failures
    def error(self, message):
        self.print_usage(sys.stderr)
        _human(f"usage error: {message}")
        raise SystemExit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="starkernel", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", type=Path, default=None,
                       help="directory for artifacts (created if missing)")
        p.add_argument("--tol-algebra", type=float, default=1e-10,
                       help="tolerance for exact finite-algebra residuals")
        p.add_argument("--tol-moyal", type=float, default=1e-6,
                       help="tolerance for truncated-oscillator identity residuals")
        p.add_argument("--tol-tomo", type=float, default=1e-3,
                       help="tolerance for tomography quadrature residuals")

    for name, fn, needs_spec in [("check", cmd_check, True),
                                 ("realize", cmd_realize, True),
                                 ("kernel", cmd_kernel, True),
                                 ("dualize", cmd_dualize, True)]:
        p = sub.add_parser(name)
        if needs_spec:
            p.add_argument("spec", help="algebra spec file (JSON)")
        common(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("demo")
    p.add_argument("name", choices=sorted(DEMOS))
    p.add_argument("--levels", type=int, default=60,
                   help="oscillator truncation for moyal/tomography demos")
    p.add_argument("--samples", type=int, default=10,
                   help="random kernel-trace samples in the moyal demo")
    p.add_argument("--s", type=_parse_svec, default=[1.0, 0.0, 0.0, 0.0],
                   help="kappa deformation components, e.g. --s 1,0,0,0")
    common(p)
    p.set_defaults(fn=cmd_demo)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SpecFileError as exc:
        _human(f"input error: {exc}")
        print(json.dumps({"error": "input", "detail": str(exc)}))
        return EXIT_INPUT
    except RankError as exc:
        _human(f"rank error: {exc}")
        print(json.dumps({"error": "rank", "detail": str(exc)}))
        return EXIT_MATH
    except (ValueError, OSError) as exc:
        _human(f"error: {exc}")
        print(json.dumps({"error": "input", "detail": str(exc)}))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
