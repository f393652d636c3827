"""Realizing an associative product by a quantizer/dequantizer pair.

Given structure constants c, the left-multiplication matrices
(D_g)[a, b] = c[g, b, a] always satisfy the closure equation
D_j D_k = sum_l c[j,k,l] D_l, so they serve as quantizers.  Dequantizers are
the minimum-Frobenius-norm solutions of the trace duality
Tr[U_j D_k] = delta_jk, and the product kernel is recovered by the trace
formula K[j,k,l] = Tr[D_j D_k U_l].

Conventions: a scheme stores dequantizers with any pairing weight already
absorbed, so plain-trace duality holds; symbols are f_j = Tr[U_j A] and
operators reconstruct as sum_j f_j D_j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import StructureConstants, check_associativity
from .linalg import RankError, ShapeError, as_cmatrix, min_norm_solve


@dataclass(frozen=True)
class Scheme:
    """A matched quantizer/dequantizer family over a discrete label set."""

    name: str
    quantizers: tuple
    dequantizers: tuple

    def __post_init__(self):
        qs = tuple(as_cmatrix(q) for q in self.quantizers)
        us = tuple(as_cmatrix(u) for u in self.dequantizers)
        if len(qs) == 0 or len(qs) != len(us):
            raise ShapeError("need equally many quantizers and dequantizers")
        shape = qs[0].shape
        if shape[0] != shape[1]:
            raise ShapeError("scheme operators must be square")
        if any(m.shape != shape for m in qs + us):
            raise ShapeError("all scheme operators must share one shape")
        object.__setattr__(self, "quantizers", qs)
        object.__setattr__(self, "dequantizers", us)

    @property
    def n(self) -> int:
        """Number of labels."""
        return len(self.quantizers)

    @property
    def hdim(self) -> int:
        """Operator size."""
        return self.quantizers[0].shape[0]


@dataclass(frozen=True)
class KernelTensor:
    """Star-product kernel K[j,k,l] on a discrete label set."""

    k: np.ndarray

    def __post_init__(self):
        k = np.asarray(self.k, dtype=complex)
        if k.ndim != 3 or len(set(k.shape)) != 1:
            raise ShapeError(f"kernel must be an n*n*n tensor, got {k.shape}")
        object.__setattr__(self, "k", k)

    @property
    def n(self) -> int:
        return self.k.shape[0]

    def as_structure_constants(self, name: str = "") -> StructureConstants:
        return StructureConstants(self.k.copy(), name=name)


def regular_representation(sc: StructureConstants) -> list[np.ndarray]:
    """Left-multiplication matrices (D_g)[a, b] = c[g, b, a].

    For associative constants these always close: D_j D_k = sum_l c[j,k,l] D_l.
    """
    return [sc.c[g].T.copy() for g in range(sc.dim)]


def verify_quantizers(sc: StructureConstants, ds) -> float:
    """max_{j,k} Frobenius norm of D_j D_k - sum_l c[j,k,l] D_l."""
    mats = [as_cmatrix(d) for d in ds]
    if len(mats) != sc.dim:
        raise ShapeError(f"expected {sc.dim} quantizers, got {len(mats)}")
    shape = mats[0].shape
    if shape[0] != shape[1] or any(m.shape != shape for m in mats):
        raise ShapeError("quantizers must be square and share one shape")
    stack = np.stack(mats)
    worst = 0.0
    for j in range(sc.dim):
        for k in range(sc.dim):
            lhs = mats[j] @ mats[k]
            rhs = np.tensordot(sc.c[j, k, :], stack, axes=(0, 0))
            worst = max(worst, float(np.linalg.norm(lhs - rhs)))
    return worst


def solve_dequantizers(ds, tol: float = 1e-10) -> list[np.ndarray]:
    """Minimum-norm dequantizers U_k with Tr[U_k D_j] = delta_kj.

    Raises RankError when the quantizers are linearly dependent (the duality
    system is then unsolvable and the Gram rank is reported).
    """
    mats = [as_cmatrix(d) for d in ds]
    n = len(mats)
    gram = np.array([[np.trace(dj @ dk.conj().T) for dk in mats] for dj in mats])
    rank = int(np.linalg.matrix_rank(gram))
    if rank < n:
        raise RankError(
            f"quantizers are linearly dependent: Gram rank {rank} of {n}; "
            "trace duality has no solution", rank=rank, needed=n)
    eye = np.eye(n)
    return [min_norm_solve(mats, eye[k], tol=tol) for k in range(n)]


def duality_residual(s: Scheme) -> float:
    """max_{j,k} |Tr[U_j D_k] - delta_jk|."""
    n = s.n
    pair = np.array([[np.trace(s.dequantizers[j] @ s.quantizers[k]) for k in range(n)]
                     for j in range(n)])
    return float(np.abs(pair - np.eye(n)).max())


def scheme_from_constants(sc: StructureConstants, name: str = "",
                          tol: float = 1e-10) -> Scheme:
    """Full pipeline: regular representation plus min-norm duality solve."""
    ds = regular_representation(sc)
    us = solve_dequantizers(ds, tol=tol)
    return Scheme(name or sc.name or "scheme", tuple(ds), tuple(us))


def kernel_from_scheme(s: Scheme) -> KernelTensor:
    """Trace-formula kernel K[j,k,l] = Tr[D_j D_k U_l]."""
    n = s.n
    k = np.zeros((n, n, n), dtype=complex)
    for j in range(n):
        for m in range(n):
            prod = s.quantizers[j] @ s.quantizers[m]
            for l in range(n):
                k[j, m, l] = np.trace(prod @ s.dequantizers[l])
    return KernelTensor(k)


def to_symbol(a, s: Scheme) -> np.ndarray:
    """Symbol f_j = Tr[U_j a]."""
    a = as_cmatrix(a)
    if a.shape != (s.hdim, s.hdim):
        raise ShapeError(f"operator shape {a.shape} does not match scheme size {s.hdim}")
    return np.array([np.trace(u @ a) for u in s.dequantizers])


def from_symbol(f, s: Scheme) -> np.ndarray:
    """Reconstruction sum_j f_j D_j."""
    f = np.asarray(f, dtype=complex)
    if f.shape != (s.n,):
        raise ShapeError(f"symbol length {f.shape} does not match {s.n} labels")
    return np.tensordot(f, np.stack(s.quantizers), axes=(0, 0))


def star_product(f, g, kernel) -> np.ndarray:
    """Symbol product (f * g)_l = sum_{j,k} f_j K[j,k,l] g_k."""
    k = kernel.k if isinstance(kernel, KernelTensor) else np.asarray(kernel, dtype=complex)
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    return np.einsum("j,jkl,k->l", f, k, g)


def dual_symbol(a, s: Scheme) -> np.ndarray:
    """Dual symbol g_j = Tr[D_j a] (quantizer in the role of dequantizer)."""
    a = as_cmatrix(a)
    if a.shape != (s.hdim, s.hdim):
        raise ShapeError(f"operator shape {a.shape} does not match scheme size {s.hdim}")
    return np.array([np.trace(d @ a) for d in s.quantizers])


def dualize(s: Scheme) -> Scheme:
    """Swap quantizer and dequantizer roles; trace duality survives by
    cyclicity, and the dual kernel is Tr[U_j U_k D_l]."""
    return Scheme(f"{s.name}-dual", s.dequantizers, s.quantizers)


def expectation_pairing(rho, a, s: Scheme) -> complex:
    """Probability-style pairing sum_j Tr[U_j rho] Tr[D_j a].

    Equals Tr[rho a] whenever rho lies in the quantizer span (always, when
    the quantizers span the full operator space).
    """
    w = to_symbol(rho, s)
    wd = dual_symbol(a, s)
    return complex(np.dot(w, wd))


def dequantizer_closure_residual(s: Scheme) -> float:
    """How far the dequantizer family is from closing under the matrix
    product within its own span (informational; zero means U_j U_k always
    expands over the U_l)."""
    us = s.dequantizers
    n = s.n
    flat = np.stack([u.ravel() for u in us]).T  # (hdim^2, n)
    worst = 0.0
    for j in range(n):
        for k in range(n):
            prod = (us[j] @ us[k]).ravel()
            coef, *_ = np.linalg.lstsq(flat, prod, rcond=None)
            worst = max(worst, float(np.linalg.norm(flat @ coef - prod)))
    return worst


def realize_and_verify(sc: StructureConstants, name: str = "",
                       tol: float = 1e-10) -> dict:
    """Run the whole inverse-problem pipeline and collect residuals.

    Returns a dict with the scheme plus associativity, closure, duality,
    kernel-recovery residuals and the dual-scheme constants.
    """
    assoc = check_associativity(sc, tol=tol)
    ds = regular_representation(sc)
    closure = verify_quantizers(sc, ds)
    us = solve_dequantizers(ds, tol=tol)
    scheme = Scheme(name or sc.name or "scheme", tuple(ds), tuple(us))
    duality = duality_residual(scheme)
    kernel = kernel_from_scheme(scheme)
    recovery = float(np.abs(kernel.k - sc.c).max())
    dual = kernel_from_scheme(dualize(scheme))
    return {
        "scheme": scheme,
        "associativity": assoc,
        "closure_residual": closure,
        "duality_residual": duality,
        "kernel_recovery_residual": recovery,
        "dual_constants": dual.as_structure_constants(f"{scheme.name}-dual"),
    }
