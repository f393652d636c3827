"""Dense complex matrix kernels: products, traces, adjoints, a minimum-norm
trace-constrained solver, and the exponential of anti-Hermitian matrices.

Matrices are plain ``numpy.ndarray`` values with ``complex128`` entries,
row-major, 0-based.  All functions are pure; nothing here mutates its inputs.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg


class ShapeError(ValueError):
    """Operand shapes are incompatible with the requested operation."""


class RankError(ValueError):
    """A Gram matrix is rank-deficient where full rank is required."""

    def __init__(self, message, rank, needed):
        super().__init__(message)
        self.rank = rank
        self.needed = needed


class InfeasibleConstraintsError(RankError):
    """Trace constraints are mutually inconsistent (no feasible point)."""


class ContractError(ValueError):
    """An input violates a numerical precondition beyond tolerance."""


def as_cmatrix(a) -> np.ndarray:
    """Validate and convert ``a`` to a 2-d complex128 array.

    Raises ShapeError for non-2-d input and ContractError if any entry is
    non-finite.
    """
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ShapeError(f"expected a 2-d matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ContractError("matrix contains non-finite entries")
    return m


def mat_mul(a, b) -> np.ndarray:
    """Matrix product a @ b with an explicit shape check."""
    a = as_cmatrix(a)
    b = as_cmatrix(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def mat_trace(a) -> complex:
    """Trace of a square matrix."""
    a = as_cmatrix(a)
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"trace needs a square matrix, got {a.shape}")
    return complex(np.trace(a))


def mat_adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_cmatrix(a).conj().T.copy()


def frobenius(a) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(a))


def min_norm_solve(constraints, rhs, tol: float = 1e-10) -> np.ndarray:
    """Minimum-Frobenius-norm X with Tr[R_j X] = rhs_j for every constraint R_j.

    The solution is sought in the span of the adjoints R_j^+, which turns the
    problem into the Gram system G w = rhs with G_jk = Tr[R_j R_k^+] and
    X = sum_k w_k R_k^+.  The Gram system is solved in the least-squares
    sense, so consistent rank-deficient constraint sets are still handled;
    if any constraint residual exceeds ``tol`` the system is reported
    infeasible together with the Gram rank.
    """
    mats = [as_cmatrix(r) for r in constraints]
    if not mats:
        raise ShapeError("need at least one constraint matrix")
    shape = mats[0].shape
    for r in mats:
        if r.shape != shape:
            raise ShapeError(f"constraint shapes differ: {r.shape} vs {shape}")
    b = np.asarray(rhs, dtype=complex)
    if b.shape != (len(mats),):
        raise ShapeError(f"rhs length {b.shape} does not match {len(mats)} constraints")

    gram = np.array([[np.trace(rj @ rk.conj().T) for rk in mats] for rj in mats])
    w, *_ = np.linalg.lstsq(gram, b, rcond=None)
    x = np.zeros(shape, dtype=complex)
    for wk, rk in zip(w, mats):
        x += wk * rk.conj().T

    residual = max(abs(np.trace(rj @ x) - bj) for rj, bj in zip(mats, b))
    if residual > tol * max(1.0, float(np.abs(b).max())):
        rank = int(np.linalg.matrix_rank(gram))
        raise InfeasibleConstraintsError(
            f"trace constraints are inconsistent (worst residual {residual:.3e}, "
            f"Gram rank {rank} of {len(mats)})",
            rank=rank,
            needed=len(mats),
        )
    return x


def anti_hermitian_defect(h) -> float:
    """Largest entry of h^+ + h (zero for exactly anti-Hermitian h)."""
    h = as_cmatrix(h)
    return float(np.abs(h.conj().T + h).max())


def expm_anti_hermitian(h, tol: float = 1e-12) -> np.ndarray:
    """Unitary exponential of an anti-Hermitian matrix.

    Uses scaling-and-squaring with a Pade core (scipy.linalg.expm).  The
    input must satisfy h^+ = -h up to ``tol`` relative to its magnitude;
    anything worse raises ContractError.
    """
    h = as_cmatrix(h)
    if h.shape[0] != h.shape[1]:
        raise ShapeError(f"expm needs a square matrix, got {h.shape}")
    defect = anti_hermitian_defect(h)
    scale = max(1.0, float(np.abs(h).max()))
    if defect > tol * scale:
        raise ContractError(
            f"matrix is not anti-Hermitian: defect {defect:.3e} exceeds {tol:.1e}*{scale:.3g}"
        )
    return scipy.linalg.expm(h)


def unitarity_defect(u) -> float:
    """Frobenius norm of u^+ u - I."""
    u = as_cmatrix(u)
    return float(np.linalg.norm(u.conj().T @ u - np.eye(u.shape[0])))


# --- text dump format -------------------------------------------------------
#
# One matrix per block:
#     matrix <name> <rows> <cols>
#     re,im re,im ...        (one line per row, 17 significant digits)
# Blocks are separated by a blank line.


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def dump_matrices(entries) -> str:
    """Serialize ``entries`` (iterable of (name, matrix)) to dump-format text."""
    blocks = []
    for name, mat in entries:
        m = as_cmatrix(mat)
        rows, cols = m.shape
        lines = [f"matrix {name} {rows} {cols}"]
        for r in range(rows):
            lines.append(" ".join(f"{_fmt(v.real)},{_fmt(v.imag)}" for v in m[r]))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def load_matrices(text: str) -> list[tuple[str, np.ndarray]]:
    """Parse dump-format text back into a list of (name, matrix)."""
    out = []
    lines = iter(text.splitlines())
    for line in lines:
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4 or parts[0] != "matrix":
            raise ValueError(f"bad matrix header: {line!r}")
        name, rows, cols = parts[1], int(parts[2]), int(parts[3])
        m = np.zeros((rows, cols), dtype=complex)
        for r in range(rows):
            row = next(lines).split()
            if len(row) != cols:
                raise ValueError(f"matrix {name}: row {r} has {len(row)} entries, expected {cols}")
            for c, pair in enumerate(row):
                re_s, im_s = pair.split(",")
                m[r, c] = float(re_s) + 1j * float(im_s)
        out.append((name, m))
    return out
