"""Structure constants of associative products.

A product on an n-dimensional space with basis e_0..e_{n-1} is stored as the
dense rank-3 tensor c with e_j e_k = sum_l c[j,k,l] e_l.  This module checks
associativity, extracts structure constants from matrix bases, and builds the
two closed-form four-dimensional families used throughout the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import RankError, ShapeError, as_cmatrix

SIGMA_0 = np.eye(2, dtype=complex)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)

#: Identity plus the three Pauli matrices, indexed 0..3.
PAULI = (SIGMA_0, SIGMA_1, SIGMA_2, SIGMA_3)

#: Levi-Civita symbol on indices 1..3 (stored 3x3x3 on 0-based offsets),
#: oriented so that eps[0,1,2] = +1, i.e. sigma_1 sigma_2 = i sigma_3.
LEVI_CIVITA = np.zeros((3, 3, 3))
for _i, _j, _k, _s in [(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1),
                       (2, 1, 0, -1), (0, 2, 1, -1), (1, 0, 2, -1)]:
    LEVI_CIVITA[_i, _j, _k] = _s


@dataclass(frozen=True)
class StructureConstants:
    """Dense structure-constant tensor c[j,k,l] with e_j e_k = sum_l c[j,k,l] e_l."""

    c: np.ndarray
    name: str = ""

    def __post_init__(self):
        c = np.asarray(self.c, dtype=complex)
        if c.ndim != 3 or len(set(c.shape)) != 1:
            raise ShapeError(f"structure constants must be an n*n*n tensor, got {c.shape}")
        if not np.all(np.isfinite(c.view(float))):
            raise ValueError("structure constants contain non-finite entries")
        object.__setattr__(self, "c", c)

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    def transposed(self) -> "StructureConstants":
        """Constants of the opposite product, c[k,j,l]."""
        return StructureConstants(self.c.transpose(1, 0, 2).copy(), name=f"{self.name}-opposite")


@dataclass(frozen=True)
class AssociativityReport:
    """Worst-case defect of the quadratic associativity identity."""

    max_residual: float
    worst_indices: tuple[int, int, int, int]
    tol: float
    passed: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "passed", self.max_residual <= self.tol)


def check_associativity(sc: StructureConstants, tol: float = 1e-12) -> AssociativityReport:
    """Evaluate max |sum_t c[j,k,t] c[t,m,s] - sum_t c[j,t,s] c[k,m,t]|.

    The two contractions are the coordinates of (e_j e_k) e_m and
    e_j (e_k e_m); the report never raises.
    """
    c = sc.c
    lhs = np.einsum("jkt,tms->jkms", c, c)
    rhs = np.einsum("jts,kmt->jkms", c, c)
    diff = np.abs(lhs - rhs)
    worst = np.unravel_index(int(diff.argmax()), diff.shape)
    # report order (j, k, m, s)
    return AssociativityReport(float(diff.max()), tuple(int(i) for i in worst), tol)


def from_matrix_basis(basis, weight: float = 1.0, product=None,
                      tol: float = 1e-12) -> StructureConstants:
    """Structure constants of ``product`` (matrix product by default) on ``basis``.

    Each product basis_j . basis_k is expanded over the basis by solving the
    Gram system of the weighted pairing weight*Tr[b_j^+ b_k].  The basis must
    be linearly independent (RankError otherwise) and multiplicatively closed
    to ``tol`` (ValueError naming the worst pair otherwise).
    """
    mats = [as_cmatrix(b) for b in basis]
    n = len(mats)
    if n == 0:
        raise ShapeError("empty basis")
    shape = mats[0].shape
    if shape[0] != shape[1] or any(m.shape != shape for m in mats):
        raise ShapeError("basis matrices must be square and share one shape")
    if product is None:
        product = lambda a, b: a @ b

    gram = weight * np.array([[np.trace(bj.conj().T @ bk) for bk in mats] for bj in mats])
    rank = int(np.linalg.matrix_rank(gram))
    if rank < n:
        raise RankError(f"basis is linearly dependent: Gram rank {rank} of {n}",
                        rank=rank, needed=n)

    c = np.zeros((n, n, n), dtype=complex)
    worst = (0.0, 0, 0)
    for j in range(n):
        for k in range(n):
            p = product(mats[j], mats[k])
            rhs = weight * np.array([np.trace(bm.conj().T @ p) for bm in mats])
            coeff = np.linalg.solve(gram, rhs)
            c[j, k, :] = coeff
            recon = sum(coeff[l] * mats[l] for l in range(n))
            resid = float(np.abs(recon - p).max())
            if resid > worst[0]:
                worst = (resid, j, k)
    if worst[0] > tol:
        raise ValueError(
            f"basis is not multiplicatively closed: product of elements "
            f"{worst[1]},{worst[2]} leaves the span by {worst[0]:.3e}"
        )
    return StructureConstants(c)


def exotic_structure_constants() -> StructureConstants:
    """Constants of the diagonal-preserving deformed product on 2x2 matrices.

    In the elementary-matrix basis (e_0=E11, e_1=E12, e_2=E21, e_3=E22) the
    product multiplies diagonals entry-wise and couples each off-diagonal
    slot to its adjacent diagonal; exactly six components are nonzero.
    """
    c = np.zeros((4, 4, 4), dtype=complex)
    for j, k, l in [(0, 0, 0), (0, 1, 1), (1, 3, 1), (2, 0, 2), (3, 2, 2), (3, 3, 3)]:
        c[j, k, l] = 1.0
    return StructureConstants(c, name="exotic")


def exotic_product(a, b) -> np.ndarray:
    """The deformed 2x2 product itself: diagonal entries multiply pointwise,
    off-diagonals couple as a*b' + b*d' and c*a' + d*c'."""
    a = as_cmatrix(a)
    b = as_cmatrix(b)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ShapeError("exotic product is defined on 2x2 matrices")
    return np.array([
        [a[0, 0] * b[0, 0], a[0, 0] * b[0, 1] + a[0, 1] * b[1, 1]],
        [a[1, 0] * b[0, 0] + a[1, 1] * b[1, 0], a[1, 1] * b[1, 1]],
    ])


def kappa_structure_constants(s) -> StructureConstants:
    """Constants of the deformed product a o b = a k b on 2x2 matrices,
    where k = sum_alpha s[alpha] sigma_alpha with real s.

    Closed form in the Pauli basis (spatial indices j, m, n run 1..3):

        c[0,0,a] = s_a
        c[0,j,0] = c[j,0,0] = s_j
        c[0,j,m] = s_0 d_jm + i sum_n s_n eps_njm      (c[j,0,m] = conjugate)
        c[j,m,0] = s_0 d_jm + i sum_n s_n eps_jnm
        c[j,m,n] = d_jn s_m + d_mn s_j + i s_0 eps_jmn - d_jm s_n

    This matches the brute-force expansion of sigma_j k sigma_m over the
    Pauli basis entry for entry; the test suite keeps the brute-force oracle.
    """
    s = np.asarray(s, dtype=float)
    if s.shape != (4,):
        raise ShapeError(f"kappa parameter must be 4 reals, got shape {s.shape}")
    c = np.zeros((4, 4, 4), dtype=complex)
    eps = LEVI_CIVITA
    c[0, 0, :] = s
    for j in range(1, 4):
        c[0, j, 0] = s[j]
        c[j, 0, 0] = s[j]
        for m in range(1, 4):
            cross = 1j * sum(s[n] * eps[n - 1, j - 1, m - 1] for n in range(1, 4))
            c[0, j, m] = s[0] * (j == m) + cross
            c[j, 0, m] = s[0] * (j == m) - cross
    for j in range(1, 4):
        for m in range(1, 4):
            c[j, m, 0] = s[0] * (j == m) + 1j * sum(
                s[n] * eps[j - 1, n - 1, m - 1] for n in range(1, 4))
            for n in range(1, 4):
                c[j, m, n] = ((j == n) * s[m] + (m == n) * s[j]
                              + 1j * s[0] * eps[j - 1, m - 1, n - 1]
                              - (j == m) * s[n])
    return StructureConstants(c, name="kappa")


def kappa_matrix(s) -> np.ndarray:
    """The deformation matrix k = sum_alpha s[alpha] sigma_alpha."""
    s = np.asarray(s, dtype=float)
    return sum(s[a] * PAULI[a] for a in range(4))
