"""Named constructors for the worked discrete schemes.

Each entry packages structure constants together with a verified scheme.
The matrices below are source-level ground truth for the test suite; entries
are always constructed, never loaded from files.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (PAULI, StructureConstants, exotic_structure_constants,
                      kappa_structure_constants)
from .linalg import RankError
from .realization import Scheme, regular_representation, solve_dequantizers

#: Kernel slices K_s of the Pauli scheme, (K_s)[j,k] = Tr[(sigma_j/2)(sigma_k/2) sigma_s].
#: These equal the structure constants of the half-Pauli basis, c[j,k,s] = (K_s)[j,k].
PAULI_KERNEL_SLICES = (
    0.5 * np.eye(4, dtype=complex),
    0.5 * np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1j], [0, 0, -1j, 0]]),
    0.5 * np.array([[0, 0, 1, 0], [0, 0, 0, -1j], [1, 0, 0, 0], [0, 1j, 0, 0]]),
    0.5 * np.array([[0, 0, 0, 1], [0, 0, 1j, 0], [0, -1j, 0, 0], [1, 0, 0, 0]]),
)


def _e(r, c):
    m = np.zeros((4, 4), dtype=complex)
    m[r, c] = 1.0
    return m


#: Left-multiplication quantizers of the exotic product (0-based labels).
EXOTIC_QUANTIZERS = (
    _e(0, 0) + _e(1, 1),
    _e(1, 3),
    _e(2, 0),
    _e(2, 2) + _e(3, 3),
)

#: Their minimum-norm trace duals: halved transposes on the two diagonal
#: labels, plain transposes on the two off-diagonal labels.
EXOTIC_DEQUANTIZERS = (
    0.5 * EXOTIC_QUANTIZERS[0].T,
    EXOTIC_QUANTIZERS[1].T.copy(),
    EXOTIC_QUANTIZERS[2].T.copy(),
    0.5 * EXOTIC_QUANTIZERS[3].T,
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    constants: StructureConstants
    scheme: Scheme
    notes: str = ""


def pauli_constants() -> StructureConstants:
    """Structure constants of the half-Pauli basis {sigma_a/2}."""
    c = np.zeros((4, 4, 4), dtype=complex)
    for s in range(4):
        c[:, :, s] = PAULI_KERNEL_SLICES[s]
    return StructureConstants(c, name="pauli")


def pauli_scheme() -> CatalogEntry:
    """Spin scheme: quantizers sigma_j/2, dequantizers sigma_j.

    The original pairing carries weight 2; that weight is absorbed into the
    dequantizers so plain-trace duality Tr[U_j D_k] = delta_jk holds, and the
    trace-formula kernel comes out as PAULI_KERNEL_SLICES.
    """
    ds = tuple(0.5 * p for p in PAULI)
    us = tuple(p.copy() for p in PAULI)
    scheme = Scheme("pauli", ds, us)
    return CatalogEntry(
        name="pauli",
        constants=pauli_constants(),
        scheme=scheme,
        notes="self-dual up to the absorbed pairing weight 2",
    )


def exotic_scheme() -> CatalogEntry:
    """The deformed 2x2 product realized on its 4-dim coordinate space."""
    scheme = Scheme("exotic", EXOTIC_QUANTIZERS, EXOTIC_DEQUANTIZERS)
    return CatalogEntry(
        name="exotic",
        constants=exotic_structure_constants(),
        scheme=scheme,
        notes="dequantizers close on the opposite algebra with halved constants",
    )


def kappa_scheme(s) -> CatalogEntry:
    """Family of schemes for the deformed product a o b = a k b.

    Quantizers are the regular representation of the closed-form constants;
    dequantizers are solved numerically by the min-norm duality solver (there
    is no closed-form choice to pin them down).  At s = (1,0,0,0) the
    quantizers equal twice the regular representation of the half-Pauli
    constants, because the deformed construction runs over the unhalved
    Pauli basis.
    """
    constants = kappa_structure_constants(s)
    ds = regular_representation(constants)
    try:
        us = solve_dequantizers(ds)
    except RankError as exc:
        raise RankError(
            f"kappa quantizers are linearly dependent at s={tuple(np.asarray(s, float))}: {exc}",
            rank=exc.rank, needed=exc.needed) from exc
    s_label = ",".join(f"{v:g}" for v in np.asarray(s, dtype=float))
    return CatalogEntry(
        name=f"kappa[{s_label}]",
        constants=constants,
        scheme=Scheme(f"kappa[{s_label}]", tuple(ds), tuple(us)),
        notes="dequantizers are canonical-by-convention (min-norm)",
    )


CATALOG = {
    "pauli": pauli_scheme,
    "exotic": exotic_scheme,
}
