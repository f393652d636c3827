"""starkernel: realize associative products as trace-formula star-products.

Given structure constants, the toolkit builds quantizer/dequantizer operator
families (regular representation plus a minimum-norm duality solve), recovers
the product kernel by the trace formula, and ships desk-scale checks of the
Weyl and symplectic-tomography schemes on a truncated oscillator space.
"""

from . import _threads  # noqa: F401  (must run before numpy binds BLAS)

from .algebra import (AssociativityReport, PAULI, StructureConstants,
                      check_associativity, exotic_product,
                      exotic_structure_constants, from_matrix_basis,
                      kappa_matrix, kappa_structure_constants)
from .catalog import (CatalogEntry, EXOTIC_DEQUANTIZERS, EXOTIC_QUANTIZERS,
                      PAULI_KERNEL_SLICES, exotic_scheme, kappa_scheme,
                      pauli_constants, pauli_scheme)
from .fock import FockSpace, PhasePoint, TruncationWarning, displacement, parity
from .linalg import (ContractError, InfeasibleConstraintsError, RankError,
                     ShapeError, expm_anti_hermitian, mat_adjoint, mat_mul,
                     mat_trace, min_norm_solve)
from .moyal import (groenewold_identity_residual, moyal_kernel_oracle,
                    moyal_kernel_trace, weyl_dequantizer, weyl_quantizer)
from .realization import (KernelTensor, Scheme, dual_symbol, duality_residual,
                          dualize, expectation_pairing, from_symbol,
                          kernel_from_scheme, realize_and_verify,
                          regular_representation, scheme_from_constants,
                          solve_dequantizers, star_product, to_symbol,
                          verify_quantizers)
from .specfile import VerificationReport, parse_spec, serialize_spec
from .tomography import (TomoPoint, TomogramSamples, homogeneity_residual,
                         homogeneous_pairing_residual,
                         kernel_identity_residual, tomogram,
                         tomographic_quantizer)

__version__ = "0.1.0"

__all__ = [
    "AssociativityReport", "CatalogEntry", "ContractError",
    "EXOTIC_DEQUANTIZERS", "EXOTIC_QUANTIZERS", "FockSpace",
    "InfeasibleConstraintsError", "KernelTensor", "PAULI",
    "PAULI_KERNEL_SLICES", "PhasePoint", "RankError", "Scheme", "ShapeError",
    "StructureConstants", "TomoPoint", "TomogramSamples",
    "TruncationWarning", "VerificationReport", "check_associativity",
    "displacement", "dual_symbol", "duality_residual", "dualize",
    "expectation_pairing", "expm_anti_hermitian", "exotic_product",
    "exotic_scheme", "exotic_structure_constants", "from_matrix_basis",
    "from_symbol", "groenewold_identity_residual",
    "homogeneity_residual", "homogeneous_pairing_residual", "kappa_matrix",
    "kappa_scheme", "kappa_structure_constants", "kernel_from_scheme",
    "kernel_identity_residual", "mat_adjoint", "mat_mul", "mat_trace",
    "min_norm_solve", "moyal_kernel_oracle", "moyal_kernel_trace", "parity",
    "parse_spec", "pauli_constants", "pauli_scheme", "realize_and_verify",
    "regular_representation", "scheme_from_constants", "serialize_spec",
    "solve_dequantizers", "star_product", "to_symbol", "tomogram",
    "tomographic_quantizer", "verify_quantizers", "weyl_dequantizer",
    "weyl_quantizer",
]
