import numpy as np
import pytest

from starkernel import (FockSpace, PhasePoint, TruncationWarning,
                        displacement, groenewold_identity_residual,
                        moyal_kernel_oracle, moyal_kernel_trace, parity,
                        weyl_dequantizer, weyl_quantizer)
from starkernel.fock import trusted_dim
from starkernel.moyal import displaced_parity_half_trace, smeared_duality_error

# the sweeps intentionally push displacements past the trust radius; the
# resulting warnings are expected there (the warning path itself is covered
# by dedicated tests below)
pytestmark = pytest.mark.filterwarnings("ignore::starkernel.TruncationWarning")

# probe grid with |z| <= 1 used by the identity sweeps
ZGRID = [0.0, 0.5, 0.5j, -0.7 + 0.3j, 0.6 - 0.8j]

# machine-noise floor for monotonicity comparisons: once a residual sits at
# rounding level, N-to-N fluctuations are not a convergence signal
FLOOR = 1e-12


def _improving(seq, factor=1.1, floor=FLOOR):
    return all(b <= factor * a + floor for a, b in zip(seq, seq[1:]))


class TestWeylPair:
    def test_undisplaced_is_twice_parity(self, fock60):
        u = weyl_dequantizer(fock60, PhasePoint(0.0, 0.0))
        assert np.abs(u - 2 * parity(fock60)).max() <= 1e-15

    def test_hermitian(self, fock60):
        for z in (0.4, 0.3 - 0.6j):
            u = weyl_dequantizer(fock60, PhasePoint.from_z(z))
            assert np.abs(u - u.conj().T).max() <= 1e-8

    def test_squares_to_four_on_trusted_block(self, fock60):
        m = trusted_dim(fock60.trunc)
        for z in (1.0, 0.5 + 0.5j, -0.9j):
            u = weyl_dequantizer(fock60, PhasePoint.from_z(z))
            diff = (u @ u - 4 * np.eye(fock60.trunc))[:m, :m]
            assert np.linalg.norm(diff) <= 1e-6

    def test_quantizer_proportionality(self, fock60):
        x = PhasePoint(0.3, 0.1)
        assert np.abs(weyl_quantizer(fock60, x) * 2 * np.pi
                      - weyl_dequantizer(fock60, x)).max() <= 1e-14

    def test_warning_propagates(self):
        fs = FockSpace(30)
        with pytest.warns(TruncationWarning):
            weyl_dequantizer(fs, PhasePoint.from_z(1.5))  # |2z| = 3 > sqrt(30)/4


class TestGroenewoldIdentity:
    def test_origin_exact(self, fock60):
        assert groenewold_identity_residual(fock60, 0.0, 0.0) <= 1e-13

    def test_reference_points(self, fock60):
        assert groenewold_identity_residual(fock60, 0.3, 0.2j) <= 1e-6

    def test_coarser_truncation_is_worse_near_unit_radius(self):
        z1, z2 = 0.6 - 0.8j, -0.7 + 0.3j
        r30 = groenewold_identity_residual(FockSpace(30), z1, z2)
        r60 = groenewold_identity_residual(FockSpace(60), z1, z2)
        assert r30 > r60

    def test_grid_monotone_in_truncation(self):
        residuals = []
        for n in (30, 40, 60, 80):
            fs = FockSpace(n)
            residuals.append(max(groenewold_identity_residual(fs, z1, z2)
                                 for z1 in ZGRID for z2 in ZGRID))
        assert _improving(residuals)

    def test_unitarity_of_displacement_on_trusted_block(self, fock60):
        m = trusted_dim(fock60.trunc)
        for z in ZGRID:
            u = displacement(fock60, 2 * z)
            assert np.linalg.norm((u.conj().T @ u - np.eye(fock60.trunc))[:m, :m]) <= 1e-8


class TestHalfTrace:
    def test_value_half_at_large_truncation(self):
        fs = FockSpace(120)
        for gamma in (0.5, 1.0, 2.0, 1.2 - 0.9j):
            assert abs(displaced_parity_half_trace(fs, gamma) - 0.5) <= 1e-6

    def test_truncation_extrapolation(self):
        # window-regularized values approach 1/2 as the truncation grows
        gamma = 1.5
        errs = [abs(displaced_parity_half_trace(FockSpace(n), gamma) - 0.5)
                for n in (40, 80, 120)]
        assert _improving(errs)
        assert errs[-1] <= 1e-6

    def test_sharp_cutoff_trace_vanishes(self):
        # the contrast that forces the regularization: an even truncation
        # pairs the generator spectrum across parity, so the raw trace of
        # displaced parity is identically zero and never approaches 1/2
        fs = FockSpace(60)
        raw = np.trace(displacement(fs, 1.0) @ parity(fs))
        assert abs(raw) <= 1e-10


class TestKernelTrace:
    def test_origin_value(self, fock80):
        got = moyal_kernel_trace(fock80, 0.0, 0.0, 0.0)
        assert abs(got - 1 / np.pi ** 2) <= 1e-10

    def test_matches_oracle_on_random_triples(self, fock80, rng):
        worst = 0.0
        for _ in range(20):
            zs = [rng.uniform(0, 0.8) * np.exp(1j * rng.uniform(0, 2 * np.pi))
                  for _ in range(3)]
            err = abs(moyal_kernel_trace(fock80, *zs) - moyal_kernel_oracle(*zs))
            worst = max(worst, err)
        assert worst <= 1e-4

    def test_error_improves_with_truncation(self, rng):
        zs = [0.5, -0.3 + 0.4j, 0.2j]
        errs = []
        for n in (30, 40, 60, 80):
            fs = FockSpace(n)
            errs.append(abs(moyal_kernel_trace(fs, *zs) - moyal_kernel_oracle(*zs)))
        assert _improving(errs)

    def test_swapped_roles_rescale_by_two_pi(self, fock80):
        # U = 2 pi D, so exchanging quantizer and dequantizer roles in the
        # trace formula multiplies the kernel by 2 pi (direct evaluation of
        # both orderings; lambda-proportional schemes rescale by lambda)
        zs = (0.4, 0.3j, -0.2 + 0.1j)
        base = moyal_kernel_trace(fock80, *zs)

        def swapped_trace():
            from starkernel.moyal import _regularized_window
            from starkernel.fock import smooth_window
            u = [weyl_dequantizer(fock80, PhasePoint.from_z(z)) for z in zs]
            d3 = weyl_quantizer(fock80, PhasePoint.from_z(zs[2]))
            prod = u[0] @ u[1] @ d3
            gamma = 2 * (zs[0] - zs[1] + zs[2])
            amax = max(*(2 * abs(z) for z in zs), 2 * abs(zs[0] - zs[1]), abs(gamma))
            n1, n2 = _regularized_window(fock80, amax)
            w = smooth_window(fock80.trunc, n1, n2)
            return complex(np.sum(w * np.diag(prod)))

        assert abs(swapped_trace() - 2 * np.pi * base) <= 1e-4

    def test_phase_point_arguments(self, fock80):
        a = moyal_kernel_trace(fock80, PhasePoint(0.3, 0.0), PhasePoint(0.0, 0.4),
                               PhasePoint(0.1, -0.2))
        b = moyal_kernel_trace(fock80, PhasePoint(0.3, 0.0).z, PhasePoint(0.0, 0.4).z,
                               PhasePoint(0.1, -0.2).z)
        assert a == b


class TestSmearedDuality:
    def test_weak_delta_normalization(self, fock80):
        err = smeared_duality_error(fock80, PhasePoint(0.3, -0.2), width=0.2)
        assert err <= 5e-2

    def test_improves_with_truncation(self):
        errs = [smeared_duality_error(FockSpace(n), PhasePoint(0.2, 0.1),
                                      width=0.2, grid=13)
                for n in (40, 80)]
        assert errs[1] <= errs[0] * 1.1 + FLOOR
