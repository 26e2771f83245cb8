import math

import numpy as np
import pytest
from hypothesis import given, settings

from boscap.exceptions import DomainError, UnphysicalStateError
from boscap.gaussian_core import (
    MultimodeCorrelation,
    OneModeGaussianState,
    PhysicalConstants,
    coherent_state,
    entropy_multimode,
    entropy_one_mode,
    g_function,
    mean_photon_number,
    multimode_from_modes,
    squeezed_state,
    thermal_state,
    vacuum_state,
)

from conftest import gaussian_states, state_from_invariant


class TestGFunction:
    def test_pure_boundary_is_zero(self):
        assert g_function(0.25) == 0.0

    def test_thermal_one_photon(self):
        # d = 3/2 gives (N+1)ln(N+1) - N ln N at N = 1
        assert g_function(2.25) == pytest.approx(2.0 * math.log(2.0), rel=1e-12)

    def test_half_photon_level(self):
        expected = 1.5 * math.log(1.5) - 0.5 * math.log(0.5)
        assert g_function(1.0) == pytest.approx(expected, rel=1e-12)

    def test_strictly_increasing(self):
        grid = 0.25 * np.geomspace(1.0, 400.0, 500)
        values = g_function(grid)
        assert np.all(np.diff(values) > 0.0)
        assert values[0] == 0.0

    def test_domain_error_below_quarter(self):
        with pytest.raises(DomainError):
            g_function(0.2499)

    def test_accepts_rounding_slack(self):
        assert g_function(0.25 * (1.0 - 1e-10)) == 0.0


class TestEntropyOneMode:
    def test_pure_squeezed_states_have_zero_entropy(self):
        for gamma in np.linspace(0.0, 2.0, 11):
            for theta in np.linspace(0.0, 2.0 * np.pi, 7):
                assert entropy_one_mode(squeezed_state(gamma, theta)) <= 1e-9

    def test_thermal_value(self):
        assert entropy_one_mode(thermal_state(1.0)) == pytest.approx(
            2.0 * math.log(2.0), rel=1e-12
        )

    def test_displacement_invariance(self):
        base = thermal_state(1.0)
        displaced = OneModeGaussianState(
            mean=(3.7, -1.2),
            alpha_qq=base.alpha_qq,
            alpha_pp=base.alpha_pp,
            alpha_qp=base.alpha_qp,
        )
        assert entropy_one_mode(displaced) == entropy_one_mode(base)

    def test_unphysical_state_rejected(self):
        bad = OneModeGaussianState(mean=(0.0, 0.0), alpha_qq=0.3, alpha_pp=0.3)
        with pytest.raises(UnphysicalStateError):
            entropy_one_mode(bad)

    @settings(max_examples=500, deadline=None)
    @given(gaussian_states())
    def test_nonnegative_and_zero_only_for_pure(self, state):
        h = entropy_one_mode(state)
        assert h >= 0.0
        if state.det_alpha > 0.25 * (1.0 + 1e-6):
            assert h > 0.0

    @settings(max_examples=500, deadline=None)
    @given(gaussian_states())
    def test_rotation_invariance(self, state):
        phi = 1.234
        c, s = np.cos(phi), np.sin(phi)
        rot = np.array([[c, s], [-s, c]])
        a = rot @ state.alpha_matrix() @ rot.T
        rotated = OneModeGaussianState(
            mean=state.mean, alpha_qq=a[0, 0], alpha_pp=a[1, 1], alpha_qp=a[0, 1]
        )
        assert entropy_one_mode(rotated) == pytest.approx(
            entropy_one_mode(state), abs=1e-9
        )


class TestEntropyMultimode:
    def test_two_pure_modes(self):
        corr = multimode_from_modes([squeezed_state(0.7, 0.3), squeezed_state(1.1, 2.0)])
        assert entropy_multimode(corr) == pytest.approx(0.0, abs=1e-9)

    def test_two_thermal_modes_additive(self):
        corr = multimode_from_modes([thermal_state(1.0), thermal_state(1.0)])
        assert entropy_multimode(corr) == pytest.approx(4.0 * math.log(2.0), abs=1e-9)

    def test_additivity_matches_one_mode_sum(self, rng):
        for _ in range(50):
            modes = [
                state_from_invariant(
                    rng.uniform(0.5, 4.0), rng.uniform(0.3, 3.0), rng.uniform(0, 6.28)
                )
                for _ in range(3)
            ]
            total = entropy_multimode(multimode_from_modes(modes))
            parts = sum(entropy_one_mode(m) for m in modes)
            assert total == pytest.approx(parts, abs=1e-9)

    def test_single_mode_vacuum(self):
        corr = MultimodeCorrelation(alpha=0.5 * np.eye(2), s=1)
        assert entropy_multimode(corr) == pytest.approx(0.0, abs=1e-12)

    def test_single_mode_matches_one_mode(self, rng):
        for _ in range(50):
            st = state_from_invariant(
                rng.uniform(0.5, 4.0), rng.uniform(0.3, 3.0), rng.uniform(0, 6.28)
            )
            corr = MultimodeCorrelation(alpha=st.alpha_matrix(), s=1)
            assert entropy_multimode(corr) == pytest.approx(
                entropy_one_mode(st), rel=1e-10, abs=1e-12
            )

    def test_unphysical_spectrum_rejected(self):
        with pytest.raises(UnphysicalStateError):
            entropy_multimode(MultimodeCorrelation(alpha=0.3 * np.eye(2), s=1))

    def test_asymmetric_matrix_rejected(self):
        alpha = np.array([[1.0, 0.2], [0.1, 1.0]])
        with pytest.raises(ValueError):
            MultimodeCorrelation(alpha=alpha, s=1)


class TestMeanPhotonNumber:
    def test_vacuum_is_zero(self):
        assert mean_photon_number(vacuum_state()) == pytest.approx(0.0, abs=1e-15)

    def test_thermal_two(self):
        assert mean_photon_number(thermal_state(2.0)) == pytest.approx(2.0, rel=1e-12)

    def test_squeezed_sinh_identity(self):
        for gamma in np.linspace(0.0, 2.0, 9):
            for theta in np.linspace(0.0, 2.0 * np.pi, 8, endpoint=False):
                n = mean_photon_number(squeezed_state(gamma, theta))
                assert n == pytest.approx(math.sinh(gamma) ** 2, abs=1e-9)

    def test_units_threaded(self):
        consts = PhysicalConstants(hbar=2.0, omega=3.0)
        assert mean_photon_number(vacuum_state(consts), consts) == pytest.approx(
            0.0, abs=1e-15
        )
        assert mean_photon_number(thermal_state(1.5, consts), consts) == pytest.approx(
            1.5, rel=1e-12
        )


class TestSqueezedState:
    def test_gamma_zero_is_vacuum(self):
        st = squeezed_state(0.0, 1.3)
        vac = vacuum_state()
        assert st.alpha_qq == pytest.approx(vac.alpha_qq)
        assert st.alpha_pp == pytest.approx(vac.alpha_pp)
        assert st.alpha_qp == pytest.approx(0.0, abs=1e-18)

    def test_purity_identity(self):
        consts = PhysicalConstants(hbar=1.7, omega=0.4)
        for gamma in np.linspace(-2.0, 2.0, 17):
            for theta in np.linspace(0.0, 2.0 * np.pi, 9):
                st = squeezed_state(gamma, theta, consts)
                assert st.det_alpha == pytest.approx(consts.hbar**2 / 4.0, rel=1e-12)

    def test_known_entries(self):
        st = squeezed_state(1.0, 0.0)
        assert st.alpha_qq == pytest.approx(math.exp(-2.0) / 2.0, rel=1e-12)
        assert st.alpha_pp == pytest.approx(math.exp(2.0) / 2.0, rel=1e-12)
        assert st.alpha_qp == 0.0

    def test_coherent_state_mean(self):
        st = coherent_state((2.0, -1.0))
        assert st.mean == (2.0, -1.0)
        assert st.det_alpha == pytest.approx(0.25, rel=1e-12)
