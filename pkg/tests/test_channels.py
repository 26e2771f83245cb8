import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boscap.channels import (
    AttenuationChannel,
    PhotonChannel,
    apply_attenuation,
    binomial_transition,
    lambda_noise,
)
from boscap.exceptions import DomainError
from boscap.gaussian_core import coherent_state, vacuum_state
from boscap.number_channel import bose_einstein

from conftest import gaussian_states


class TestLambdaNoise:
    def test_identity_channel(self):
        assert lambda_noise(AttenuationChannel(k=1.0, n_c=0.0)) == 0.0

    def test_strong_attenuation_limit(self):
        assert lambda_noise(AttenuationChannel(k=1e-12, n_c=0.3)) == pytest.approx(
            0.8, rel=1e-9
        )

    def test_arithmetic(self):
        assert lambda_noise(AttenuationChannel(k=0.9, n_c=0.1)) == pytest.approx(
            0.195, rel=1e-12
        )

    def test_invalid_parameters(self):
        with pytest.raises(DomainError):
            AttenuationChannel(k=1.2, n_c=0.0)
        with pytest.raises(DomainError):
            AttenuationChannel(k=0.5, n_c=-0.1)


class TestApplyAttenuation:
    def test_identity_channel_fixes_state(self):
        st0 = coherent_state((1.0, 2.0))
        out = apply_attenuation(st0, AttenuationChannel(k=1.0, n_c=0.0))
        assert out == st0

    def test_vacuum_fixed_point(self):
        for k in (0.2, 0.5, 0.9, 1.0):
            out = apply_attenuation(vacuum_state(), AttenuationChannel(k=k, n_c=0.0))
            assert out.alpha_qq == pytest.approx(0.5, rel=1e-12)
            assert out.alpha_pp == pytest.approx(0.5, rel=1e-12)
            assert out.alpha_qp == 0.0

    def test_coherent_mean_scales(self):
        out = apply_attenuation(
            coherent_state((2.0, 0.0)), AttenuationChannel(k=0.5, n_c=0.0)
        )
        assert out.mean == (1.0, 0.0)
        assert out.alpha_qq == pytest.approx(0.5, rel=1e-12)
        assert out.alpha_pp == pytest.approx(0.5, rel=1e-12)

    @settings(max_examples=500, deadline=None)
    @given(
        gaussian_states(),
        st.floats(min_value=0.05, max_value=1.0),
        st.floats(min_value=0.05, max_value=1.0),
    )
    def test_composition_of_noiseless_channels(self, state, k1, k2):
        one_then_two = apply_attenuation(
            apply_attenuation(state, AttenuationChannel(k=k1)),
            AttenuationChannel(k=k2),
        )
        combined = apply_attenuation(state, AttenuationChannel(k=k1 * k2))
        assert one_then_two.alpha_qq == pytest.approx(combined.alpha_qq, abs=1e-12)
        assert one_then_two.alpha_pp == pytest.approx(combined.alpha_pp, abs=1e-12)
        assert one_then_two.alpha_qp == pytest.approx(combined.alpha_qp, abs=1e-12)

    @settings(max_examples=500, deadline=None)
    @given(
        gaussian_states(),
        st.floats(min_value=0.05, max_value=1.0),
        st.floats(min_value=0.0, max_value=2.0),
    )
    def test_uncertainty_preserved(self, state, k, n_c):
        out = apply_attenuation(state, AttenuationChannel(k=k, n_c=n_c))
        assert out.det_alpha >= 0.25 * (1.0 - 1e-9)


class TestBinomialTransition:
    def test_eta_one_is_identity(self):
        t = binomial_transition(PhotonChannel(eta=1.0, n_max=40))
        assert np.array_equal(t, np.eye(41))

    def test_half_eta_row_two(self):
        t = binomial_transition(PhotonChannel(eta=0.5, n_max=4))
        assert t[2, :3] == pytest.approx([0.25, 0.5, 0.25], rel=1e-12)
        assert t[2, 3:] == pytest.approx([0.0, 0.0], abs=0.0)

    def test_row_zero_is_point_mass(self):
        t = binomial_transition(PhotonChannel(eta=0.3, n_max=5))
        assert t[0, 0] == 1.0
        assert np.all(t[0, 1:] == 0.0)

    def test_upper_triangle_vanishes(self):
        t = binomial_transition(PhotonChannel(eta=0.7, n_max=30))
        assert np.all(t[np.triu_indices(31, k=1)] == 0.0)

    @pytest.mark.parametrize("eta", [0.1, 0.37, 0.5, 0.93])
    def test_rows_stochastic_at_large_cutoff(self, eta):
        t = binomial_transition(PhotonChannel(eta=eta, n_max=2000))
        assert np.abs(t.sum(axis=1) - 1.0).max() < 1e-12

    def test_thinning_semigroup(self):
        n_max = 100
        t1 = binomial_transition(PhotonChannel(eta=0.8, n_max=n_max))
        t2 = binomial_transition(PhotonChannel(eta=0.55, n_max=n_max))
        combined = binomial_transition(PhotonChannel(eta=0.8 * 0.55, n_max=n_max))
        assert np.abs(t1 @ t2 - combined).max() < 1e-10

    def test_bose_einstein_stability(self):
        # thinning a geometric input yields the geometric with scaled mean
        n_max, eta, n_bar = 120, 0.6, 1.0
        dist = bose_einstein(n_bar, n_max)
        pushed = dist.probs @ binomial_transition(PhotonChannel(eta=eta, n_max=n_max))
        target = bose_einstein(eta * n_bar, n_max)
        assert np.abs(pushed - target.probs).max() < 1e-12
