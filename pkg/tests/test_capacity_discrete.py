import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boscap.capacity_discrete import (
    LN2,
    BinaryEnsemble,
    ClassicalChannel,
    CovariantEnsemble,
    accessible_info_binary,
    accessible_info_binary_nats,
    binary_c1,
    binary_error_probability,
    covariant_pure_capacity,
    mutual_information,
    shannon_entropy_nats,
)
from boscap.exceptions import SpectrumError
from boscap.oracle import CoherentEnsemble, gram_mixture_entropy


def h2_bits(p: float) -> float:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -(p * math.log2(p) + (1.0 - p) * math.log2(1.0 - p))


@st.composite
def classical_channels(draw):
    n_in = draw(st.integers(min_value=2, max_value=5))
    n_out = draw(st.integers(min_value=2, max_value=5))
    raw_prior = draw(
        st.lists(st.floats(0.01, 1.0), min_size=n_in, max_size=n_in)
    )
    prior = np.array(raw_prior)
    prior /= prior.sum()
    rows = []
    for _ in range(n_in):
        raw = draw(st.lists(st.floats(0.01, 1.0), min_size=n_out, max_size=n_out))
        row = np.array(raw)
        rows.append(row / row.sum())
    # renormalize exactly enough to satisfy the 1e-12 gates
    prior = prior / prior.sum()
    cond = np.array([r / r.sum() for r in rows])
    return ClassicalChannel(prior=prior, conditional=cond)


class TestMutualInformation:
    def test_noiseless_binary(self):
        ch = ClassicalChannel(prior=np.array([0.5, 0.5]), conditional=np.eye(2))
        assert mutual_information(ch) == pytest.approx(math.log(2.0), rel=1e-12)

    def test_constant_rows_carry_nothing(self):
        cond = np.tile(np.array([0.2, 0.3, 0.5]), (4, 1))
        ch = ClassicalChannel(prior=np.full(4, 0.25), conditional=cond)
        assert mutual_information(ch) == pytest.approx(0.0, abs=1e-15)

    def test_binary_symmetric_channel(self):
        eps = 0.11
        cond = np.array([[1 - eps, eps], [eps, 1 - eps]])
        ch = ClassicalChannel(prior=np.array([0.5, 0.5]), conditional=cond)
        expected = (1.0 - h2_bits(eps)) * math.log(2.0)
        assert mutual_information(ch) == pytest.approx(expected, rel=1e-12)

    def test_zero_probability_entries_contribute_nothing(self):
        cond = np.array([[1.0, 0.0, 0.0], [0.0, 0.5, 0.5]])
        ch = ClassicalChannel(prior=np.array([0.3, 0.7]), conditional=cond)
        expected = shannon_entropy_nats(np.array([0.3, 0.7]))
        assert mutual_information(ch) == pytest.approx(expected, rel=1e-12)

    @settings(max_examples=500, deadline=None)
    @given(classical_channels())
    def test_data_processing_bounds(self, ch):
        info = mutual_information(ch)
        assert -1e-12 <= info
        assert info <= shannon_entropy_nats(ch.prior) + 1e-12
        assert info <= shannon_entropy_nats(ch.prior @ ch.conditional) + 1e-12

    def test_invalid_prior_rejected(self):
        with pytest.raises(ValueError):
            ClassicalChannel(prior=np.array([0.5, 0.6]), conditional=np.eye(2))


class TestCovariantPureCapacity:
    def test_orthogonal_orbit(self):
        ens = CovariantEnsemble(m_size=4, overlaps=np.array([1.0, 0.0, 0.0, 0.0]))
        assert covariant_pure_capacity(ens) == pytest.approx(math.log(4.0), rel=1e-12)

    def test_binary_overlap_half(self):
        ens = CovariantEnsemble(m_size=2, overlaps=np.array([1.0, 0.5]))
        expected = -(0.75 * math.log(0.75) + 0.25 * math.log(0.25))
        assert covariant_pure_capacity(ens) == pytest.approx(expected, rel=1e-12)

    def test_identical_states_carry_nothing(self):
        ens = CovariantEnsemble(m_size=3, overlaps=np.ones(3))
        assert covariant_pure_capacity(ens) == pytest.approx(0.0, abs=1e-12)

    def test_pair_matches_gram_oracle(self):
        for kappa in np.linspace(0.0, 0.999, 25):
            ens = CovariantEnsemble(m_size=2, overlaps=np.array([1.0, kappa]))
            via_dft = covariant_pure_capacity(ens)
            # realize the same overlap with coherent states {0, a}
            a = math.sqrt(-2.0 * math.log(kappa)) if kappa > 0 else 12.0
            coherent = CoherentEnsemble(
                amplitudes=np.array([0.0, a]), priors=np.array([0.5, 0.5])
            )
            via_gram, _ = gram_mixture_entropy(coherent)
            assert via_dft == pytest.approx(via_gram, abs=1e-10)

    def test_invalid_gram_rejected(self):
        ens = CovariantEnsemble(m_size=2, overlaps=np.array([1.0, 1.2]))
        with pytest.raises(SpectrumError):
            covariant_pure_capacity(ens)

    def test_first_overlap_must_be_one(self):
        with pytest.raises(ValueError):
            CovariantEnsemble(m_size=2, overlaps=np.array([0.9, 0.5]))


class TestBinaryDetection:
    def test_error_probability_endpoints(self):
        assert binary_error_probability(0.0) == 0.0
        assert binary_error_probability(1.0) == pytest.approx(0.5, abs=1e-15)

    def test_error_probability_half(self):
        expected = (1.0 - math.sqrt(3.0) / 2.0) / 2.0
        assert binary_error_probability(0.5) == pytest.approx(expected, rel=1e-12)

    def test_c1_endpoints(self):
        assert binary_c1(0.0) == pytest.approx(1.0, abs=1e-15)
        assert binary_c1(1.0) == pytest.approx(0.0, abs=1e-15)

    def test_c1_coherent_pair_value(self):
        # antipodal coherent pair with mean photon number 0.5: kappa = e^{-1}
        kappa = math.exp(-1.0)
        p_err = (1.0 - math.sqrt(1.0 - math.exp(-2.0))) / 2.0
        expected = 1.0 - h2_bits(p_err)
        assert binary_c1(kappa) == pytest.approx(expected, rel=1e-12)
        assert expected == pytest.approx(0.780806, abs=1e-6)

    def test_c1_strictly_decreasing(self):
        kappas = np.linspace(1e-4, 1.0 - 1e-9, 500)
        values = np.array([binary_c1(k) for k in kappas])
        assert np.all(np.diff(values) < 0.0)

    def test_trine_overlap_recomputation(self):
        # three equal-angle states in 2-D restricted to the best pair
        assert binary_c1(0.5) == pytest.approx(0.6454, abs=5e-4)


class TestAccessibleInformation:
    def test_orthogonal_symmetric_is_one_bit(self):
        assert accessible_info_binary(BinaryEnsemble(kappa=0.0, q=0.5)) == pytest.approx(
            1.0, abs=1e-15
        )

    def test_degenerate_prior_carries_nothing(self):
        for kappa in (0.0, 0.3, 1.0):
            assert accessible_info_binary(BinaryEnsemble(kappa=kappa, q=0.0)) == 0.0
            assert accessible_info_binary(BinaryEnsemble(kappa=kappa, q=1.0)) == 0.0

    def test_identical_states_carry_nothing(self):
        for q in np.linspace(0.0, 1.0, 21):
            assert accessible_info_binary(
                BinaryEnsemble(kappa=1.0, q=q)
            ) == pytest.approx(0.0, abs=1e-12)

    def test_symmetric_prior_reduces_to_c1(self):
        for kappa in np.linspace(0.0, 1.0, 41):
            ia = accessible_info_binary(BinaryEnsemble(kappa=kappa, q=0.5))
            assert ia == pytest.approx(binary_c1(kappa), abs=1e-12)

    def test_never_exceeds_pair_holevo(self):
        # the Holevo quantity of the same pair at the same prior bounds I_a
        for kappa in np.linspace(0.05, 0.95, 10):
            a = math.sqrt(-2.0 * math.log(kappa))
            for q in np.linspace(0.05, 0.95, 10):
                chi, _ = gram_mixture_entropy(
                    CoherentEnsemble(
                        amplitudes=np.array([0.0, a]), priors=np.array([q, 1.0 - q])
                    )
                )
                ia_nats = accessible_info_binary_nats(kappa, q)
                assert ia_nats <= chi + 1e-12

    @settings(max_examples=500, deadline=None)
    @given(st.floats(0.0, 1.0), st.floats(0.0, 1.0))
    def test_nonnegative_and_bounded_by_prior_entropy(self, kappa, q):
        ia_nats = accessible_info_binary_nats(kappa, q)
        prior_entropy = -(
            q * math.log(q) if q > 0 else 0.0
        ) - ((1 - q) * math.log(1 - q) if q < 1 else 0.0)
        assert 0.0 <= ia_nats <= prior_entropy + 1e-12
