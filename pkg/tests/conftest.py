import numpy as np
import pytest
from hypothesis import strategies as st

from boscap.gaussian_core import OneModeGaussianState


def state_from_invariant(nu: float, ratio: float, angle: float,
                         mean=(0.0, 0.0)) -> OneModeGaussianState:
    """Valid state with symplectic invariant nu >= 1/2 (hbar = omega = 1)."""
    c, s = np.cos(angle), np.sin(angle)
    big, small = nu * ratio, nu / ratio
    return OneModeGaussianState(
        mean=mean,
        alpha_qq=big * c * c + small * s * s,
        alpha_pp=big * s * s + small * c * c,
        alpha_qp=(big - small) * s * c,
    )


@st.composite
def gaussian_states(draw):
    nu = draw(st.floats(min_value=0.5, max_value=6.0))
    ratio = draw(st.floats(min_value=0.25, max_value=4.0))
    angle = draw(st.floats(min_value=0.0, max_value=2.0 * np.pi))
    mq = draw(st.floats(min_value=-3.0, max_value=3.0))
    mp = draw(st.floats(min_value=-3.0, max_value=3.0))
    return state_from_invariant(nu, ratio, angle, mean=(mq, mp))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
