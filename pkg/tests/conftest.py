from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from qstein.scalar import GaussianRational

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

# the deformation parameters exercised throughout
Q_SET = ["1", "2", "1/2", "i", "-1", "3/5+4/5*i"]

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)
nonzero_gaussians = gaussians.filter(bool)
nonneg_fractions = st.fractions(min_value=0, max_value=10, max_denominator=8)


@pytest.fixture
def say(capsys):
    """Print a line straight to the terminal, past output capture."""

    def emit(line):
        with capsys.disabled():
            print(line)

    return emit


def frac(x) -> Fraction:
    return Fraction(x)
