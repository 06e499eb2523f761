from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "kernel",
    max_examples=60,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("kernel")


def rationals(bound=30, max_denominator=12):
    return st.fractions(min_value=-bound, max_value=bound,
                        max_denominator=max_denominator)


def nonzero_rationals(bound=30, max_denominator=12):
    return rationals(bound, max_denominator).filter(lambda q: q != 0)


@pytest.fixture
def rng():
    import random
    return random.Random(20260811)


def random_fraction(rng, bound=20, den=8):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def nonzero_fraction(rng, bound=20, den=8):
    while True:
        q = random_fraction(rng, bound, den)
        if q != 0:
            return q
