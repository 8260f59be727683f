from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from lbseries import forest as fo
from lbseries.serialize import random_infinitesimal
from lbseries.series import Series

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def forests_up_to(n: int):
    return st.sampled_from(fo.enumerate_forests(n))


def nonempty_forests_up_to(n: int):
    return st.sampled_from(fo.enumerate_forests(n)[1:])


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def series(draw, order: int = 3, max_terms: int = 5):
    words = draw(st.lists(forests_up_to(order), max_size=max_terms))
    return Series(order, {w: draw(fractions) for w in words})


@pytest.fixture
def lie(request):
    """Factory for seeded random Lie series."""
    def make(order: int, seed: int = 0) -> Series:
        return random_infinitesimal(order, random.Random(seed))
    return make


def F(x) -> Fraction:
    return Fraction(x)
