from __future__ import annotations

from fractions import Fraction

import pytest

from piforge.numeric_engine import PrecisionContext
from piforge.special_numbers import bernoulli_numbers, euler_numbers

# First 100 published decimal digits of pi, used as an oracle independent of
# the package's own Machin evaluation.
PI_100_DIGITS = Fraction(
    "3.1415926535897932384626433832795028841971693993751058209749445923078"
    "1640628620899862803482534211706798"
)


@pytest.fixture(scope="session")
def ctx128() -> PrecisionContext:
    return PrecisionContext(128)


@pytest.fixture(scope="session")
def euler_table():
    return euler_numbers(10)


@pytest.fixture(scope="session")
def bernoulli_table():
    return bernoulli_numbers(10)
