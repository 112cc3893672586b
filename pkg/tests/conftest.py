from fractions import Fraction

import pytest

from ddhooks.v1.data import PartitionClass
from ddhooks.v1.resources import Settings


@pytest.fixture
def settings():
    return Settings(precision=30, workers=1, oracle_limit=40)


@pytest.fixture
def diagram_partition():
    """(5,4,1) and its doubled distinct partition (6,6,4,2,2)."""
    return [5, 4, 1], [6, 6, 4, 2, 2]


@pytest.fixture
def all_of_ten_law():
    return {0: Fraction(1, 21), 1: Fraction(3, 7), 2: Fraction(1, 2), 3: Fraction(1, 42)}


@pytest.fixture
def dd_of_twenty_law():
    return {1: Fraction(1, 5), 2: Fraction(2, 5), 3: Fraction(1, 5), 4: Fraction(1, 5)}


@pytest.fixture
def dd():
    return PartitionClass.doubled_distinct()


# bounds |exact mean - formula| <= MEAN_TOLERANCE / sqrt(n) at n >= 250
@pytest.fixture
def mean_tolerance():
    return 5


# the variance formula stops at the constant term; its error is also O(n^{-1/2}), with a larger constant
@pytest.fixture
def variance_tolerance():
    return 20


# bounds |log(exact / main term)| <= RATIO_TOLERANCE / sqrt(n) for the dd_t(2n;x) main term
@pytest.fixture
def ratio_tolerance():
    return 5


# successive residual ratios of a linear-in-z error when z halves
@pytest.fixture
def halving_window():
    return 0.3, 0.7
