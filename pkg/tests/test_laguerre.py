"""Recurrence evaluation against an exact rational series oracle."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vortexforce import assoc_laguerre, assoc_laguerre_derivative

from conftest import GOLDEN, rel_err


def laguerre_series(p: int, alpha: int, x: float) -> float:
    """Brute-force series sum_k (-1)^k C(p+alpha, p-k) x^k / k! in exact
    rational arithmetic (the oracle; independent of the recurrence)."""
    xf = Fraction(x)
    total = Fraction(0)
    for k in range(p + 1):
        total += Fraction((-1) ** k) * math.comb(p + alpha, p - k) * xf**k / math.factorial(k)
    return float(total)


def test_order_zero_is_one():
    assert assoc_laguerre(0, 2, 3.7) == 1.0
    assert assoc_laguerre(0, 0, 0.0) == 1.0


def test_order_one_closed_form():
    # L_1^a(x) = 1 + a - x
    assert assoc_laguerre(1, 1, 2.0) == 0.0
    assert assoc_laguerre(1, 3, 0.5) == 3.5


def test_frozen_series_value():
    assert rel_err(assoc_laguerre(3, 2, 1.5), GOLDEN["laguerre_3_2_1p5"]) < 1e-14


def test_rejects_negative_indices():
    with pytest.raises(ValueError):
        assoc_laguerre(-1, 0, 1.0)
    with pytest.raises(ValueError):
        assoc_laguerre(2, -3, 1.0)


@pytest.mark.parametrize("p", range(0, 11))
@pytest.mark.parametrize("alpha", (0, 1, 2, 5, 10))
def test_recurrence_matches_series_lattice(p, alpha):
    for x in (0.0, 0.5, 1.5, 3.7, 7.3, 12.0, 19.5, 27.0, 35.0, 42.5, 50.0):
        assert rel_err(assoc_laguerre(p, alpha, x), laguerre_series(p, alpha, x)) < 1e-10


@settings(max_examples=200, deadline=None)
@given(
    p=st.integers(0, 10),
    alpha=st.integers(0, 10),
    x=st.floats(0.0, 50.0, allow_nan=False, allow_infinity=False),
)
def test_recurrence_matches_series_property(p, alpha, x):
    exact = laguerre_series(p, alpha, x)
    value = assoc_laguerre(p, alpha, x)
    # relative where the value is appreciable; series partial terms bound the
    # attainable absolute accuracy near roots
    term_scale = max(
        math.comb(p + alpha, p - k) * x**k / math.factorial(k) for k in range(p + 1)
    )
    assert abs(value - exact) < 1e-10 * max(abs(exact), 1e-4 * term_scale + 1e-300)


def test_derivative_identity():
    # d/dx L_p^a = -L_{p-1}^{a+1}
    assert assoc_laguerre_derivative(0, 4, 2.2) == 0.0
    for p, alpha, x in ((1, 0, 0.3), (3, 2, 1.5), (7, 5, 20.0)):
        h = 1e-6
        fd = (assoc_laguerre(p, alpha, x + h) - assoc_laguerre(p, alpha, x - h)) / (2 * h)
        assert rel_err(assoc_laguerre_derivative(p, alpha, x), fd) < 1e-8
