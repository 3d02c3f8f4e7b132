import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kummerbounds.errors import DomainError
from kummerbounds.remainder import (
    bound_coefficients,
    coefficient_asymptote,
    rho_numeric,
    shifted_coeff,
    taylor_coeff,
)
from kummerbounds.special import pochhammer, pochhammer_sign

DELTAS = [-0.9, -0.5, -0.2, 0.0, 0.4, 1.0, 1.5, 2.0, 3.3, 6.5, 10.0]
TS = [0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999]


def test_rho_examples():
    for delta in (1.5, -0.5, 4.2):
        for n in (1, 2, 5):
            assert rho_numeric(delta, n, 0.0) == pytest.approx(
                pochhammer(-delta, n) / math.factorial(n), rel=1e-10)
    assert rho_numeric(0.0, 3, 0.6) == 0.0
    # rho_2(3/2, t) tends to 1/2 as t -> 1
    assert rho_numeric(1.5, 2, 1 - 1e-12) == pytest.approx(0.5, abs=1e-5)


def test_coefficient_examples():
    c = bound_coefficients(2.0, 1.5, 2)
    assert (c.r, c.R) == (0.375, 0.5)
    assert c.S is None and c.upper == 0.5
    c = bound_coefficients(2.0, -0.5, 4)
    assert c.r == pytest.approx(35 / 128, rel=1e-15)
    assert c.S == pytest.approx(455 / 128, rel=1e-15)
    assert c.R == math.inf and c.X == c.S
    assert bound_coefficients(1.0, -0.5, 1).S == pytest.approx(2.5, rel=1e-15)


@pytest.mark.parametrize("delta", [0.0, 1.0, 2.0, 5.0])
def test_integer_delta_coefficients_vanish(delta):
    for n in range(int(delta) + 1, int(delta) + 6):
        c = bound_coefficients(1.3, delta, n)
        assert c.r == c.R == c.X == 0.0


@pytest.mark.parametrize("delta", DELTAS)
@pytest.mark.parametrize("n", range(1, 9))
def test_rho_sandwich_and_taylor_identity(delta, n):
    c = bound_coefficients(1.0, delta, n)
    values = []
    for t in TS:
        rho = rho_numeric(delta, n, t)
        values.append(rho)
        assert c.r - 1e-9 <= rho
        if delta >= 0:
            assert rho <= c.R + 1e-9
        head = math.fsum(pochhammer(-delta, k) / math.factorial(k) * t ** k for k in range(n))
        assert (1 - t) ** delta - head == pytest.approx(rho * t ** n, abs=1e-9)
        assert (rho > 0) - (rho < 0) == pochhammer_sign(delta, n)
    # monotone in t, in the direction of sign((-delta)_{n+1})
    direction = pochhammer_sign(delta, n + 1)
    steps = [b - a for a, b in zip(values, values[1:])]
    if direction > 0:
        assert all(s >= -1e-12 for s in steps)
    elif direction < 0:
        assert all(s <= 1e-12 for s in steps)
    else:
        assert all(abs(s) <= 1e-12 for s in steps)


@pytest.mark.parametrize("delta", DELTAS)
@pytest.mark.parametrize("n", range(1, 12))
def test_min_max_matches_sign_dispatch(delta, n):
    if delta < 0:
        return
    c = bound_coefficients(1.0, delta, n)
    left, right = taylor_coeff(delta, n), shifted_coeff(delta, n)
    # rho_n increases with t when (-delta)_{n+1} > 0, so the infimum is at t = 0
    if pochhammer_sign(delta, n + 1) > 0:
        assert (c.r, c.R) == (left, right)
    elif pochhammer_sign(delta, n + 1) < 0:
        assert (c.r, c.R) == (right, left)


@given(st.floats(-0.99, 20.0).filter(lambda d: abs(d) > 1e-6), st.integers(1, 60))
def test_shifted_coefficient_identity(delta, n):
    lhs = shifted_coeff(delta, n)
    rhs = n / delta * taylor_coeff(delta, n)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-300)


@given(st.floats(-0.99, -0.01), st.floats(0.01, 20.0), st.integers(1, 100))
def test_positivity_chain(delta, alpha, n):
    c = bound_coefficients(alpha, delta, n)
    assert 0 < c.r < c.S


@pytest.mark.parametrize("delta", [1.5, -0.5, 7.5, 0.3])
def test_asymptote_ratio(delta):
    n = 10_000
    ratio = coefficient_asymptote(1.0, delta, n) / bound_coefficients(1.0, delta, n).X
    assert abs(ratio - 1) < 0.10


def test_asymptote_integer_delta_rejected():
    with pytest.raises(DomainError):
        coefficient_asymptote(1.0, 2.0, 10)


@pytest.mark.parametrize("args", [(0.0, 1.0, 1), (1.0, -1.0, 1), (1.0, 0.5, 0)])
def test_bound_coefficients_domain(args):
    with pytest.raises(DomainError):
        bound_coefficients(*args)
