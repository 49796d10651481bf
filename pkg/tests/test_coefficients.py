import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from besselasym import coeff_a, coeff_b, coeff_table


def product_a(nu, n):
    """a_n as an explicit product of gamma-quotient factors, in mpmath."""
    with mpmath.workdps(40):
        nu = mpmath.mpc(nu)
        acc = mpmath.mpc(1)
        for k in range(1, n + 1):
            acc *= (4 * nu * nu - (2 * k - 1) ** 2) / (8 * k)
        return complex(acc)


def test_first_values():
    assert coeff_a(0.0, 0) == 1.0
    assert coeff_a(2.0, 1) == pytest.approx((4 * 4 - 1) / 8)
    # b_1 = (4 nu^2 + 3) / 8
    assert coeff_b(1.0, 1) == pytest.approx(7.0 / 8.0)


@pytest.mark.parametrize("nu", [0.0, 1.0 / 3.0, 2.7, 2.0 + 1.0j])
@pytest.mark.parametrize("n", [0, 1, 5, 12, 25])
def test_a_matches_explicit_product(nu, n):
    assert coeff_a(nu, n) == pytest.approx(product_a(nu, n), rel=1e-13, abs=1e-300)


@pytest.mark.parametrize("nu", [0.0, 0.25, 1.5, 1.0 + 2.0j])
@pytest.mark.parametrize("n", [1, 2, 7, 15])
def test_b_order_shift_identity(nu, n):
    # 2 b_n(nu) = a_n(nu+1) + a_n(nu-1); b is computed by its own recurrence,
    # so this is an independent consistency check
    lhs = 2.0 * coeff_b(nu, n)
    rhs = coeff_a(complex(nu) + 1.0, n) + coeff_a(complex(nu) - 1.0, n)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-300)


def test_half_integer_termination():
    for n in (1, 2, 6):
        assert coeff_a(0.5, n) == 0.0
    assert coeff_a(1.5, 1) != 0.0
    assert coeff_a(1.5, 2) == 0.0
    # b terminates one order later
    assert coeff_b(0.5, 1) != 0.0
    assert coeff_b(0.5, 2) == 0.0


def test_table_consistent_with_point_access():
    t = coeff_table(1.0 / 3.0, 10)
    assert list(t.a) == [coeff_a(1.0 / 3.0, n) for n in range(11)]
    assert list(t.b) == [coeff_b(1.0 / 3.0, n) for n in range(11)]


@settings(max_examples=50)
@given(st.floats(-3.0, 3.0), st.integers(1, 30))
def test_recurrence_property(nu, n):
    prev = coeff_a(nu, n - 1)
    assert coeff_a(nu, n) == pytest.approx(
        prev * (4 * nu * nu - (2 * n - 1) ** 2) / (8 * n), rel=1e-13, abs=1e-300)
