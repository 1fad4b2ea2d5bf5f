from fractions import Fraction

import pytest

from contpaths.contcoeff import continuous_binomial_closed
from contpaths.pde import (
    binomial_difference_check,
    mixed_derivative_residual_series,
    pde_residual_numeric,
    pde_residual_series,
    pde_residual_table,
)
from contpaths.series import MultiSeries


@pytest.mark.parametrize("d,trust", [(2, 8), (3, 6), (4, 4)])
def test_series_residual_vanishes(d, trust):
    r = pde_residual_series(d, 12)
    assert r.ok
    assert r.trustworthy_degree == trust
    assert r.max_abs_coefficient == 0
    assert r.offending_exponents == ()


def test_boundary_cap():
    r = pde_residual_series(2, 4)
    assert r.trustworthy_degree == 0 and r.ok
    assert pde_residual_table(2, 4)[(0, 0)] == 0


def test_cap_too_small():
    with pytest.raises(ValueError):
        pde_residual_series(3, 5)
    with pytest.raises(ValueError):
        pde_residual_series(1, 6)


def test_two_dim_specialization():
    cd = mixed_derivative_residual_series(12)
    assert cd == MultiSeries.zero(2, 8)
    assert pde_residual_table(2, 12) == cd


def test_residual_detects_a_wrong_series(monkeypatch):
    # perturb one coefficient of M and check the report flags it
    import contpaths.pde as pde

    real = pde.borel_route_table

    def broken(d, cap):
        m = real(d, cap)
        return m + MultiSeries(d, m.cap, {(1,) + (0,) * (d - 1): Fraction(1, 3)})

    monkeypatch.setattr(pde, "borel_route_table", broken)
    r = pde.pde_residual_series(2, 10)
    assert not r.ok
    assert r.max_abs_coefficient > 0
    assert all(sum(e) <= r.trustworthy_degree for e in r.offending_exponents)


@pytest.mark.parametrize("x,y", [(1.0, 1.0), (2.0, 3.0)])
def test_numeric_residual(x, y):
    value = continuous_binomial_closed(x, y).value
    assert pde_residual_numeric(x, y, 1e-4) <= 1e-6 * value


@pytest.mark.parametrize("x,y", [(1.0, 1.0), (2.0, 3.0), (0.7, 2.5)])
def test_second_order_convergence(x, y):
    coarse = pde_residual_numeric(x, y, 0.1)
    fine = pde_residual_numeric(x, y, 0.05)
    assert 3.0 <= coarse / fine <= 5.0


def test_numeric_within_error_model():
    # truncation error of the central mixed difference scales as step**2
    for x, y in [(0.5, 0.5), (1.5, 2.0), (3.0, 1.0)]:
        value = continuous_binomial_closed(x, y).value
        for step in (0.1, 0.05, 0.01):
            assert pde_residual_numeric(x, y, step) <= step**2 * value


def test_numeric_bad_step():
    with pytest.raises(ValueError):
        pde_residual_numeric(1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        pde_residual_numeric(1.0, 1.0, 0.0)


@pytest.mark.parametrize("n,k", [(0, 0), (3, 2), (5, 0)])
def test_binomial_difference_examples(n, k):
    assert binomial_difference_check(n, k)


def test_binomial_difference_grid():
    assert all(binomial_difference_check(n, k) for n in range(15) for k in range(15))
