"""Checks of the differential identities satisfied by the continuous multinomial.

With M = d_1 ... d_d B(F) and D_j = 1 + d/dx_j the identity is

    prod_j D_j M = sum_i prod_{j != i} D_j M.

It is checked coefficient by coefficient on truncated series (exact) and, for
d = 2, where it reduces to d_x d_y M = M, pointwise by finite differences of
the Bessel closed form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .contcoeff import borel_route_table, continuous_binomial_closed
from .series import MultiSeries, partial_derivative

__all__ = [
    "ResidualReport",
    "binomial_difference_check",
    "mixed_derivative_residual_series",
    "pde_residual_numeric",
    "pde_residual_series",
    "pde_residual_table",
]


@dataclass(frozen=True)
class ResidualReport:
    d: int
    cap: int
    trustworthy_degree: int
    max_abs_coefficient: Fraction
    offending_exponents: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return not self.offending_exponents


def _one_plus(series: MultiSeries, axis: int) -> MultiSeries:
    # derivative drops the cap by one; the sum keeps the smaller cap
    return series + partial_derivative(series, axis)


def _check_d_cap(d: int, cap: int) -> None:
    if d < 2:
        raise ValueError(f"the identity needs d >= 2, got {d}")
    if cap < 2 * d:
        raise ValueError(f"cap must be at least 2d = {2 * d}, got {cap}")


def pde_residual_table(d: int, cap: int) -> MultiSeries:
    """Left side minus right side as a truncated series of cap - 2d."""
    _check_d_cap(d, cap)
    m = borel_route_table(d, cap)
    trust = cap - 2 * d
    left = m
    for j in range(1, d + 1):
        left = _one_plus(left, j)
    right = MultiSeries.zero(d, trust)
    for i in range(1, d + 1):
        term = m
        for j in range(1, d + 1):
            if j != i:
                term = _one_plus(term, j)
        right = right + term.truncate(trust)
    return left.truncate(trust) - right


def _report(d: int, cap: int, residual: MultiSeries) -> ResidualReport:
    trust = cap - 2 * d
    bad = tuple(e for e, _ in sorted(residual.coeffs.items()) if sum(e) <= trust)
    biggest = max((abs(c) for e, c in residual.coeffs.items() if sum(e) <= trust), default=Fraction(0))
    return ResidualReport(d, cap, trust, biggest, bad)


def pde_residual_series(d: int, cap: int) -> ResidualReport:
    """Every nonzero residual coefficient of total degree <= cap - 2d."""
    return _report(d, cap, pde_residual_table(d, cap))


def mixed_derivative_residual_series(cap: int) -> MultiSeries:
    """d_x d_y M - M for d = 2, truncated to cap - 4."""
    _check_d_cap(2, cap)
    m = borel_route_table(2, cap)
    mixed = partial_derivative(partial_derivative(m, 1), 2)
    return mixed.truncate(cap - 4) - m.truncate(cap - 4)


def pde_residual_numeric(x: float, y: float, step: float) -> float:
    """|central-difference d_x d_y C(x, y) - C(x, y)| for the continuous binomial C."""
    if not step > 0:
        raise ValueError(f"step must be positive, got {step}")
    if not (x > step and y > step):
        raise ValueError(f"step {step} must be smaller than both coordinates ({x}, {y})")

    def c(a, b):
        return continuous_binomial_closed(a, b).value

    mixed = (c(x + step, y + step) - c(x + step, y - step) - c(x - step, y + step) + c(x - step, y - step)) / (
        4.0 * step * step
    )
    return abs(mixed - c(x, y))


def binomial_difference_check(n: int, k: int) -> bool:
    """Exact check that the mixed forward difference of C(n+k, k) reproduces it."""
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be non-negative, got ({n}, {k})")

    def b(a, c):
        return math.comb(a + c, c)

    return b(n + 1, k + 1) - b(n + 1, k) - b(n, k + 1) + b(n, k) == b(n, k)
