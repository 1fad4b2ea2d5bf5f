"""Continuous binomial and multinomial coefficients.

Three routes are provided:

* ``continuous_binomial_closed``: the Bessel closed form, d = 2 only.
* ``continuous_multinomial_series``: the sum over frequency vectors nu with
  every entry >= 1 of count(nu) * prod x_i**(nu_i-1) / (nu_i-1)!.
* ``continuous_multinomial_borel``: d mixed derivatives of the Borel
  transform of the Smirnov generating function.

The two series routes share no code beyond the generating function itself and
their coefficient tables are compared exactly in the test suite.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

from . import kernels
from .bessel import bessel_i_scaled
from .result import EvalResult
from .series import MultiSeries, borel, expand_smirnov_gf, partial_derivative

__all__ = [
    "CAP_TOO_SMALL",
    "TAIL_NOT_DECAYING",
    "borel_route_table",
    "continuous_binomial_closed",
    "continuous_multinomial",
    "continuous_multinomial_borel",
    "continuous_multinomial_exact",
    "continuous_multinomial_series",
    "default_cap",
    "series_route_table",
]

CAP_TOO_SMALL = "cap below dimension: no frequency vector with all entries >= 1 fits"
TAIL_NOT_DECAYING = "degree bands still growing at the cap: tail_bound covers one band only"


def _check_point(x: Sequence[float]) -> list:
    x = list(x)
    if len(x) < 2:
        raise ValueError(f"continuous multinomial needs d >= 2, got d={len(x)}")
    for v in x:
        if not v >= 0:
            raise ValueError(f"coordinates must be non-negative, got {v}")
    return x


def default_cap(x: Sequence[float]) -> int:
    """Truncation degree at which dropped terms decay super-exponentially."""
    return max(len(x), math.ceil(2 * math.e * max(x, default=0)) + 10)


def continuous_binomial_closed(x: float, y: float, tol: float = 1e-17) -> EvalResult:
    """2 I_0(2 sqrt(xy)) + (x + y) I_1(2 sqrt(xy)) / sqrt(xy).

    With q = xy the second Bessel term is (x + y) times the scaled sum
    sum_m q**m / (m! (m+1)!), which equals 1 at q = 0, so the axes need no
    special case (value 2 + x + y there).
    """
    if not x >= 0 or not y >= 0:
        raise ValueError(f"continuous binomial needs x, y >= 0, got ({x}, {y})")
    q = float(x) * float(y)
    i0 = bessel_i_scaled(0, q, tol)
    i1 = bessel_i_scaled(1, q, tol)
    s = float(x) + float(y)
    value = 2.0 * i0.value + s * i1.value
    bound = 2.0 * i0.tail_bound + s * i1.tail_bound
    return EvalResult(value, bound, max(i0.terms_used, i1.terms_used))


def series_route_table(d: int, cap: int) -> MultiSeries:
    """Coefficients of the defining sum, indexed by nu - 1; cap of the result is cap - d.

    Entry at mu is count(mu + 1) / prod(mu_i!), read off the Smirnov
    generating function.  Frequency vectors with a zero entry are skipped.
    """
    if d < 2:
        raise ValueError(f"continuous multinomial needs d >= 2, got {d}")
    if cap < d:
        return MultiSeries.zero(d, 0)
    f = expand_smirnov_gf(d, cap)
    out = {}
    for nu, count in f.coeffs.items():
        if min(nu) < 1:
            continue
        mu = tuple(v - 1 for v in nu)
        out[mu] = count / math.prod(math.factorial(m) for m in mu)
    return MultiSeries(d, cap - d, out)


def borel_route_table(d: int, cap: int) -> MultiSeries:
    """d_1 ... d_d of the Borel transform of the Smirnov generating function (cap - d)."""
    if d < 2:
        raise ValueError(f"continuous multinomial needs d >= 2, got {d}")
    if cap < d:
        return MultiSeries.zero(d, 0)
    m = borel(expand_smirnov_gf(d, cap))
    for axis in range(1, d + 1):
        m = partial_derivative(m, axis)
    return m


def _band_sums(table: MultiSeries, x: Sequence[float]) -> list[float]:
    items = sorted(table.coeffs.items())
    exps = [e for e, _ in items] or [(0,) * table.d]
    coefs = [float(c) for _, c in items] or [0.0]
    return kernels.eval_bands(exps, coefs, [float(v) for v in x], table.cap)


def _first_dropped_band(d: int, cap: int, x: Sequence[float]) -> float:
    """Size of the band of total degree cap + 1 in nu."""
    f = expand_smirnov_gf(d, cap + 1)
    total = 0.0
    for nu, count in f.band(cap + 1).items():
        if min(nu) < 1:
            continue
        term = float(count)
        for v, n in zip(x, nu):
            term *= float(v) ** (n - 1) / math.factorial(n - 1)
        total += term
    return abs(total)


def _evaluate_table(table: MultiSeries, x: Sequence[float], cap: int) -> EvalResult:
    d = len(x)
    if cap < d:
        return EvalResult(0.0, 0.0, 1, (CAP_TOO_SMALL,))
    bands = _band_sums(table, x)
    value = 0.0
    for band in reversed(bands):
        value += band
    # every term is non-negative; continue the first dropped band geometrically
    # with the ratio it has to the last kept band
    dropped = _first_dropped_band(d, cap, x)
    last = abs(bands[-1])
    ratio = dropped / last if last else 0.0
    if ratio < 1.0:
        return EvalResult(value, dropped / (1.0 - ratio), max(len(table), 1))
    return EvalResult(value, dropped, max(len(table), 1), (TAIL_NOT_DECAYING,))


def continuous_multinomial_series(x: Sequence[float], cap: int | None = None) -> EvalResult:
    """Truncated defining sum over frequency vectors of total degree <= cap.

    ``tail_bound`` extends the first omitted degree band by the geometric
    ratio between it and the last kept band.  It is an estimate rather than a
    proof.  A cap smaller than d gives value 0 with a
    note in ``EvalResult.notes``.
    """
    x = _check_point(x)
    cap = default_cap(x) if cap is None else int(cap)
    return _evaluate_table(series_route_table(len(x), cap), x, cap)


def continuous_multinomial_borel(x: Sequence[float], cap: int | None = None) -> EvalResult:
    """Same quantity through derivatives of the Borel-transformed generating function."""
    x = _check_point(x)
    cap = default_cap(x) if cap is None else int(cap)
    return _evaluate_table(borel_route_table(len(x), cap), x, cap)


def continuous_multinomial_exact(x: Sequence, cap: int) -> Fraction:
    """Exact truncated defining sum at a rational point.

    Summed term by term over frequency vectors rather than through a
    coefficient table, so it doubles as a check on the float evaluation.
    """
    x = [Fraction(v) for v in _check_point(x)]
    d = len(x)
    total = Fraction(0)
    if cap < d:
        return total
    f = expand_smirnov_gf(d, cap)
    for mu in itertools.product(range(cap - d + 1), repeat=d):
        if sum(mu) > cap - d:
            continue
        count = f[tuple(m + 1 for m in mu)]
        if not count:
            continue
        term = Fraction(count)
        for v, m in zip(x, mu):
            term *= v**m / math.factorial(m)
        total += term
    return total


def continuous_multinomial(x: Sequence[float], cap: int | None = None, method: str = "series") -> EvalResult:
    """Dispatch on ``method``: closed_form (d = 2), series or borel_route."""
    x = _check_point(x)
    if method == "closed_form":
        if len(x) != 2:
            raise ValueError("closed_form is only available for d = 2")
        return continuous_binomial_closed(*x)
    if method == "series":
        return continuous_multinomial_series(x, cap)
    if method == "borel_route":
        return continuous_multinomial_borel(x, cap)
    raise ValueError(f"unknown method {method!r}")
