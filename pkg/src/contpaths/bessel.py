"""Modified Bessel functions of the first kind, integer order, by power series."""
from __future__ import annotations

import math

from . import kernels
from .result import EvalResult

__all__ = ["DEFAULT_MAX_TERMS", "bessel_i", "bessel_i_scaled"]

DEFAULT_MAX_TERMS = 10_000


def _check(order: int, z: float, tol: float) -> None:
    if order < 0 or int(order) != order:
        raise ValueError(f"order must be a non-negative integer, got {order}")
    if not z >= 0:
        raise ValueError(f"z must be non-negative, got {z}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")


def bessel_i_scaled(order: int, q: float, tol: float = 1e-17, max_terms: int = DEFAULT_MAX_TERMS) -> EvalResult:
    """Sum of q**m / (m! (m+order)!), i.e. I_order(z) / (z/2)**order with q = (z/2)**2.

    The scaled form has no singularity at z = 0, which is what the continuous
    binomial closed form needs on the coordinate axes.
    """
    _check(order, q, tol)
    total, nxt, ratio, used, converged = kernels.scaled_bessel_sum(int(order), float(q), float(tol), int(max_terms))
    if not converged:
        raise ArithmeticError(
            f"Bessel series did not converge within {max_terms} terms (q={q}); argument out of supported range"
        )
    # later terms shrink at least geometrically with ratio <= `ratio`
    return EvalResult(total, nxt / (1.0 - ratio), used)


def bessel_i(order: int, z: float, tol: float = 1e-15, max_terms: int = DEFAULT_MAX_TERMS) -> EvalResult:
    """I_order(z) for z >= 0.

    Terms are added until the next one is at most ``tol`` times the partial
    sum (``tol`` itself when the sum is zero).  ``tail_bound`` dominates the
    omitted remainder.
    """
    _check(order, z, tol)
    half = z / 2.0
    scaled = bessel_i_scaled(order, half * half, tol, max_terms)
    factor = half**order if order else 1.0
    return EvalResult(scaled.value * factor, scaled.tail_bound * factor, scaled.terms_used)
