"""Truncated multivariate power series with exact rational coefficients.

A :class:`MultiSeries` stores the coefficients of every monomial of total
degree at most ``cap`` in ``d`` variables.  Missing monomials are zero.
Differentiation lowers ``cap`` by one so that callers always know which
coefficients are still exact.
"""
from __future__ import annotations

import functools
import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import kernels
from .result import EvalResult

__all__ = [
    "MAX_TERMS_ENV",
    "ExponentVector",
    "MultiSeries",
    "ResourceLimitError",
    "borel",
    "expand_smirnov_gf",
    "geometric",
    "inverse_borel",
    "max_terms",
    "monomial_count",
    "partial_derivative",
]

MAX_TERMS_ENV = "CONTPATHS_MAX_TERMS"
DEFAULT_MAX_TERMS = 2_000_000

ExponentVector = tuple  # tuple[int, ...], entries >= 0


class ResourceLimitError(ValueError):
    """Raised when a coefficient table would exceed the configured size."""


def max_terms() -> int:
    """Size bound on dense coefficient tables, read from the environment."""
    raw = os.environ.get(MAX_TERMS_ENV)
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        value = int(raw)
    except ValueError:
        raise ResourceLimitError(f"{MAX_TERMS_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ResourceLimitError(f"{MAX_TERMS_ENV} must be positive, got {value}")
    return value


def monomial_count(d: int, cap: int) -> int:
    """Number of monomials of total degree <= cap in d variables."""
    return math.comb(cap + d, d)


def _check_size(d: int, cap: int) -> None:
    n = monomial_count(d, cap)
    limit = max_terms()
    if n > limit:
        raise ResourceLimitError(
            f"series with d={d}, cap={cap} has {n} monomials, above the limit of {limit} "
            f"(set {MAX_TERMS_ENV} to raise it)"
        )


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact (int, Fraction or 'p/q'), got {type(value).__name__}")


@dataclass(frozen=True)
class MultiSeries:
    """Immutable truncated power series in ``d`` variables."""

    d: int
    cap: int
    coeffs: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"dimension must be positive, got {self.d}")
        if self.cap < 0:
            raise ValueError(f"cap must be non-negative, got {self.cap}")
        clean = {}
        for exp, coef in self.coeffs.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.d:
                raise ValueError(f"exponent {exp} does not have length {self.d}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if sum(exp) > self.cap:
                continue
            coef = _as_fraction(coef)
            if coef:
                clean[exp] = coef
        object.__setattr__(self, "coeffs", clean)

    # construction helpers

    @classmethod
    def zero(cls, d: int, cap: int) -> MultiSeries:
        return cls(d, cap, {})

    @classmethod
    def constant(cls, d: int, cap: int, value=1) -> MultiSeries:
        return cls(d, cap, {(0,) * d: _as_fraction(value)})

    @classmethod
    def variable(cls, d: int, cap: int, axis: int) -> MultiSeries:
        """The coordinate function x_axis (axis is 1-based)."""
        _check_axis(d, axis)
        exp = [0] * d
        exp[axis - 1] = 1
        return cls(d, cap, {tuple(exp): Fraction(1)})

    # access

    def __getitem__(self, exp: Sequence[int]) -> Fraction:
        exp = tuple(exp)
        if len(exp) != self.d:
            raise ValueError(f"exponent {exp} does not have length {self.d}")
        return self.coeffs.get(exp, Fraction(0))

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(sorted(self.coeffs.items()))

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self.d == other.d and self.cap == other.cap and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.d, self.cap, frozenset(self.coeffs.items())))

    def truncate(self, cap: int) -> MultiSeries:
        if cap > self.cap:
            raise ValueError(f"cannot raise cap from {self.cap} to {cap}")
        return MultiSeries(self.d, cap, self.coeffs)

    def band(self, degree: int) -> dict[tuple[int, ...], Fraction]:
        """Terms of exactly the given total degree."""
        return {e: c for e, c in self.coeffs.items() if sum(e) == degree}

    # ring operations

    def _check_compatible(self, other: MultiSeries) -> None:
        if not isinstance(other, MultiSeries):
            raise TypeError(f"expected MultiSeries, got {type(other).__name__}")
        if other.d != self.d:
            raise ValueError(f"dimension mismatch: {self.d} vs {other.d}")

    def __add__(self, other):
        if not isinstance(other, MultiSeries):
            return self + MultiSeries.constant(self.d, self.cap, other)
        self._check_compatible(other)
        out = dict(self.coeffs)
        for exp, coef in other.coeffs.items():
            out[exp] = out.get(exp, 0) + coef
        return MultiSeries(self.d, min(self.cap, other.cap), out)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, MultiSeries):
            return self + (-_as_fraction(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor) -> MultiSeries:
        factor = _as_fraction(factor)
        return MultiSeries(self.d, self.cap, {e: c * factor for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            return self.scale(other)
        self._check_compatible(other)
        cap = min(self.cap, other.cap)
        out: dict[tuple[int, ...], Fraction] = {}
        right = sorted(other.coeffs.items(), key=lambda item: sum(item[0]))
        for ea, ca in self.coeffs.items():
            room = cap - sum(ea)
            for eb, cb in right:
                if sum(eb) > room:
                    break
                exp = tuple(a + b for a, b in zip(ea, eb))
                out[exp] = out.get(exp, 0) + ca * cb
        return MultiSeries(self.d, cap, out)

    __rmul__ = __mul__

    def derivative(self, axis: int) -> MultiSeries:
        return partial_derivative(self, axis)

    # evaluation

    def evaluate_exact(self, point: Sequence) -> Fraction:
        """Exact value at a point with rational coordinates."""
        point = [Fraction(p) for p in _check_point(self.d, point)]
        total = Fraction(0)
        for exp, coef in self.coeffs.items():
            term = coef
            for p, e in zip(point, exp):
                if e:
                    term *= p**e
            total += term
        return total

    def evaluate(self, point: Sequence[float]) -> EvalResult:
        """Floating value at ``point``.

        Degree bands are accumulated Horner-style in the total degree; the
        magnitude of the highest non-empty band is returned as ``tail_bound``,
        a heuristic indicator of the size of the truncated remainder.
        """
        point = [float(p) for p in _check_point(self.d, point)]
        items = sorted(self.coeffs.items())
        if items:
            bands = kernels.eval_bands([e for e, _ in items], [float(c) for _, c in items], point, self.cap)
        else:
            bands = [0.0] * (self.cap + 1)
        value = 0.0
        for band in reversed(bands):
            value += band
        top = next((abs(b) for b in reversed(bands) if b != 0.0), 0.0)
        return EvalResult(value, top, max(len(self.coeffs), 1))

    # serialization

    def to_json(self) -> str:
        terms = [{"exp": list(exp), "coef": _fraction_str(coef)} for exp, coef in sorted(self.coeffs.items())]
        return json.dumps({"d": self.d, "cap": self.cap, "terms": terms})

    @classmethod
    def from_json(cls, text: str) -> MultiSeries:
        data = json.loads(text)
        coeffs = {}
        for term in data["terms"]:
            exp = tuple(term["exp"])
            if exp in coeffs:
                raise ValueError(f"duplicate exponent {exp}")
            coeffs[exp] = Fraction(term["coef"])
        return cls(int(data["d"]), int(data["cap"]), coeffs)


def _fraction_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _check_axis(d: int, axis: int) -> None:
    if not 1 <= axis <= d:
        raise ValueError(f"axis must lie in [1, {d}], got {axis}")


def _check_point(d: int, point: Sequence) -> Sequence:
    if len(point) != d:
        raise ValueError(f"point has {len(point)} coordinates, series has dimension {d}")
    return point


def partial_derivative(series: MultiSeries, axis: int) -> MultiSeries:
    """Formal derivative in x_axis (1-based); the result has cap - 1."""
    _check_axis(series.d, axis)
    if series.cap == 0:
        return MultiSeries.zero(series.d, 0)
    i = axis - 1
    out = {}
    for exp, coef in series.coeffs.items():
        if exp[i]:
            lowered = exp[:i] + (exp[i] - 1,) + exp[i + 1 :]
            out[lowered] = coef * exp[i]
    return MultiSeries(series.d, series.cap - 1, out)


def _factorial_product(exp: Iterable[int]) -> int:
    return math.prod(math.factorial(e) for e in exp)


def borel(series: MultiSeries) -> MultiSeries:
    """Divide each coefficient by the product of the factorials of its exponents."""
    return MultiSeries(
        series.d, series.cap, {e: c / _factorial_product(e) for e, c in series.coeffs.items()}
    )


def inverse_borel(series: MultiSeries) -> MultiSeries:
    return MultiSeries(
        series.d, series.cap, {e: c * _factorial_product(e) for e, c in series.coeffs.items()}
    )


def geometric(g: MultiSeries) -> MultiSeries:
    """Truncated 1/(1 - g) for a series g without constant term.

    Solves F = 1 + g*F one total degree at a time, which is the truncated
    geometric sum of powers of g.
    """
    zero = (0,) * g.d
    if g[zero]:
        raise ValueError("geometric series needs g(0) = 0")
    _check_size(g.d, g.cap)
    by_degree: dict[int, list] = {}
    for exp, coef in g.coeffs.items():
        by_degree.setdefault(sum(exp), []).append((exp, coef))
    bands: list[dict] = [{zero: Fraction(1)}]
    for n in range(1, g.cap + 1):
        band: dict[tuple[int, ...], Fraction] = {}
        for k, g_terms in by_degree.items():
            if k > n:
                continue
            for ea, ca in g_terms:
                for eb, cb in bands[n - k].items():
                    exp = tuple(a + b for a, b in zip(ea, eb))
                    band[exp] = band.get(exp, 0) + ca * cb
        bands.append({e: c for e, c in band.items() if c})
    out = {}
    for band in bands:
        out.update(band)
    return MultiSeries(g.d, g.cap, out)


def expand_smirnov_gf(d: int, cap: int) -> MultiSeries:
    """Truncation of 1/(1 - sum_i x_i/(1 + x_i)) to total degree <= cap.

    The coefficient at nu counts the words over d letters with letter
    frequencies nu and no two equal adjacent letters.
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if cap < 0:
        raise ValueError(f"cap must be non-negative, got {cap}")
    _check_size(d, cap)
    return _smirnov_gf(d, cap)


@functools.lru_cache(maxsize=64)
def _smirnov_gf(d: int, cap: int) -> MultiSeries:
    g = {}
    for i in range(d):
        for k in range(1, cap + 1):
            exp = [0] * d
            exp[i] = k
            g[tuple(exp)] = Fraction((-1) ** (k - 1))
    return geometric(MultiSeries(d, cap, g))
