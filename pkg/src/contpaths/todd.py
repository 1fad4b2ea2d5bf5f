"""Todd operators on exact polynomials and lattice-point recovery for perturbed simplices.

The Todd operator in a variable h is the series
sum_k (-1)**k B_k / k! (d/dh)**k with B_1 = -1/2.  On a polynomial it is a
finite sum, so everything here is exact.  Applying it in every perturbation
variable of a perturbed-volume polynomial and setting the perturbations to
zero counts lattice points of a unimodular polytope.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

__all__ = [
    "BernoulliTable",
    "PerturbationPolynomial",
    "VARIANTS",
    "bernoulli_numbers",
    "expected_count",
    "kp_discretize",
    "perturbed_simplex_volume",
    "todd_apply",
    "todd_apply_at_zero",
    "todd_coefficients",
]

VARIANTS = ("two_sided", "upper", "lower")


@dataclass(frozen=True)
class BernoulliTable:
    """B_0..B_K with B_1 = -1/2."""

    values: tuple[Fraction, ...]

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@lru_cache(maxsize=None)
def _bernoulli(K: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    b = [Fraction(1)]
    for m in range(1, K + 1):
        acc = sum((math.comb(m + 1, j) * b[j] for j in range(m)), Fraction(0))
        b.append(-acc / (m + 1))
    return tuple(b)


def bernoulli_numbers(K: int) -> BernoulliTable:
    """Exact Bernoulli numbers B_0..B_K from z/(e^z - 1) = sum B_k z^k / k!."""
    if K < 0:
        raise ValueError(f"K must be non-negative, got {K}")
    return BernoulliTable(_bernoulli(K))


def todd_coefficients(K: int) -> tuple[Fraction, ...]:
    """Coefficients (-1)**k B_k / k! of (d/dh)**k in the Todd operator, k = 0..K."""
    b = bernoulli_numbers(K)
    return tuple((-1) ** k * b[k] / math.factorial(k) for k in range(K + 1))


class PerturbationPolynomial:
    """Polynomial with exact rational coefficients in named variables.

    ``terms`` maps exponent tuples (aligned with ``variables``) to Fractions.
    Instances are immutable; arithmetic returns new polynomials.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], object] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        clean = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(variables) or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for variables {variables}")
            coef = Fraction(coef)
            if coef:
                clean[exp] = clean.get(exp, 0) + coef
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict) -> PerturbationPolynomial:
        # trusted constructor: exponents already valid, coefficients already Fractions
        self = object.__new__(cls)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", {e: c for e, c in terms.items() if c})
        return self

    def __setattr__(self, name, value):
        raise AttributeError("PerturbationPolynomial is immutable")

    @classmethod
    def constant(cls, variables: Sequence[str], value) -> PerturbationPolynomial:
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> PerturbationPolynomial:
        variables = tuple(variables)
        exp = tuple(int(v == name) for v in variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        return cls(variables, {exp: 1})

    def _index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}; have {self.variables}") from None

    def _coerce(self, other) -> PerturbationPolynomial:
        if isinstance(other, PerturbationPolynomial):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        return PerturbationPolynomial.constant(self.variables, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return PerturbationPolynomial._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return PerturbationPolynomial._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return PerturbationPolynomial._raw(self.variables, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Fraction(other)
        return PerturbationPolynomial._raw(self.variables, {e: c / other for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        # repeated multiplication: the bases here are sparse linear forms,
        # where squaring a dense intermediate costs far more
        out = PerturbationPolynomial.constant(self.variables, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, PerturbationPolynomial):
            return self.variables == other.variables and self.terms == other.terms
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        return f"PerturbationPolynomial({self.variables}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda item: (-sum(item[0]), item[0])):
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(self.variables, e) if k
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)

    def degree(self, name: str | None = None) -> int:
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = self._index(name)
        return max(e[i] for e in self.terms)

    def derivative(self, name: str, order: int = 1) -> PerturbationPolynomial:
        i = self._index(name)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k >= order:
                out[e[:i] + (k - order,) + e[i + 1 :]] = c * math.perm(k, order)
        return PerturbationPolynomial._raw(self.variables, out)

    def substitute_zero(self, names: Iterable[str] | None = None) -> PerturbationPolynomial:
        """Set the given variables (all by default) to zero; the variable list is kept."""
        idx = range(len(self.variables)) if names is None else [self._index(n) for n in names]
        return PerturbationPolynomial._raw(
            self.variables, {e: c for e, c in self.terms.items() if all(e[i] == 0 for i in idx)}
        )

    def at_zero(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))


def todd_apply(p: PerturbationPolynomial, var: str) -> PerturbationPolynomial:
    """Todd operator in ``var``, truncated exactly at the degree of p in var."""
    deg = p.degree(var)
    if deg <= 0:
        return p
    coeffs = todd_coefficients(deg)
    out = p
    for k in range(1, deg + 1):
        if coeffs[k]:
            out = out + p.derivative(var, k) * coeffs[k]
    return out


def todd_apply_at_zero(p: PerturbationPolynomial, var: str) -> PerturbationPolynomial:
    """Todd operator in ``var`` followed by var = 0, in one pass over the terms.

    The coefficient of var**k contributes k! (-1)**k B_k / k! = (-1)**k B_k.
    """
    i = p._index(var)
    deg = p.degree(var)
    if deg < 0:
        return p
    b = bernoulli_numbers(max(deg, 0))
    weights = [(-1) ** k * b[k] for k in range(deg + 1)]
    out: dict[tuple[int, ...], Fraction] = {}
    for e, c in p.terms.items():
        k = e[i]
        w = weights[k]
        if w:
            lowered = e[:i] + (0,) + e[i + 1 :]
            out[lowered] = out.get(lowered, 0) + c * w
    return PerturbationPolynomial._raw(p.variables, out)


def kp_discretize(
    p: PerturbationPolynomial, order: Sequence[str] | None = None, eliminate: bool = True
) -> Fraction:
    """Apply the Todd operator in every variable, then evaluate at zero.

    ``order`` picks the sequence of variables (any order gives the same
    value).  With ``eliminate`` (the default) each variable is set to zero
    right after its operator is applied, which keeps intermediate polynomials
    small; ``eliminate=False`` applies every operator to the full polynomial
    first and evaluates at the end.
    """
    order = p.variables if order is None else tuple(order)
    if sorted(order) != sorted(p.variables):
        raise ValueError(f"order {order} must be a permutation of {p.variables}")
    for name in order:
        p = todd_apply_at_zero(p, name) if eliminate else todd_apply(p, name)
    return p.at_zero()


def _variables(n: int, variant: str) -> tuple[str, ...]:
    hs = tuple(f"h_{i}" for i in range(1, n + 1))
    if variant == "upper":
        return hs + ("h_plus",)
    if variant == "lower":
        return hs + ("h_minus",)
    return hs + ("h_plus", "h_minus")


def perturbed_simplex_volume(n: int, x: int, variant: str = "two_sided") -> PerturbationPolynomial:
    """Volume of the perturbed simplex as a polynomial in h_1..h_n and h_plus / h_minus.

    upper:     (x + h_plus - sum h_i)**n / n!
    lower:     (x - h_minus - sum h_i)**n / n!
    two_sided: upper - lower
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if n < 1 or int(n) != n:
        raise ValueError(f"n must be a positive integer, got {n}")
    if x < 1 or int(x) != x:
        raise ValueError(f"x must be a positive integer, got {x}")
    names = _variables(n, variant)
    shift = PerturbationPolynomial.constant(names, x)
    for i in range(1, n + 1):
        shift = shift - PerturbationPolynomial.var(names, f"h_{i}")
    nf = math.factorial(n)
    upper = lower = None
    if variant in ("upper", "two_sided"):
        upper = (shift + PerturbationPolynomial.var(names, "h_plus")) ** n / nf
    if variant in ("lower", "two_sided"):
        lower = (shift - PerturbationPolynomial.var(names, "h_minus")) ** n / nf
    if variant == "upper":
        return upper
    if variant == "lower":
        return lower
    return upper - lower


def expected_count(n: int, x: int, variant: str) -> tuple[int, str]:
    """Binomial coefficient the discretization should recover, with a label."""
    if variant == "two_sided":
        return math.comb(x - 1, n - 1), f"C({x - 1},{n - 1})"
    if variant == "upper":
        return math.comb(x, n), f"C({x},{n})"
    if variant == "lower":
        return math.comb(x - 1, n), f"C({x - 1},{n})"
    raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
