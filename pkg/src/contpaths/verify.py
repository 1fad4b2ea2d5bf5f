"""Acceptance checks, runnable from the CLI (``contpaths verify-all``) and from pytest.

Each check compares a production routine against an independent oracle and
returns a :class:`CheckResult`.  ``quick=True`` shrinks the parameter ranges
for a fast smoke run; tolerances never change.
"""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .contcoeff import (
    borel_route_table,
    continuous_binomial_closed,
    continuous_multinomial_series,
    series_route_table,
)
from .geometry import (
    PatternPolytope,
    brute_force_simplex_points,
    count_lattice_paths,
    discrete_recovery_sum,
    multinomial,
    pattern_volume,
    simplex_volume,
)
from .pde import pde_residual_numeric, pde_residual_series
from .smirnov import SmirnovWord, brute_force_counts, count_smirnov
from .todd import VARIANTS, bernoulli_numbers, expected_count, kp_discretize, perturbed_simplex_volume, todd_coefficients

__all__ = ["CHECKS", "CheckResult", "binomial_oracle_sum", "bernoulli_by_division", "run_all"]

GRID = (0.25, 0.5, 1.0, 2.0, 4.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    passed, detail = fn()
    return CheckResult(name, passed, detail, time.perf_counter() - start)


def _nonneg_vectors(total: int, d: int):
    """All d-tuples of non-negative integers summing to total."""
    for cuts in itertools.combinations(range(total + d - 1), d - 1):
        bounds = (-1,) + cuts + (total + d - 1,)
        yield tuple(b - a - 1 for a, b in zip(bounds, bounds[1:]))


def binomial_oracle_sum(x: Fraction, y: Fraction, terms: int = 30) -> Fraction:
    """Exact partial sum of the d = 2 double series, m = 0..terms-1.

    sum_m 2 (xy)**m / (m!)**2 + (x**m y**(m+1) + x**(m+1) y**m) / (m! (m+1)!)
    """
    total = Fraction(0)
    for m in range(terms):
        a = math.factorial(m)
        b = math.factorial(m + 1)
        total += 2 * (x * y) ** m / (a * a) + (x**m * y ** (m + 1) + x ** (m + 1) * y**m) / (a * b)
    return total


def bernoulli_by_division(K: int) -> list[Fraction]:
    """B_0..B_K by inverting (e^z - 1)/z = sum z^k / (k+1)! as an exact power series."""
    a = [Fraction(1, math.factorial(k + 1)) for k in range(K + 1)]
    inv = [Fraction(0)] * (K + 1)
    inv[0] = 1 / a[0]
    for n in range(1, K + 1):
        inv[n] = -sum((a[k] * inv[n - k] for k in range(1, n + 1)), Fraction(0)) / a[0]
    return [inv[k] * math.factorial(k) for k in range(K + 1)]


def check_closed_vs_series(quick: bool = False) -> tuple[bool, str]:
    worst = 0.0
    start = time.perf_counter()
    for x, y in itertools.product(GRID, repeat=2):
        closed = continuous_binomial_closed(x, y).value
        series = continuous_multinomial_series((x, y), cap=40).value
        worst = max(worst, abs(closed - series) / closed)
    elapsed = time.perf_counter() - start
    fast = elapsed < 1.0
    return worst <= 1e-10 and fast, f"max rel diff {worst:.3e} (tol 1e-10), under 1s: {fast}"


def check_spot_value(quick: bool = False) -> tuple[bool, str]:
    oracle = binomial_oracle_sum(Fraction(1), Fraction(1), 30)
    value = continuous_binomial_closed(1.0, 1.0).value
    diff = abs(value - float(oracle))
    return diff <= 1e-6, f"closed form {value:.10f}, oracle {float(oracle):.10f}, |diff| {diff:.2e} (tol 1e-6)"


def check_borel_route(quick: bool = False) -> tuple[bool, str]:
    cap = 10 if quick else 12
    failures = []
    compared = 0
    for d in (2, 3, 4):
        a = series_route_table(d, cap)
        b = borel_route_table(d, cap)
        for mu in set(a.coeffs) | set(b.coeffs):
            if sum(mu) <= cap - d:
                compared += 1
                if a[mu] != b[mu]:
                    failures.append((d, mu))
        if a.cap != b.cap:
            failures.append((d, "cap"))
    return not failures, f"{compared} coefficients compared exactly at cap {cap}, {len(failures)} mismatches"


def check_pde(quick: bool = False) -> tuple[bool, str]:
    cap = 10 if quick else 12
    details = []
    ok = True
    for d in (2, 3, 4):
        report = pde_residual_series(d, cap)
        ok &= report.ok and report.max_abs_coefficient == 0
        details.append(f"d={d}: max |coef| {report.max_abs_coefficient} through degree {report.trustworthy_degree}")
    for x, y in ((1.0, 1.0), (2.0, 3.0)):
        rel = pde_residual_numeric(x, y, 1e-4) / continuous_binomial_closed(x, y).value
        ok &= rel <= 1e-6
        details.append(f"numeric ({x:g},{y:g}) rel {rel:.2e}")
    return ok, "; ".join(details)


def check_todd(quick: bool = False) -> tuple[bool, str]:
    n_max, x_max = (4, 8) if quick else (6, 12)
    start = time.perf_counter()
    failures = []
    cells = 0
    for n in range(1, n_max + 1):
        for x in range(n, x_max + 1):
            for variant in VARIANTS:
                cells += 1
                got = kp_discretize(perturbed_simplex_volume(n, x, variant))
                want, _ = expected_count(n, x, variant)
                if got != want or got != brute_force_simplex_points(n, x, variant):
                    failures.append((n, x, variant, got))
    elapsed = time.perf_counter() - start
    fast = elapsed < 10.0
    return not failures and fast, f"{cells} cells exact, {len(failures)} failures {failures[:3]}, under 10s: {fast}"


def check_smirnov(quick: bool = False) -> tuple[bool, str]:
    n_max = 6 if quick else 8
    failures = []
    checked = 0
    for d in range(1, 5):
        for n in range(n_max + 1):
            tally = brute_force_counts(d, n)
            total = 0
            for nu in _nonneg_vectors(n, d):
                got = count_smirnov(nu)
                checked += 1
                total += got
                if got != tally.get(nu, 0):
                    failures.append(nu)
            if n >= 1 and total != d * (d - 1) ** (n - 1):
                failures.append(("total", d, n, total))
    return not failures, f"{checked} frequency vectors up to |nu|={n_max}, {len(failures)} mismatches {failures[:3]}"


def check_discrete_recovery(quick: bool = False) -> tuple[bool, str]:
    budget = 7 if quick else 10
    failures = []
    checked = 0
    for d in (1, 2, 3):
        for q in itertools.product(range(1, budget + 1), repeat=d):
            if sum(q) > budget:
                continue
            checked += 1
            want = multinomial(q)
            if not discrete_recovery_sum(q) == count_lattice_paths(q) == want:
                failures.append(q)
    hand = discrete_recovery_sum((2, 1)) == 3
    return not failures and hand, f"{checked} targets, {len(failures)} mismatches, q=(2,1) -> 3: {hand}"


def check_measure_ratio(quick: bool = False, seed: int = 20240611) -> tuple[bool, str]:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(100):
        d = rng.randint(2, 4)
        n = rng.randint(d, 9)
        while True:
            letters = [rng.randint(1, d)]
            while len(letters) < n:
                c = rng.randint(1, d)
                if c != letters[-1]:
                    letters.append(c)
            if len(set(letters)) == d:
                break
        x = tuple(rng.uniform(0.1, 5.0) for _ in range(d))
        p = PatternPolytope(SmirnovWord(letters, d), x)
        ratio = pattern_volume(p, "riemannian") / pattern_volume(p, "cd")
        expect = math.prod(math.sqrt(v) for v in p.nu)
        worst = max(worst, abs(ratio - expect) / expect)
    seg = simplex_volume(2, 1, "riemannian")
    seg_err = abs(seg - math.sqrt(2)) / math.sqrt(2)
    return worst <= 1e-12 and seg_err <= 1e-12, f"max rel err {worst:.2e} over 100 patterns; segment length {seg!r}"


def check_bernoulli(quick: bool = False) -> tuple[bool, str]:
    table = list(bernoulli_numbers(8))
    oracle = bernoulli_by_division(8)
    todd4 = todd_coefficients(4)[4]
    ok = table == oracle and todd4 == Fraction(-1, 720)
    return ok, f"B_0..B_8 = {[str(b) for b in table]}; Todd k=4 coefficient {todd4}"


CHECKS: dict[str, Callable[[bool], tuple[bool, str]]] = {
    "closed-form vs series": check_closed_vs_series,
    "spot value (1,1)": check_spot_value,
    "Borel route vs series": check_borel_route,
    "PDE residual": check_pde,
    "Todd/KP recovery": check_todd,
    "Smirnov counting": check_smirnov,
    "discrete recovery": check_discrete_recovery,
    "measure correction": check_measure_ratio,
    "Bernoulli/Todd coefficients": check_bernoulli,
}


def run_all(quick: bool = False) -> list[CheckResult]:
    return [_timed(name, lambda fn=fn: fn(quick)) for name, fn in CHECKS.items()]
