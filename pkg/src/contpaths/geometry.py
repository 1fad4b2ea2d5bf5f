"""Path polytopes for the standard basis directions, their volumes and lattice points.

A pattern (Smirnov word) c with frequency vector nu fixes the order of the
direction changes of a path to x.  The set of step lengths realising it is a
product of simplices, one per direction, {b_1 + ... + b_{nu_i} = x_i}.

Two volume normalizations are supported: ``riemannian`` (induced Euclidean
measure, y**(m-1) sqrt(m) / (m-1)!) and ``cd`` (y**(m-1) / (m-1)!).
Lattice paths use strictly positive integer steps, so the points of the
pattern polytope are compositions of each q_i into nu_i positive parts.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .series import expand_smirnov_gf
from .smirnov import SmirnovWord, count_smirnov, frequency_vector

__all__ = [
    "MEASURES",
    "PatternPolytope",
    "brute_force_pattern_points",
    "brute_force_simplex_points",
    "count_lattice_paths",
    "discrete_recovery_sum",
    "gram_simplex_volume",
    "lattice_points_in_pattern",
    "moduli_volume_truncated",
    "multinomial",
    "pattern_volume",
    "simplex_volume",
]

MEASURES = ("riemannian", "cd")


def _check_measure(measure: str) -> None:
    if measure not in MEASURES:
        raise ValueError(f"measure must be one of {MEASURES}, got {measure!r}")


def simplex_volume(m: int, y, measure: str = "cd"):
    """Volume of {b_1 + ... + b_m = y, b >= 0} as an (m-1)-dimensional body.

    The cd measure returns an exact Fraction when ``y`` is rational (int or
    Fraction); everything else is a float.
    """
    _check_measure(measure)
    if m < 1:
        raise ValueError(f"simplex needs m >= 1 parts, got {m}")
    if not y >= 0:
        raise ValueError(f"y must be non-negative, got {y}")
    denom = math.factorial(m - 1)
    if measure == "cd":
        if isinstance(y, Rational):
            return Fraction(y) ** (m - 1) / denom
        return float(y) ** (m - 1) / denom
    return float(y) ** (m - 1) * math.sqrt(m) / denom


def gram_simplex_volume(m: int, y: float) -> float:
    """Euclidean volume of the simplex with vertices y*e_1..y*e_m via its Gram determinant.

    Independent of :func:`simplex_volume`; used to check the riemannian formula.
    """
    import numpy as np

    if m == 1:
        return 1.0
    vertices = y * np.eye(m)
    edges = vertices[1:] - vertices[0]
    gram = edges @ edges.T
    return math.sqrt(max(np.linalg.det(gram), 0.0)) / math.factorial(m - 1)


@dataclass(frozen=True)
class PatternPolytope:
    """Directed paths to ``target`` that follow the direction pattern ``word``."""

    word: SmirnovWord
    target: tuple

    def __post_init__(self):
        if not isinstance(self.word, SmirnovWord):
            raise TypeError("word must be a SmirnovWord")
        target = tuple(self.target)
        if len(target) != self.word.d:
            raise ValueError(f"target has {len(target)} entries, alphabet has {self.word.d} letters")
        for t in target:
            if not t >= 0:
                raise ValueError(f"target entries must be non-negative, got {t}")
        object.__setattr__(self, "target", target)

    @property
    def nu(self) -> tuple[int, ...]:
        return frequency_vector(self.word, self.word.d)

    @property
    def dimension(self) -> int:
        return len(self.word) - self.word.d

    @property
    def degenerate(self) -> bool:
        return min(self.nu) < 1


def pattern_volume(p: PatternPolytope, measure: str = "cd"):
    """Product of the per-direction simplex volumes; 0 when a direction is unused."""
    _check_measure(measure)
    if p.degenerate:
        return 0
    return _product_volume(p.nu, p.target, measure)


def _product_volume(nu, x, measure):
    vol = 1
    for n, v in zip(nu, x):
        vol = vol * simplex_volume(n, v, measure)
    return vol


def moduli_volume_truncated(x: Sequence, cap: int, measure: str = "cd"):
    """Sum of pattern volumes over all Smirnov words of length <= cap.

    Words with equal frequency vectors have equal volume, so the sum runs
    over word lengths and, within each length, over frequency vectors
    weighted by their word count.  Exact for cd at rational x.
    """
    _check_measure(measure)
    x = tuple(x)
    d = len(x)
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if cap < d:
        raise ValueError(f"cap must be at least d={d}, got {cap}")
    total = 0
    for n in range(d, cap + 1):
        for nu in _compositions(n, d):
            count = count_smirnov(nu)
            if count:
                total = total + count * _product_volume(nu, x, measure)
    return total


def _compositions(n: int, d: int):
    """Vectors of d positive integers summing to n, lexicographic."""
    for cuts in itertools.combinations(range(1, n), d - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def multinomial(q: Sequence[int]) -> int:
    out = math.factorial(sum(q))
    for v in q:
        out //= math.factorial(v)
    return out


def count_lattice_paths(q: Sequence[int]) -> int:
    """Monotone unit-step paths from 0 to q, by dynamic programming over the grid."""
    q = tuple(int(v) for v in q)
    if any(v < 0 for v in q):
        raise ValueError(f"target must be non-negative, got {q}")
    ways: dict[tuple[int, ...], int] = {}
    for point in itertools.product(*(range(v + 1) for v in q)):
        if not any(point):
            ways[point] = 1
            continue
        total = 0
        for i, c in enumerate(point):
            if c:
                total += ways[point[:i] + (c - 1,) + point[i + 1 :]]
        ways[point] = total
    return ways[q]


def lattice_points_in_pattern(p: PatternPolytope) -> int:
    """Number of lattice paths with pattern ``p.word``: prod C(q_i - 1, nu_i - 1)."""
    q = p.target
    for v in q:
        if int(v) != v or v < 1:
            raise ValueError(f"lattice counting needs positive integer targets, got {q}")
    if p.degenerate:
        return 0
    out = 1
    for v, n in zip(q, p.nu):
        if v < n:
            return 0
        out *= math.comb(int(v) - 1, n - 1)
    return out


def _positive_tuples(n: int, budget: int):
    """All n-tuples of positive integers with sum <= budget, lexicographic."""
    if n == 0:
        yield ()
        return
    for first in range(1, budget - n + 2):
        for rest in _positive_tuples(n - 1, budget - first):
            yield (first,) + rest


def brute_force_pattern_points(word: Sequence[int], q: Sequence[int]) -> int:
    """Count positive integer step vectors a with sum of a_k e_{c_k} equal to q, exhaustively."""
    d = len(q)
    count = 0
    for steps in _positive_tuples(len(word), sum(q)):
        reached = [0] * d
        for c, a in zip(word, steps):
            reached[c - 1] += a
        if tuple(reached) == tuple(q):
            count += 1
    return count


def brute_force_simplex_points(n: int, x: int, variant: str) -> int:
    """Integer points a_1..a_n >= 1 with sum <= x (upper), < x (lower) or == x (two_sided)."""
    if variant not in ("upper", "lower", "two_sided"):
        raise ValueError(f"unknown variant {variant!r}")
    count = 0
    for a in _positive_tuples(n, x):
        s = sum(a)
        if variant == "upper" or (variant == "lower" and s < x) or (variant == "two_sided" and s == x):
            count += 1
    return count


def discrete_recovery_sum(q: Sequence[int]) -> int:
    """Sum over frequency vectors nu <= q of count(nu) * prod C(q_i - 1, nu_i - 1).

    Groups all lattice paths to q by their pattern; equals the multinomial.
    """
    q = tuple(int(v) for v in q)
    if any(v < 1 for v in q):
        raise ValueError(f"discrete recovery needs every q_i >= 1, got {q}")
    f = expand_smirnov_gf(len(q), sum(q))
    total = 0
    for nu in itertools.product(*(range(1, v + 1) for v in q)):
        count = f[nu]
        if count:
            total += int(count) * math.prod(math.comb(v - 1, n - 1) for v, n in zip(q, nu))
    return total
