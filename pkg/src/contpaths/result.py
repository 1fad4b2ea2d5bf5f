"""Floating results that carry a truncation-error bound."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EvalResult:
    """A floating value with a bound on what the truncated sum left out.

    ``tail_bound`` is rigorous for Bessel sums and a heuristic estimate for
    multivariate series evaluation; ``notes`` collects diagnostics such as
    a truncation cap that is too small to contribute any term.
    """

    value: float
    tail_bound: float
    terms_used: int
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.tail_bound >= 0:
            raise ValueError(f"tail_bound must be non-negative, got {self.tail_bound}")
        if self.terms_used < 1:
            raise ValueError(f"terms_used must be positive, got {self.terms_used}")

    def __float__(self):
        return float(self.value)
