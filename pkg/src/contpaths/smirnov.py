"""Smirnov words: words with no two equal adjacent letters.

Letters are the integers 1..d.  :func:`count_smirnov` reads counts off the
generating function in :mod:`contpaths.series`; :func:`enumerate_smirnov` and
:func:`brute_force_counts` generate words directly and serve as its oracle.
"""
from __future__ import annotations

import itertools
from typing import Sequence

from . import kernels
from .series import expand_smirnov_gf

__all__ = [
    "DEFAULT_MAX_LENGTH",
    "SmirnovWord",
    "brute_force_counts",
    "count_smirnov",
    "enumerate_smirnov",
    "frequency_vector",
    "is_smirnov",
]

DEFAULT_MAX_LENGTH = 12


class SmirnovWord(tuple):
    """Immutable word over {1..d} with no repeated neighbours.

    >>> SmirnovWord.parse("1213", 3)
    SmirnovWord('1213', d=3)
    """

    def __new__(cls, letters: Sequence[int], d: int):
        letters = tuple(int(c) for c in letters)
        if d < 1:
            raise ValueError(f"alphabet size must be positive, got {d}")
        for c in letters:
            if not 1 <= c <= d:
                raise ValueError(f"letter {c} outside alphabet 1..{d}")
        for a, b in zip(letters, letters[1:]):
            if a == b:
                raise ValueError(f"equal adjacent letters in {letters}")
        self = super().__new__(cls, letters)
        self.d = d
        return self

    @classmethod
    def parse(cls, text: str, d: int | None = None) -> SmirnovWord:
        """Parse digits ("1212") or comma-separated letters ("1,10,2")."""
        text = text.strip()
        if "," in text:
            letters = [int(part) for part in text.split(",") if part.strip()]
        else:
            letters = [int(ch) for ch in text]
        if d is None:
            d = max(letters, default=1)
        return cls(letters, d)

    def __repr__(self):
        return f"SmirnovWord({str(self)!r}, d={self.d})"

    def __str__(self):
        if self.d < 10:
            return "".join(str(c) for c in self)
        return ",".join(str(c) for c in self)

    def __reduce__(self):
        return (SmirnovWord, (tuple(self), self.d))


def is_smirnov(letters: Sequence[int]) -> bool:
    return all(a != b for a, b in zip(letters, letters[1:]))


def enumerate_smirnov(d: int, n: int, limit: int = DEFAULT_MAX_LENGTH) -> list[SmirnovWord]:
    """All Smirnov words of length n over {1..d}, lexicographically ordered."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > limit:
        raise ValueError(f"word length {n} exceeds the enumeration limit {limit}")
    words = []
    # naive generation plus adjacency filter, kept deliberately independent of the series code
    for letters in itertools.product(range(1, d + 1), repeat=n):
        if is_smirnov(letters):
            words.append(SmirnovWord(letters, d))
    return words


def frequency_vector(word: Sequence[int], d: int | None = None) -> tuple[int, ...]:
    """Occurrences of each letter 1..d in ``word``."""
    if d is None:
        d = getattr(word, "d", None)
        if d is None:
            d = max(word, default=0)
    freq = [0] * d
    for c in word:
        freq[c - 1] += 1
    return tuple(freq)


def count_smirnov(nu: Sequence[int]) -> int:
    """Number of Smirnov words whose frequency vector is ``nu``."""
    nu = tuple(int(v) for v in nu)
    if any(v < 0 for v in nu):
        raise ValueError(f"frequencies must be non-negative, got {nu}")
    if not nu:
        raise ValueError("frequency vector must be non-empty")
    # cheap infeasibility screen: some letter repeats too often to be separated
    n = sum(nu)
    if n and 2 * max(nu) > n + 1:
        return 0
    coef = expand_smirnov_gf(len(nu), n)[nu]
    return int(coef)


def brute_force_counts(d: int, n: int, limit: int = DEFAULT_MAX_LENGTH) -> dict[tuple[int, ...], int]:
    """Frequency-vector histogram of all Smirnov words of length n, by exhaustive search."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if not 0 <= n <= limit:
        raise ValueError(f"word length {n} outside [0, {limit}]")
    return kernels.smirnov_tally(d, n)
