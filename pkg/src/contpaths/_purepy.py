"""Pure-Python versions of the hot loops in :mod:`contpaths._speedups`.

Both modules expose the same functions and must produce bit-identical
floating results; the arithmetic below follows the Cython source operation
for operation.
"""
import math


def scaled_bessel_sum(order, q, tol, max_terms):
    """Sum q**m / (m! (m+order)!) over m >= 0.

    Returns ``(total, next_term, next_ratio, terms_used, converged)`` where
    ``next_term`` is the first omitted term and ``next_ratio`` bounds the
    ratio of every later pair of consecutive terms.
    """
    term = 1.0 / math.factorial(order)
    total = 0.0
    m = 0
    while m < max_terms:
        total += term
        m += 1
        term = term * q / (m * (m + order))
        ratio = q / ((m + 1) * (m + 1 + order))
        limit = tol * abs(total) if total != 0.0 else tol
        if term <= limit and ratio < 1.0:
            return total, term, ratio, m, True
    return total, term, 1.0, m, False


def smirnov_tally(d, n):
    """Brute-force count of words with no equal adjacent letters, by frequency.

    Walks all d**n words over letters 0..d-1 in lexicographic order and keeps
    those without a repeated neighbour.
    """
    tally = {}
    if n == 0:
        tally[(0,) * d] = 1
        return tally
    word = [0] * n
    while True:
        ok = True
        for i in range(1, n):
            if word[i] == word[i - 1]:
                ok = False
                break
        if ok:
            freq = [0] * d
            for letter in word:
                freq[letter] += 1
            key = tuple(freq)
            tally[key] = tally.get(key, 0) + 1
        pos = n - 1
        while pos >= 0 and word[pos] == d - 1:
            word[pos] = 0
            pos -= 1
        if pos < 0:
            return tally
        word[pos] += 1


def eval_bands(exps, coefs, point, cap):
    """Per-degree sums of coef * prod(point**exp) for a sparse coefficient table."""
    bands = [0.0] * (cap + 1)
    nterms = len(coefs)
    d = len(point)
    for t in range(nterms):
        term = float(coefs[t])
        deg = 0
        for j in range(d):
            e = int(exps[t][j])
            if e:
                term *= float(point[j]) ** e
                deg += e
        bands[deg] += term
    return bands
