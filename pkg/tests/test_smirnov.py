import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contpaths.smirnov import (
    SmirnovWord,
    brute_force_counts,
    count_smirnov,
    enumerate_smirnov,
    frequency_vector,
    is_smirnov,
)


def test_enumerate_examples():
    assert [str(w) for w in enumerate_smirnov(2, 3)] == ["121", "212"]
    assert enumerate_smirnov(1, 2) == []
    words = enumerate_smirnov(3, 2)
    assert len(words) == 6
    assert [str(w) for w in words] == ["12", "13", "21", "23", "31", "32"]


def test_empty_word():
    assert enumerate_smirnov(3, 0) == [()]
    assert frequency_vector(SmirnovWord((), 3)) == (0, 0, 0)


@pytest.mark.parametrize("d,n", [(2, 5), (3, 4), (4, 3), (1, 1), (5, 2)])
def test_enumeration_size(d, n):
    assert len(enumerate_smirnov(d, n)) == d * (d - 1) ** (n - 1)


def test_enumeration_is_sorted_and_valid():
    words = enumerate_smirnov(3, 5)
    assert words == sorted(words)
    assert all(is_smirnov(w) for w in words)


def test_enumeration_limit():
    with pytest.raises(ValueError):
        enumerate_smirnov(2, 13)
    assert len(enumerate_smirnov(2, 13, limit=13)) == 2


def test_count_examples():
    assert count_smirnov((1, 1)) == 2
    assert count_smirnov((3, 0)) == 0
    assert count_smirnov((2, 2)) == 2
    assert count_smirnov((1, 1, 1)) == 6
    assert count_smirnov((0, 0)) == 1


def test_frequency_vector_examples():
    assert frequency_vector(SmirnovWord.parse("121", 2)) == (2, 1)
    assert frequency_vector(SmirnovWord.parse("1213", 3)) == (2, 1, 1)
    assert frequency_vector((1, 2, 1), 3) == (2, 1, 0)


def test_word_validation():
    with pytest.raises(ValueError):
        SmirnovWord((1, 1), 2)
    with pytest.raises(ValueError):
        SmirnovWord((1, 3), 2)
    assert str(SmirnovWord.parse("1,10,2", 10)) == "1,10,2"


def test_count_matches_brute_force_small():
    for d in (2, 3):
        for n in range(7):
            tally = brute_force_counts(d, n)
            for nu in itertools.product(range(n + 1), repeat=d):
                if sum(nu) == n:
                    assert count_smirnov(nu) == tally.get(nu, 0)


def test_brute_force_against_enumeration():
    for d, n in [(2, 6), (3, 5), (4, 4)]:
        tally = {}
        for w in enumerate_smirnov(d, n):
            nu = frequency_vector(w, d)
            tally[nu] = tally.get(nu, 0) + 1
        assert brute_force_counts(d, n) == tally


@given(st.lists(st.integers(0, 3), min_size=2, max_size=4), st.randoms())
def test_count_symmetric(nu, rnd):
    perm = list(nu)
    rnd.shuffle(perm)
    assert count_smirnov(nu) == count_smirnov(perm)


def test_infeasible_returns_zero():
    assert count_smirnov((4, 2)) == 0
    assert count_smirnov((3, 2)) == 1
