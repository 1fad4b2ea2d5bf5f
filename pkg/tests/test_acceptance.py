"""Exit criteria: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""
import pytest

from contpaths import verify

CRITERIA = [
    (1, "closed-form vs series", "grid {0.25..4}^2, cap 40, rel 1e-10, < 1 s"),
    (2, "spot value (1,1)", "7.7404443 within 1e-6 of the 30-term rational sum"),
    (3, "Borel route vs series", "exact tables, d in {2,3,4}, cap 12"),
    (4, "PDE residual", "exact zero through cap - 2d; numeric rel 1e-6 at step 1e-4"),
    (5, "Todd/KP recovery", "exact binomials and lattice counts, n <= 6, x <= 12, < 10 s"),
    (6, "Smirnov counting", "brute force for |nu| <= 8, d <= 4; totals d(d-1)^(n-1)"),
    (7, "discrete recovery", "recovery sum = DP count = multinomial, d <= 3, |q| <= 10"),
    (8, "measure correction", "ratio prod sqrt(nu_i) to 1e-12 on 100 patterns; segment sqrt 2"),
    (9, "Bernoulli/Todd coefficients", "B_0..B_8 exact; Todd k=4 coefficient -1/720"),
]


@pytest.mark.parametrize("number,name,summary", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, name, summary):
    passed, detail = verify.CHECKS[name](False)
    print(f"\n[{'PASS' if passed else 'FAIL'}] criterion {number}: {name} ({summary}) -> {detail}")
    assert passed, detail


def test_every_check_is_a_criterion():
    assert {c[1] for c in CRITERIA} == set(verify.CHECKS)
