"""Both kernel backends must agree bit for bit with each other."""
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contpaths import _purepy, kernels


def test_backend_flag():
    assert kernels.BACKEND in ("python", "cython")
    assert "python" in kernels.available_backends()


@pytest.mark.parametrize("order", [0, 1, 3])
@pytest.mark.parametrize("q", [0.0, 0.25, 1.0, 9.0, 100.0])
def test_bessel_sum_parity(backend, order, q):
    assert backend.scaled_bessel_sum(order, q, 1e-16, 10_000) == _purepy.scaled_bessel_sum(order, q, 1e-16, 10_000)


def test_bessel_sum_reports_non_convergence(backend):
    *_, converged = backend.scaled_bessel_sum(0, 1e8, 1e-16, 20)
    assert not converged


@pytest.mark.parametrize("d,n", [(1, 0), (1, 1), (1, 3), (2, 5), (3, 6), (4, 5)])
def test_smirnov_tally(backend, d, n):
    tally = backend.smirnov_tally(d, n)
    assert sum(tally.values()) == (1 if n == 0 else d * (d - 1) ** (n - 1))
    assert tally == _purepy.smirnov_tally(d, n)


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(0, 3), st.integers(0, 3), st.floats(-5, 5, allow_nan=False)),
        min_size=1,
        max_size=12,
    ),
    st.tuples(st.floats(0, 3), st.floats(0, 3)),
)
def test_eval_bands_parity(terms, point):
    exps = [(a, b) for a, b, _ in terms]
    coefs = [c for _, _, c in terms]
    for backend in kernels.available_backends().values():
        assert backend.eval_bands(exps, coefs, list(point), 6) == _purepy.eval_bands(exps, coefs, list(point), 6)


def test_eval_bands_values(backend):
    bands = backend.eval_bands([(0, 0), (1, 0), (1, 2)], [1.0, 2.0, 0.5], [3.0, 2.0], 3)
    assert bands == [1.0, 6.0, 0.0, 6.0]


def test_pure_python_env_switch(monkeypatch):
    import importlib

    monkeypatch.setenv(kernels.PURE_PYTHON_ENV, "1")
    reloaded = importlib.reload(kernels)
    try:
        assert reloaded.BACKEND == "python"
        assert reloaded.scaled_bessel_sum is _purepy.scaled_bessel_sum
    finally:
        monkeypatch.delenv(kernels.PURE_PYTHON_ENV)
        importlib.reload(kernels)
