import pytest

from contpaths import kernels

BACKENDS = kernels.available_backends()


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    """Each importable kernel module in turn (pure Python always, Cython when built)."""
    return BACKENDS[request.param]
