import pytest

from utvpi import _kernels


@pytest.fixture(params=["pure", "compiled"])
def impl(request):
    """Run a test under each kernel implementation that is available."""
    name = request.param
    if name not in _kernels.available():
        pytest.skip("compiled kernels not built")
    previous = _kernels.use(name)
    yield name
    _kernels.use(previous)
