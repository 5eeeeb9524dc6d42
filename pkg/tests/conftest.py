import pytest

from monogrid._kernels import available_backends
from monogrid.config import Budget, RunConfig


@pytest.fixture(scope="session")
def config():
    return RunConfig(threads=2)


@pytest.fixture(scope="session")
def serial_config():
    return RunConfig(threads=1)


@pytest.fixture(params=available_backends())
def backend_config(request):
    return RunConfig(threads=1, backend=request.param)


@pytest.fixture
def tight_node_budget():
    return RunConfig(threads=1, budget=Budget(max_nodes=50))
