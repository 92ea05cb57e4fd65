import pytest

from tabkey import _pykernels, kernels


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="run the size-7 enumeration sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


BACKENDS = [_pykernels] + ([kernels.compiled_backend] if kernels.compiled_backend else [])


@pytest.fixture(params=BACKENDS, ids=lambda b: b.BACKEND)
def backend(request):
    return request.param
