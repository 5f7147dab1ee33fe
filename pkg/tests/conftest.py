import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--bless",
        action="store_true",
        default=False,
        help="rewrite golden files under tests/golden/ from current CLI output",
    )


@pytest.fixture
def bless(request):
    return request.config.getoption("--bless")
