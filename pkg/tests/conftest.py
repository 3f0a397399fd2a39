import pytest

from qdouble.parsing import parse
from qdouble.qmatrix import QElement
from qdouble.scalar import QZContext


@pytest.fixture(scope="session")
def ctx2():
    return QZContext(2)


@pytest.fixture(scope="session")
def ctx3():
    return QZContext(3)


@pytest.fixture
def x(ctx2):
    return lambda i, j: QElement.gen(ctx2, i, j)


@pytest.fixture
def P(ctx2):
    """Parse an expression at N = 2."""
    return lambda text: parse(ctx2, text)
