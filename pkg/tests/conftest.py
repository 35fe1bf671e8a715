import numpy as np
import pytest

from avalanche import fixtures
from avalanche.construct import function_of, parse_blocks
from avalanche.core import BooleanFunction


def all_functions(n):
    size = 1 << n
    for x in range(1 << size):
        yield BooleanFunction(n, [(x >> (size - 1 - i)) & 1 for i in range(size)])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def example1():
    return function_of(parse_blocks(fixtures.EXAMPLE1_BLOCKS))


@pytest.fixture(scope="session")
def example2():
    return function_of(parse_blocks(fixtures.EXAMPLE2_BLOCKS))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(RESULTS):
        ok, detail = RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
