import pytest

from alcovepath.chains import lex_lambda_chain
from alcovepath.rootsys import Root, RootSystem


@pytest.fixture(scope="session")
def a2():
    return RootSystem("A", 2)


@pytest.fixture(scope="session")
def a2_roots(a2):
    """a12, a23, a13 as roots of A2."""
    return a2.root_from_coords((1, 0)), a2.root_from_coords((0, 1)), a2.root_from_coords((1, 1))


@pytest.fixture(scope="session")
def ex_chain(a2):
    # (a12, a13, a23, a13, a12, a13, a23, a13) for lambda = 2w1 + 2w2
    return lex_lambda_chain(a2, (2, 2), order=(1, 0))


@pytest.fixture(scope="session")
def omega1_chain(a2):
    return lex_lambda_chain(a2, (1, 0))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
