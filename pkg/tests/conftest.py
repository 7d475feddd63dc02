import pytest

from strongclique.generators import biclique, cycle, path, petersen, rook
from strongclique.graph import build_graph

# acceptance results recorded by test_acceptance.py, printed at the end of the run
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def paw():
    # triangle a=0, b=1, c=2 with pendant p=3 on a
    return build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


@pytest.fixture
def diamond():
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def named():
    return {
        "C4": cycle(4),
        "C5": cycle(5),
        "P4": path(4),
        "K2,3": biclique(2, 3),
        "rook3": rook(3),
        "petersen": petersen(),
    }


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k[2:])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{key} {'PASS' if ok else 'FAIL'}  {detail}")
