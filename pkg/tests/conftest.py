import pytest

from chemindex.enumeration import (
    enumerate_alkane_trees,
    enumerate_cyclic_chemical_graphs,
)

# Verdict lines recorded by the acceptance suite; replayed after the run
# so one PASS/FAIL line per criterion is visible even under capture.
ACCEPTANCE_VERDICTS = []


def record_verdict(line):
    ACCEPTANCE_VERDICTS.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_VERDICTS:
            terminalreporter.write_line(line)

# The enumerated families are pure functions of n, so share one copy
# across the whole run; several test modules and the acceptance suite
# all want them.


@pytest.fixture(scope="session")
def octane_trees():
    return enumerate_alkane_trees(8)


@pytest.fixture(scope="session")
def nonane_trees():
    return enumerate_alkane_trees(9)


@pytest.fixture(scope="session")
def decane_trees():
    return enumerate_alkane_trees(10)


@pytest.fixture(scope="session")
def cyclic5():
    return enumerate_cyclic_chemical_graphs(5)


@pytest.fixture(scope="session")
def cyclic6():
    return enumerate_cyclic_chemical_graphs(6)


@pytest.fixture(scope="session")
def cyclic6_complete():
    return enumerate_cyclic_chemical_graphs(6, complete=True)
