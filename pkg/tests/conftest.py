import pytest

from monlat import cmon_context, ses_context
from monlat.semilattice import (
    bool2,
    chain,
    diamond,
    klein_four,
    pentagon,
    six_lattice,
    trivial,
)


@pytest.fixture(scope="session")
def cmon():
    return cmon_context()


@pytest.fixture(scope="session")
def ses1(cmon):
    return ses_context(cmon)


@pytest.fixture(scope="session")
def N5():
    return pentagon()


@pytest.fixture(scope="session")
def M3():
    return diamond()


@pytest.fixture(scope="session")
def L6():
    return six_lattice()


@pytest.fixture(scope="session")
def V4():
    return klein_four()


@pytest.fixture(scope="session")
def commutative_fixtures():
    """The named commutative fixtures used across the property suites."""
    return {
        "triv": trivial(),
        "chain2": chain(2),
        "chain3": chain(3),
        "chain4": chain(4),
        "bool2": bool2(),
        "N5": pentagon(),
        "M3": diamond(),
        "L6": six_lattice(),
        "V4": klein_four(),
    }


def elem(M, name):
    return M.element(name)


def down(M, *names):
    """Member set of the down-set generated by the named elements (for a
    semilattice this is the principal down-set of their join)."""
    out = {0}
    for x in range(M.size):
        if any(M.op(x, M.element(n)) == M.element(n) for n in names):
            out.add(x)
    return frozenset(out)
