import pytest

from congruence_lab import con_lattice, congruence_from_blocks
from congruence_lab.builders import ring_zn


def theta(alg, d):
    """The mod-d congruence of ring_zn(n)."""
    return congruence_from_blocks(alg, [x % d for x in range(alg.size)])


@pytest.fixture(scope="session")
def z6():
    return ring_zn(6)


@pytest.fixture(scope="session")
def z12():
    return ring_zn(12)


@pytest.fixture(scope="session")
def z4():
    return ring_zn(4)


def congruences_of(alg):
    return con_lattice(alg).congruences
