"""Shared fixtures: the expensive tables are computed once per session."""

import pytest

from groundbound.graphs import Family, family_bound
from groundbound.pairs import PairKind, global_bound, search

FULL_KMAX = 10**7


@pytest.fixture(scope="session")
def g1_table():
    return family_bound(Family.G1)


@pytest.fixture(scope="session")
def g2_table():
    return family_bound(Family.G2)


@pytest.fixture(scope="session")
def g3_table():
    return family_bound(Family.G3)


@pytest.fixture(scope="session")
def g4_table():
    return family_bound(Family.G4, range(2, 7))


@pytest.fixture(scope="session")
def gamma5_search():
    return search(PairKind.GAMMA5, k_max=FULL_KMAX)


@pytest.fixture(scope="session")
def gamma4_search():
    return search(PairKind.GAMMA4, k_max=FULL_KMAX)


@pytest.fixture(scope="session")
def gamma5_global():
    return global_bound(PairKind.GAMMA5, k_max=FULL_KMAX)


@pytest.fixture(scope="session")
def gamma4_global():
    return global_bound(PairKind.GAMMA4, k_max=FULL_KMAX)
