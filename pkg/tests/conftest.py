from __future__ import annotations

import pytest

from semiflat.catalog import (bool_semiring, sat_semiring, zmod_semiring,
                              semiring_module, zmod_module)


@pytest.fixture(scope="session")
def B():
    return bool_semiring()


@pytest.fixture(scope="session")
def S3():
    return sat_semiring(3)


@pytest.fixture(scope="session")
def Z4():
    return zmod_semiring(4)


@pytest.fixture(scope="session")
def Bm(B):
    return semiring_module(B)


@pytest.fixture(scope="session")
def S3m(S3):
    return semiring_module(S3)


@pytest.fixture(scope="session")
def Z4m(Z4):
    return semiring_module(Z4)


@pytest.fixture(scope="session")
def Z2(Z4):
    return zmod_module(4, 2)
