import pytest

import radical_lab as rl


@pytest.fixture(scope="session")
def catalog():
    return rl.default_catalog()


@pytest.fixture(scope="session")
def small_modules(catalog):
    """Catalog modules small enough for quadratic/cubic test oracles."""
    return [m for m in catalog.modules if m.size <= 16]


@pytest.fixture(scope="session")
def z4():
    return rl.ring_Zn(4)


@pytest.fixture(scope="session")
def z4_regular(z4):
    return rl.module_regular(z4)


@pytest.fixture(scope="session")
def z6():
    return rl.ring_Zn(6)


@pytest.fixture(scope="session")
def m2z2():
    return rl.ring_matrix(2, rl.ring_Zn(2))


@pytest.fixture(scope="session")
def exx():
    return rl.module_example_exx()
