import pytest

from weakhopf import preset


@pytest.fixture(scope="session")
def k():
    return preset("k")


@pytest.fixture(scope="session")
def c2():
    return preset("c2")


@pytest.fixture(scope="session")
def gpd2():
    return preset("gpd2")


@pytest.fixture(scope="session")
def sum_wba():
    return preset("sum")


@pytest.fixture(scope="session")
def z3gf2():
    return preset("z3@gf2")


# Hand-written composition table for the indiscrete 2-object groupoid with
# basis order (e1, e2, f, g), f: 1 -> 2, g: 2 -> 1, and a.b defined exactly
# when source(a) = target(b).  This is the oracle the generated fixture is
# checked against; every missing pair is the zero product.
GPD2_TABLE = {
    ("e1", "e1"): "e1",
    ("e2", "e2"): "e2",
    ("e1", "g"): "g",
    ("g", "e2"): "g",
    ("e2", "f"): "f",
    ("f", "e1"): "f",
    ("f", "g"): "e2",
    ("g", "f"): "e1",
}


@pytest.fixture(scope="session")
def gpd2_table():
    return GPD2_TABLE
