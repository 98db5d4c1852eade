import pytest

from pentaverify.partitions import build_overp_table, build_p_table, build_pod_table


@pytest.fixture(scope="session")
def p_table():
    return build_p_table(600)


@pytest.fixture(scope="session")
def overp_table():
    return build_overp_table(600)


@pytest.fixture(scope="session")
def pod_table():
    return build_pod_table(600)
