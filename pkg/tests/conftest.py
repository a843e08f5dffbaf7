import pytest

import partita


@pytest.fixture(scope="session")
def p_series_long():
    """One shared P series, long enough for every test that reads it."""
    s = partita.PartitionSeries()
    s.ensure(5000)
    return s


@pytest.fixture(scope="session")
def q_series_long():
    s = partita.DistinctSeries()
    s.ensure(5000)
    return s


@pytest.fixture(scope="session")
def p_rows_300():
    """p_row(n) for n = 1..300, built once and shared."""
    return {n: partita.p_row(n) for n in range(1, 301)}
