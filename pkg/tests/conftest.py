import pathlib

import pytest

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture
def table1_path():
    return str(DATA / "table1.csv")


@pytest.fixture
def table2_path():
    return str(DATA / "table2.csv")
