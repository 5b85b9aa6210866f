import pytest

import mrgeom as M


@pytest.fixture(scope="session")
def entries():
    return {e.name: e for e in M.all_entries()}


@pytest.fixture(scope="session")
def geometries(entries):
    return {name: e.geometry for name, e in entries.items()}
