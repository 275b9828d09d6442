import random

import pytest

from gradual.catalog import CATALOG_ENV, load_catalog_algebra


@pytest.fixture(autouse=True)
def bundled_catalog(monkeypatch):
    monkeypatch.delenv(CATALOG_ENV, raising=False)


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def nonabelian2():
    return load_catalog_algebra("nonabelian2")


@pytest.fixture
def sl2():
    return load_catalog_algebra("sl2")


@pytest.fixture
def super_h_eps():
    return load_catalog_algebra("super_h_eps")
