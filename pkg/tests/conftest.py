from pathlib import Path

import pytest

from sodium_scout import presets
from sodium_scout.catalog import generate_synthetic_catalog, load_catalog

DATA_DIR = Path(__file__).parent / "data"
FIXTURE_CATALOG = DATA_DIR / "fixture_catalog.jsonl"


@pytest.fixture(scope="session")
def seed7_catalog():
    """The pinned 10-restaurant, 200-item synthetic catalog."""
    return generate_synthetic_catalog(
        7, 10, 20, presets.LA_BASIN_BBOX, hours_tz=presets.PACIFIC_FIXED
    )


@pytest.fixture()
def fixture_catalog():
    return load_catalog(FIXTURE_CATALOG, hours_tz=presets.PACIFIC_FIXED)


@pytest.fixture()
def fixture_catalog_bytes():
    return FIXTURE_CATALOG.read_bytes()
