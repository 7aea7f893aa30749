from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parents[1]


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return REPO / "src" / "azobra" / "data"


@pytest.fixture(scope="session")
def goldens_dir() -> Path:
    return REPO / "goldens"
