import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cskit.io import read_set_file
from cskit.verify import ComplementarySet

GOLDEN_DIR = Path(__file__).parent.parent / "src" / "cskit" / "data" / "golden"
SEED_DIR = Path(__file__).parent.parent / "src" / "cskit" / "data" / "seeds"


def load_golden(name: str) -> ComplementarySet:
    cs, _ = read_set_file(GOLDEN_DIR / name)
    return cs


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture(scope="session")
def seed_dir() -> Path:
    return SEED_DIR
