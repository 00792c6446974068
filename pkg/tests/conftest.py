from pathlib import Path

import pytest

from bywords import build_matrix, load_rules, mark_structure
from bywords.cli import bundled

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def sample_rules():
    return load_rules(bundled("beowulf.rules"))


@pytest.fixture(scope="session")
def sample_text() -> str:
    return bundled("beowulf.txt").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def sample_records(sample_text, sample_rules):
    stream = mark_structure(sample_text, sample_rules)
    return build_matrix(stream, terminal=sample_rules.keep_terminal)
