from pathlib import Path

import pytest

from dpdetect import parse_model

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def sample_system_path():
    return FIXTURES / "sample_system.cg"


@pytest.fixture(scope="session")
def sample_system_text(sample_system_path):
    return sample_system_path.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def sample_system(sample_system_text):
    return parse_model(sample_system_text)


@pytest.fixture(scope="session")
def sample_system_alt():
    return parse_model((FIXTURES / "sample_system_alt.cg").read_text(encoding="utf-8"))
