import os
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def golden_dir() -> Path:
    return Path(os.environ.get("WEINGARTEN_GOLDEN_DIR", Path(__file__).parent / "golden"))


def check_golden(name: str, text: str):
    """Compare against ``golden/<name>``; WEINGARTEN_UPDATE_GOLDEN=1 rewrites it."""
    path = golden_dir() / name
    if os.environ.get("WEINGARTEN_UPDATE_GOLDEN") == "1" or not path.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    assert path.read_text() == text, f"golden file {path} differs"


@pytest.fixture
def golden():
    return check_golden


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
