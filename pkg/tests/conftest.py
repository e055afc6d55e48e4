from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path

import pytest

from dfmc.render import RenderOptions

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = DATA_DIR / "golden"

# Every byte-compared output in the suite pins the same generation metadata.
PINNED_OPTS = RenderOptions(
    timestamp=datetime(2025, 1, 15, 12, 0, 0, tzinfo=timezone.utc),
    generator_version="0.1.0",
)


@pytest.fixture
def pinned_opts() -> RenderOptions:
    return PINNED_OPTS


@pytest.fixture(scope="session")
def vocabulary_fixture() -> dict:
    """Hand-maintained transcription of the published term lists.

    Deliberately duplicated from the registry definitions so a slip in
    either place fails the fidelity tests.
    """
    return json.loads((DATA_DIR / "vocabulary_fixture.json").read_text(encoding="utf-8"))
