import json
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))


@pytest.fixture
def rng():
    return random.Random(20250825)


def reproducer(payload: dict) -> str:
    """Serialize a failing random case so it can be replayed by hand."""
    return "reproducer: " + json.dumps(payload, sort_keys=True, default=str)
