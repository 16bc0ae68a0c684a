import time
from contextlib import contextmanager

import pytest

from geoforge.numerics import PrecisionContext


@pytest.fixture
def ctx():
    return PrecisionContext(128)


@contextmanager
def budget(seconds, label):
    """Assert the block finishes inside the stated runtime budget."""
    t0 = time.monotonic()
    yield
    elapsed = time.monotonic() - t0
    print(f"{label}: {elapsed:.2f} s (budget {seconds} s)")
    assert elapsed < seconds, f"{label} exceeded budget: {elapsed:.1f} s >= {seconds} s"
