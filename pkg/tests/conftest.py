import pytest

from quinticlab import random_instance


@pytest.fixture
def seeded_roots():
    """A fixed generic (non-degenerate) instance used across modules."""
    return random_instance(1234, 0)


def rel_err(x, y) -> float:
    """|x - y| relative to max(1, |y|)."""
    return abs(x - y) / max(1.0, abs(y))
