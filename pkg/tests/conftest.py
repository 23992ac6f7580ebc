from __future__ import annotations

import pytest

from rankops import from_tiers


@pytest.fixture
def two_tied_top():
    """Two alternatives sharing the top tier, one below: {x, y} > {z}."""
    return from_tiers([{"x", "y"}, {"z"}])


@pytest.fixture
def four_tier_ten():
    """Ten alternatives in four tiers of sizes 1, 2, 4, 3."""
    return from_tiers(
        [
            {"x3"},
            {"x6", "x8"},
            {"x1", "x4", "x7", "x10"},
            {"x2", "x5", "x9"},
        ]
    )
