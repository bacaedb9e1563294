import pytest

from ballotcontrol import Election


@pytest.fixture
def worked_rankings():
    """The four-candidate, three-voter profile used across the docs:
    v1: c1>c2>c3>c4, v2: c1>c3>c2>c4, v3: c4>c3>c2>c1."""
    return ((1, 2, 3, 4), (1, 3, 2, 4), (4, 3, 2, 1))


@pytest.fixture
def worked_election(worked_rankings):
    return Election.from_rankings(worked_rankings)
