"""One test per acceptance criterion; the summary lines are printed at the end of the run."""

import pytest

from freemedial import acceptance

RESULTS = []


@pytest.mark.parametrize("criterion", acceptance.CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion):
    result = criterion()
    RESULTS.append(result)
    print(result.line())
    assert result.passed, result.line()
