"""The nine acceptance criteria, one test (and one printed verdict line) each."""

import pytest

from altchar.acceptance import ALL_CRITERIA, run_criterion


@pytest.mark.parametrize("number", ALL_CRITERIA)
def test_criterion(number, capfd):
    result = run_criterion(number)
    with capfd.disabled():
        print(result.line(timing=True))
    assert result.ok, result.line(timing=True)
