"""The ten acceptance criteria, each at exact equality.

One PASS/FAIL line per criterion is printed in the "acceptance criteria"
section at the end of the pytest run; ``extremalkit selftest`` prints the same
lines.
"""

import pytest

from conftest import ACCEPTANCE
from extremalkit.acceptance import CHECKS


@pytest.mark.parametrize("check", CHECKS, ids=[c.__name__.removeprefix("check_") for c in CHECKS])
def test_criterion(check, request):
    result = check()
    request.config.stash[ACCEPTANCE].append((result.number, result.line()))
    assert result.passed, result.detail
