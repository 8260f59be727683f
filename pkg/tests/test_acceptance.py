"""The nine acceptance criteria, each at exact equality.

Run with ``pytest -s tests/test_acceptance.py`` (or ``-v``) to see one
PASS/FAIL line per criterion.
"""
import random

import pytest

from lbseries.checks import ACCEPTANCE, CheckFailed

ORDER = 5
SEED = 2024


@pytest.mark.parametrize("number", sorted(ACCEPTANCE))
def test_criterion(number, capsys):
    name, check = ACCEPTANCE[number]
    try:
        check(ORDER, random.Random(SEED + number))
        status, detail = "PASS", ""
    except CheckFailed as exc:
        status, detail = "FAIL", f": {exc}"
    with capsys.disabled():
        print(f"\ncriterion {number} [{name}]: {status}{detail}")
    assert status == "PASS", detail
