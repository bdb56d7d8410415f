"""Acceptance gate: every numbered criterion runs at its stated tolerance
(all tolerances are exact equalities plus wall-clock limits) and prints
one pass/fail line."""

import random

import pytest

from reptheory import selftest


@pytest.mark.parametrize("number,title,fn",
                         selftest.CRITERIA,
                         ids=[f"criterion_{n:02d}" for n, _, _ in selftest.CRITERIA])
def test_criterion(number, title, fn, capsys):
    rng = random.Random(number)
    try:
        detail = fn(rng)
    except AssertionError as exc:
        with capsys.disabled():
            print(f"[FAIL] criterion {number:2d}: {title} -- {exc}")
        raise
    with capsys.disabled():
        print(f"[PASS] criterion {number:2d}: {title} ({detail})")
