"""Acceptance gate: every headline criterion at its stated tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion; `foldspec selftest` prints the same results.
"""

from __future__ import annotations

import pytest

from foldspec.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.cid for c in CRITERIA])
def test_criterion(criterion):
    result = criterion.run()
    status = "PASS" if result.ok else "FAIL"
    print(f"[{status}] criterion {criterion.cid}: {criterion.name} -- {result.detail}")
    assert result.ok, f"criterion {criterion.cid} ({criterion.name}): {result.detail}"
