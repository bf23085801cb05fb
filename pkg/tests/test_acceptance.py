"""Full-tier acceptance battery, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
pass/fail lines; the same battery backs ``hatlab suite``.
"""

import pytest

from hatlab.acceptance import ALL_CHECKS


@pytest.mark.parametrize("check", ALL_CHECKS, ids=lambda c: c.__name__)
def test_acceptance_criterion(check):
    result = check(quick=False)
    status = "PASS" if result.passed else "FAIL"
    print(f"\n{status}  criterion {result.cid:2d} {result.name} ({result.seconds:.2f}s): {result.detail}")
    assert result.passed, f"criterion {result.cid} {result.name}: {result.detail}"
