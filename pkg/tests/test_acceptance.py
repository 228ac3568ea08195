"""Acceptance gate: one test per documented criterion, at full scale.

Each test prints its sub-check report (visible with ``pytest -s`` or on
failure) and asserts the criterion outcome.  Criterion 4 contains one
deliberately unmodified sub-check pinned at 3.75 for the three-qubit Dicke
value of <Jx^2> + <Jy^2>; the attainable maximum of that operator is 7/2
(its spectrum is J(J+1) - mu^2 with |mu| >= 1/2 for odd qubit numbers), so
that sub-check fails by construction.  See README for details.
"""

import pytest

from dickekit import selftest


@pytest.mark.parametrize("criterion", selftest.ALL_CRITERIA, ids=lambda fn: fn.__name__)
def test_acceptance(criterion):
    result = criterion()
    print()
    print(selftest.format_report([result], verbose=True))
    assert result.passed, "\n".join(result.failures)
