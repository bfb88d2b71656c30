"""Acceptance criteria 1-10, one test each.

Every result line is also echoed in the terminal summary so a plain
``pytest`` run shows the full pass/fail table.
"""
import pytest

from lassokit.acceptance import CRITERIA
from lassokit.corpus import CorpusConfig

RESULTS = []


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_criterion(criterion):
    r = criterion(CorpusConfig())
    RESULTS.append(r)
    print(r.line())
    assert r.ok, "\n".join([r.line()] + r.failures[:10])
