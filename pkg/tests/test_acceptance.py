"""Acceptance gate: one test per criterion, exact (no tolerances).

Each test prints a PASS/FAIL line so a `pytest -s` (or the CLI `verify`)
run shows the per-criterion outcome at a glance.
"""

import pytest

from groupgraphs import verify

CRITERIA = [
    (1, "trichotomy"),
    (2, "virt-diameter"),
    (3, "independence"),
    (4, "tarski"),
    (5, "soluble-generating"),
    (6, "criterion-equivalence"),
    (7, "census"),
    (8, "generator-spans"),
    (9, "product-paths"),
    (10, "engine"),
]


@pytest.mark.parametrize("number,name", CRITERIA,
                         ids=[f"criterion-{n:02d}-{s}" for n, s in CRITERIA])
def test_criterion(number, name):
    result = verify.SUITES[name]()
    state = "PASS" if result["passed"] else "FAIL"
    print(f"{state} criterion {number}: {name} -- {result['criterion']}")
    assert result["passed"], result["details"]


def test_run_all_aggregates():
    report = verify.run("criterion-equivalence")
    assert report["passed"] and report["schema_version"] == 1
    with pytest.raises(KeyError):
        verify.run("no-such-suite")
