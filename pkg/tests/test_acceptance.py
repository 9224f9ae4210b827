"""The acceptance gate.

run_all() executes once for the whole module; each numbered criterion
then reports through its own test so `pytest -v` shows one line per
criterion, and the printed CriterionResult lines carry the details.
"""

import pytest

from lefschetz.acceptance import CRITERIA, run_all


@pytest.fixture(scope="module")
def results():
    return {r.number: r for r in run_all()}


_IDS = [f"{number:02d}-{name.split(':')[0].replace(' ', '-')}"
        for number, name, _ in CRITERIA]


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA], ids=_IDS)
def test_criterion(results, number):
    res = results[number]
    print(res.line())
    assert res.passed, res.line()


def test_all_fourteen_present(results):
    assert sorted(results) == list(range(1, 15))
