"""The acceptance gate: one exact pass/fail line per criterion."""

import pytest

from specht import acceptance

NAMES = list(acceptance.CRITERIA)


@pytest.fixture(scope="module")
def results():
    return {}


@pytest.mark.parametrize("name", NAMES)
def test_criterion(name, results, capsys):
    res = acceptance.run_one(name)
    results[name] = res
    with capsys.disabled():
        print("\n" + res.line())
        for note in res.notes:
            print(f"    {note}")
    assert res.ok, res.failures[:5]
    assert res.checked > 0


def test_all_criteria_reported(results):
    assert sorted(r.number for r in results.values()) == list(range(1, 11))
