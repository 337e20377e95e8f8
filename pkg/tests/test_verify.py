import pytest

from tokenpowers.verify import SUITES, SuiteResult, default_suite, random_exchange_cases
from tokenpowers.exchanges import induced_diamonds


def test_suite_result_info_does_not_fail():
    r = SuiteResult("x")
    r.add("a", True)
    r.add("b", None, note="info")
    assert r.passed
    r.add("c", False)
    assert not r.passed and r.to_dict()["checks"][2]["name"] == "c"


@pytest.mark.parametrize("name", SUITES)
def test_default_suites_pass(name):
    res = default_suite(name)
    assert res.checks
    assert res.passed, [c for c in res.checks if c["passed"] is False]


def test_random_exchange_cases_are_seeded_and_in_range():
    a, b = random_exchange_cases(5, 3), random_exchange_cases(5, 3)
    assert [g.edges for _, g, _ in a] == [g.edges for _, g, _ in b]
    for _, G, n in a:
        assert n >= 3 and G.n_vertices >= n + 3 and not induced_diamonds(G)


def test_unknown_suite():
    with pytest.raises(KeyError):
        default_suite("nope")


def test_complement_suite_reports_sp_claim():
    res = default_suite("complement")
    claims = [c for c in res.checks if "claim" in c["name"]]
    assert claims and all(c["passed"] is None for c in claims)
    assert any(c["status"] == "refuted" for c in claims)
