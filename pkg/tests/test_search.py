import json
import random

import pytest

import oracles
from sifre.search import search_extensions, search_gluings
from sifre.semigroup import NumericalSemigroup

Q = (9, 13, 14, 17, 18, 19, 21, 22, 23, 26, 27, 31)


@pytest.fixture(scope="module")
def worked():
    return search_gluings(NumericalSemigroup([31, 37, 41]), NumericalSemigroup([4, 5]))


def test_worked_gluing_search(worked):
    expected = {(109, b) for b in Q} | {(150, b) for b in (13, 17, 19, 23, 31)}
    assert set(worked.sifre) == expected
    assert {(355, b) for b in Q} <= set(worked.unique_only)
    assert worked.admissible_a == (109, 150)
    assert worked.admissible_b == Q
    assert worked.window.a_max == 478 and worked.window.b_max == 31
    assert not worked.no_sifre_gluing_certified


def test_verdicts_recorded(worked):
    full, up = worked.verdicts[(109, 19)]
    assert full.holds and up.holds
    full, up = worked.verdicts[(355, 9)]
    assert up.holds and not full.holds


@pytest.mark.parametrize("gens", [[6, 7, 10], [8, 9, 11]])
def test_no_admissible_a(gens):
    r = search_gluings(NumericalSemigroup(gens))
    assert r.s1_sifre.holds
    assert r.admissible_a == ()
    assert r.no_sifre_gluing_certified
    assert r.to_json()["no_sifre_gluing_certified"] is True


def test_extension_search_examples():
    r = search_extensions(NumericalSemigroup([31, 37, 41]))
    assert r.m_values == [109, 150]
    assert r.window == 478
    assert [h.u for h in r.hits] == [(1, 1, 1), (1, 1, 2)]
    assert search_extensions(NumericalSemigroup([7, 9, 10])).m_values == []
    data = r.to_json()
    assert data["hits"][0]["ell"] == "any l >= 2 with gcd(l, 109) = 1"


def test_json_is_deterministic(worked):
    again = search_gluings(NumericalSemigroup([41, 31, 37]), NumericalSemigroup([5, 4]))
    assert json.dumps(worked.to_json(), sort_keys=True) == json.dumps(again.to_json(), sort_keys=True)


def _instances(count, seed):
    rng = random.Random(seed)
    return [oracles.random_numerical(rng, 2, 3, 3, 12) for _ in range(count)]


@pytest.mark.parametrize("gens", _instances(10, 7))
def test_extension_window_complete(gens):
    S = NumericalSemigroup(gens)
    base = search_extensions(S)
    wider = search_extensions(S, base.window + 50)
    assert wider.m_values == base.m_values


@pytest.mark.parametrize("gens", _instances(10, 11))
def test_gluing_window_complete(gens):
    s1, s2 = NumericalSemigroup(gens), NumericalSemigroup([2, 3])
    base = search_gluings(s1, s2)
    wider = search_gluings(s1, s2, base.window.a_max + 50, base.window.b_max + 50)
    assert wider.sifre == base.sifre
    assert wider.unique_only == base.unique_only
