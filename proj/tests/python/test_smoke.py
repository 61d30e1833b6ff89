import json
import math

import pytest

import polignac as pg


def test_arithmetic():
    assert pg.is_prime(2**127 - 1)
    assert not pg.is_prime(2047)
    assert pg.factorize(2047) == [(23, 1), (89, 1)]
    assert pg.primorial(13) == 30030


def test_census_matches_enumeration():
    for n in range(1, 300):
        for a, b in [(1, 2), (2, 1), (3, -4)]:
            expected = sum(1 for x in range(1, n) if math.gcd(x, n) == 1 and math.gcd(a * x + b, n) == 1)
            assert pg.census_formula(n, a, b) == expected
            assert pg.census_brute(n, a, b) == expected


def test_witnesses():
    w = pg.smallest_witness("mersenne", 82677)
    assert w["x"] == 11
    assert w["values"] == [2047]
    assert pg.smallest_witness("shifted-pair", 6) is None
    assert pg.construct_witness("appendix-a", 66)["x"] == 23
    assert pg.exceptional_set("sophie-germain", 1000) == [2, 3, 4, 5, 6, 15]
    assert pg.mersenne_pi_generalized(1024)["pi"] == 4
    assert pg.max_coprime_subset([3, 7, 15, 31, 63]) == 3


def test_conjecture_harness():
    r = pg.check_conjecture("twin", 4)
    assert (r["x"], r["values"], r["verdict"]) == (5, [5, 7], "holds")
    assert pg.check_conjecture("mersenne", 82677, "plain")["verdict"] == "fails"
    lines = pg.conjecture_jsonl("sophie-germain", 4, 20).splitlines()
    assert len(lines) == 17
    assert json.loads(lines[0])["conjecture"] == "sophie-germain"
    assert len(pg.scan_conjecture("landau", 3, 30, workers=2)) == 28


def test_gaps_and_bounds():
    value, err = pg.hardy_littlewood_constant(1000)
    assert 1.32 < value < 1.33 + err
    assert pg.gap_census(100, 2)["empirical"] == 8
    assert pg.gap_census_csv(100, 2).startswith("k,x_limit,empirical,predicted,ratio\n")
    assert pg.weakened_polignac_check(7, 1000) == (17, 3)
    assert pg.sum_or_difference_check(98, 1000)["sum"] == (19, 79)
    assert pg.mersenne_density_prediction(2**127)["actual"] == 12
    assert pg.lemma4_constant(1) == 27000
    assert pg.phi_over_2omega_scan(1, 10000)["empirical_threshold"] == 30
    assert pg.rosser_schoenfeld_check(10000) == []
    assert any(v[0] == 17 for v in pg.remark10_check(100)["auxiliary_failures"])


def test_errors():
    with pytest.raises(pg.DomainError):
        pg.check_conjecture("twin", 3)
    with pytest.raises(ValueError):
        pg.census_formula(10, 2, 4)
    with pytest.raises(pg.ResourceError):
        pg.gap_census(10**10, 1)
    assert issubclass(pg.ResourceError, pg.Error)
