import json
from fractions import Fraction

import pytest

import twoside


def test_integers():
    assert twoside.fibonacci(90) == 2880067194370816120
    assert twoside.binomial(52, 5) == 2598960
    assert twoside.divisor_counts(6) == [1, 2, 2, 3, 2, 4]
    assert twoside.partitions(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]


def test_reports():
    r = twoside.sum_identity_check("odd_square", 1000)
    assert r["status"] == "PASS"
    assert r["lhs"] == r["rhs"] == "1000000"
    p = twoside.binom_identity_check("absorption_printed", [3, 1])
    assert p["status"] == "EXPECTED-FAIL"
    assert p["witness"]["params"] == {"n": "3", "k": "1"}


def test_brackets_are_exact():
    lo, hi = twoside.real_power_bracket(2, 3)
    assert isinstance(lo, Fraction)
    assert lo <= Fraction("2.66514414") <= hi
    lo, hi = twoside.riemann_bracket(2, 4)
    assert (lo, hi) == (Fraction(7, 32), Fraction(15, 32))
    lo, hi = twoside.pi_bracket(10)
    assert lo < Fraction(314159265358979, 10**14) < hi
    lo, hi = twoside.jordan_disk_bracket(1, 16)
    assert lo < Fraction(314159, 100000) < hi


def test_geometry_and_games():
    d = twoside.pick_check([(0, 0), (3, 0), (3, 3), (0, 3)])
    assert d == {"area": Fraction(9), "h": 12, "b": 4, "triangles": 18, "pass": True}
    assert twoside.squares_intersection(1, 2) == (Fraction(2, 3), Fraction(2, 3), True)
    assert twoside.mixture_concentration(Fraction(13, 10), Fraction(8, 10), 15, 10) == Fraction(90, 13)
    assert twoside.dice_exact() == Fraction(6, 11)
    assert [twoside.coin_game_exact(n) for n in (1, 2)] == [Fraction(2, 3), Fraction(4, 9)]


def test_errors():
    with pytest.raises(TypeError):
        twoside.real_power_bracket(2.0, 3)
    with pytest.raises(ValueError):
        twoside.fibonacci(0)
    with pytest.raises(ValueError):
        twoside.run_suite("no.such")
    with pytest.raises(ValueError):
        twoside.sum_identity_check("nope", 3)


def test_suites_and_cli():
    ids = twoside.suite_ids()
    assert "alg.sq_sum" in ids and "binom.absorption_printed" in ids
    rows = twoside.run_suite("sum.*", max_n=20)
    assert len(rows) == 11 * 20
    assert all(r["status"] == "PASS" for r in rows)
    code, out, _ = twoside.cli(["check", "sum.triangular", "--max-n", "5", "--format", "json"])
    assert code == 0
    assert json.loads(out)["summary"]["pass"] == 5
    assert twoside.cli(["check", "no.such"])[0] == 2
