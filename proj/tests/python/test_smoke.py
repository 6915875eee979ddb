"""Smoke tests for the python module."""

import math

import pytest

polybohr = pytest.importorskip("polybohr")


def test_enumeration_and_multinomial():
    assert polybohr.enumerate_degree(2, 3) == [[3, 0], [2, 1], [1, 2], [0, 3]]
    assert polybohr.multinomial([1, 2]) == 3
    assert sum(polybohr.multinomial(a) for a in polybohr.enumerate_degree(3, 4)) == 3**4


def test_radius_constants():
    cert = polybohr.solve_radius("psi", N=1)
    assert abs(cert.midpoint - (math.sqrt(5) - 2)) < 1e-10
    assert cert.width <= 1e-13
    assert abs(polybohr.solve_radius("quartic").midpoint - 0.385795) < 5e-6
    assert abs(polybohr.radius_in_r("sqrt17", n=2) - (math.sqrt(17) - 3) / 8) < 1e-14


def test_extremal_series_matches_closed_form():
    w = polybohr.ExtremalFunction(0.5, "minus", 2)
    f = polybohr.to_series(w, 40)
    value, remainder = f.eval([0.2, 0.2])
    assert abs(value - (0.5 - 0.4) / (1 - 0.5 * 0.4)) <= remainder + 1e-10
    coeffs = polybohr.profile_coefficients(w, 3)
    assert coeffs[0] == 0.5
    assert coeffs[1] == pytest.approx(-0.75)


def test_functional_paths_agree():
    w = polybohr.ExtremalFunction(0.5, "minus", 2)
    f = polybohr.to_series(w, 50)
    ctx = polybohr.EvalContext.diagonal(2, 0.15, -1, 2)
    diag = polybohr.refined_sum_diagonal(f, ctx)
    assert abs(diag.value - 0.75 * 0.3**2 / 0.7) <= diag.truncation_error + 1e-9
    closed = polybohr.functional_value_closed("A1", w, 0.15, -1, 2)
    assert closed.value == pytest.approx(
        (0.5 + 0.3) / (1 + 0.15) + 0.75 * 0.09 / 0.7, rel=1e-12
    )


def test_verification_reports():
    below = polybohr.check_below("2.1a", n=2, N=2, a0=0.0, eps=1e-3)
    assert below.passed
    assert below.margin > 0
    assert len(below.rows) == 11
    sharp = polybohr.check_sharp("2.1a", n=2, N=2, a0=0.0, eps=1e-2)
    assert sharp.passed
    assert sharp.rows[0]["value"] > 1
    assert "2.1a" in polybohr.known_tags()


def test_dump_round_trip():
    f = polybohr.to_series(polybohr.ExtremalFunction(0.0, "minus", 2), 1)
    assert f.dump() == 'alpha,re,im\n"1,0",-1,0\n"0,1",-1,0\n'
