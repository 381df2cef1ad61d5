"""Derived invariants: thresholds, saturation defects, bounds."""

import pytest

from freecurve.errors import NotReducedError
from freecurve.fields import FieldPlan
from freecurve.invariants import (
    compute_bundle,
    defect,
    delta_dim,
    dpw_bounds,
    n_dim,
    n_dim_saturation_oracle,
    smooth_reference,
    thresholds,
    tjurina,
    validate_bundle,
)
from freecurve.parser import parse_poly
from freecurve.syzygy import mdr

from oracles import smooth_series_oracle

TRIANGLE = parse_poly("x*y*z")
CUSP = parse_poly("x^3-y^2*z")
FERMAT3 = parse_poly("x^3+y^3+z^3")


def test_smooth_reference_tables():
    assert [smooth_reference(3, k) for k in range(4)] == [1, 3, 3, 1]
    assert [smooth_reference(4, k) for k in range(7)] == [1, 3, 6, 7, 6, 3, 1]
    assert smooth_reference(12, 0) == 1


def test_smooth_reference_against_series_expansion():
    for d in range(2, 9):
        T = 3 * (d - 2)
        assert [smooth_reference(d, k) for k in range(T + 1)] == smooth_series_oracle(d, T)


def test_smooth_reference_support_and_symmetry():
    for d in (3, 5, 8, 12):
        T = 3 * (d - 2)
        assert smooth_reference(d, -1) == 0
        assert smooth_reference(d, T + 1) == 0
        for k in range(T + 1):
            assert smooth_reference(d, k) == smooth_reference(d, T - k)


@pytest.mark.parametrize(
    "expr,tau",
    [("x*y*z", 3), ("x^3-y^2*z", 2), ("x^3+y^3+z^3", 0), ("x*y*z*(x+y+z)", 6)],
)
def test_tjurina_small(expr, tau):
    assert tjurina(parse_poly(expr)) == tau


def test_tjurina_paper_arrangements():
    plan = FieldPlan.primes(0)
    assert tjurina(parse_poly("x*y*z*(x^9-y^9)"), plan) == 111
    assert tjurina(parse_poly("x*y*z*(x+y+z)*(x^8-y^8)"), plan) == 103


def test_tjurina_rejects_nonreduced():
    with pytest.raises(NotReducedError):
        tjurina(parse_poly("x^2*y"))


@pytest.mark.parametrize(
    "expr,ct,st",
    [
        ("x*y*z", 2, 1),
        ("x^3-y^2*z", 2, 3),
        ("x^3+y^3+z^3", None, 4),
    ],
)
def test_thresholds_examples(expr, ct, st):
    f = parse_poly(expr)
    tau = tjurina(f)
    assert thresholds(f, tau) == (ct, st)


def test_threshold_sums():
    # T = 3, free: ct+st = T; nearly free: T+2
    assert 2 + 1 == 3
    f = CUSP
    ct, st = thresholds(f, tjurina(f))
    assert ct + st == 3 + 2


@pytest.mark.parametrize(
    "f,table",
    [
        (CUSP, [0, 1, 1, 0]),
        (TRIANGLE, [0, 0, 0, 0]),
    ],
)
def test_n_dim_tables(f, table):
    tau = tjurina(f)
    T = 3 * (f.degree - 2)
    assert [n_dim(f, j, tau) for j in range(T + 1)] == table
    # zero outside the supported range
    assert n_dim(f, -1, tau) == 0
    assert n_dim(f, T + 1, tau) == 0


@pytest.mark.parametrize(
    "f,j,expected",
    [(CUSP, 1, 1), (CUSP, 2, 1), (TRIANGLE, 0, 0), (TRIANGLE, 2, 0), (TRIANGLE, 3, 0)],
)
def test_saturation_oracle_examples(f, j, expected):
    assert n_dim_saturation_oracle(f, j) == expected


def test_formula_equals_oracle_on_small_curves():
    for expr in ("x*y*z", "x^3-y^2*z", "x^3+y^3+z^3", "x*y*z*(x+y+z)", "x^3+x^2*z-y^2*z"):
        f = parse_poly(expr)
        tau = tjurina(f)
        T = 3 * (f.degree - 2)
        for j in range(T + 1):
            assert n_dim(f, j, tau) == n_dim_saturation_oracle(f, j), (expr, j)


def test_delta_examples():
    assert delta_dim(TRIANGLE, 1, 1) == 1
    assert delta_dim(CUSP, 1, 1) == 0
    assert delta_dim(CUSP, 2, 1) == 2


def test_delta_vanishes_below_gap():
    for f in (TRIANGLE, CUSP, parse_poly("x*y*z*(x+y+z)")):
        r = mdr(f)
        d = f.degree
        for k in range(0, d - r - 1):
            assert delta_dim(f, k, r) == 0


def test_dpw_bounds_degree_12_table():
    assert dpw_bounds(12, 1) == (110, 111)
    assert dpw_bounds(12, 2) == (99, 103)
    assert dpw_bounds(12, 3) == (88, 97)
    assert dpw_bounds(12, 4) == (77, 93)
    # r = d/2 cap
    assert dpw_bounds(12, 6) == (55, 90)
    assert dpw_bounds(4, 2) == (3, 6)
    assert dpw_bounds(3, 1) == (2, 3)


def test_defect_examples():
    assert defect(3, 1, 2) == 1  # cusp
    assert defect(3, 1, 3) == 0  # triangle
    assert defect(12, 1, 111) == 0
    # uncapped at r = d/2: a nearly free curve with d = 2r has defect 1
    assert defect(4, 2, 6) == 1


def test_bundle_validates_on_small_curves():
    for expr in ("x*y*z", "x^3-y^2*z", "x^3+y^3+z^3", "x*y*z*(x+y+z)", "x^3+x^2*z-y^2*z"):
        f = parse_poly(expr)
        bundle = compute_bundle(f)
        validate_bundle(bundle)
        assert bundle.T == 3 * (f.degree - 2)
        assert len(bundle.ar.values) == 2 * f.degree + 1


def test_bundle_table_max_override():
    bundle = compute_bundle(TRIANGLE, table_max=4)
    assert len(bundle.ar.values) == 5
    assert len(bundle.m.values) == 5


def test_ct_equality_below_koszul_degree():
    # ct = r + d - 2 whenever r < d - 1
    for expr in ("x*y*z", "x^3-y^2*z", "x*y*z*(x+y+z)", "x*y*(x+y)*(x^2+y^2+z^2)"):
        f = parse_poly(expr)
        r = mdr(f)
        assert r < f.degree - 1
        ct, _ = thresholds(f, tjurina(f))
        assert ct == r + f.degree - 2
