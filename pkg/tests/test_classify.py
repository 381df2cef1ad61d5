"""Classification criteria, the exterior pairing, and structural checks."""

import random

import pytest

from freecurve.classify import (
    FREE,
    NEARLY_FREE,
    NEITHER,
    PENCIL_OF_LINES,
    SMOOTH,
    classify,
    cross_product,
    ctst_test,
    delta_test,
    free_pair,
    nearly_free_generators,
    nearly_free_resolution_dim,
    pairing,
    saito_verify,
    tau_test,
    v_map,
)
from freecurve.errors import InternalInconsistencyError, NotReducedError
from freecurve.fields import QQ, FieldPlan
from freecurve.parser import parse_poly
from freecurve.poly import HomogPoly, partials, poly_str
from freecurve.syzygy import Syzygy, ar_dim, syzygy_basis

TRIANGLE = parse_poly("x*y*z")
CUSP = parse_poly("x^3-y^2*z")


def syz(a, b, c):
    def to_poly(text_or_zero, degree):
        if text_or_zero == "0":
            return HomogPoly.zero(QQ, degree)
        return parse_poly(text_or_zero)

    parts = [p for p in (a, b, c) if p != "0"]
    degree = parse_poly(parts[0]).degree
    return Syzygy(to_poly(a, degree), to_poly(b, degree), to_poly(c, degree))


@pytest.mark.parametrize(
    "d,r,tau,expected",
    [
        (12, 1, 111, FREE),
        (3, 1, 2, NEARLY_FREE),
        (12, 4, 80, NEITHER),
        (12, 4, 93, FREE),
        (12, 4, 92, NEARLY_FREE),
        (4, 2, 6, NEARLY_FREE),  # r = d/2 admits nearly free, never free
        (4, 2, 7, NEITHER),
        (3, 2, 1, NEITHER),
    ],
)
def test_tau_test(d, r, tau, expected):
    assert tau_test(d, r, tau) == expected


def test_ctst_test_trichotomy():
    assert ctst_test(2, 1, 3) == FREE
    assert ctst_test(2, 3, 3) == NEARLY_FREE
    assert ctst_test(3, 3, 3) == NEITHER
    with pytest.raises(InternalInconsistencyError):
        ctst_test(2, 2, 3)  # T + 1 cannot occur
    with pytest.raises(InternalInconsistencyError):
        ctst_test(1, 1, 3)  # below T cannot occur
    with pytest.raises(ValueError):
        ctst_test(None, 4, 3)


def test_delta_test_examples():
    assert delta_test(TRIANGLE, 1) == FREE
    assert delta_test(CUSP, 1) == NEARLY_FREE
    assert delta_test(parse_poly("x^3+x^2*z-y^2*z"), 2) == NEITHER


def test_cross_product_unit_vectors():
    one = HomogPoly(QQ, 0, {(0, 0, 0): __import__("fractions").Fraction(1)})
    zero = HomogPoly.zero(QQ, 0)
    e1, e2 = (one, zero, zero), (zero, one, zero)
    cx = cross_product(e1, e2)
    assert cx[0].is_zero() and cx[1].is_zero() and poly_str(cx[2]) == "1"


def test_cross_product_antisymmetry():
    rho = syz("x", "-y", "0")
    cx = cross_product(rho, rho)
    assert all(c.is_zero() for c in cx)


def test_cross_product_of_triangle_syzygies_is_gradient():
    rho1 = syz("x", "-y", "0")
    rho2 = syz("x", "0", "-z")
    cx = cross_product(rho1, rho2)
    grad = partials(TRIANGLE)
    assert cx[0] == grad.fx and cx[1] == grad.fy and cx[2] == grad.fz


def test_pairing_triangle_is_one():
    rho1 = syz("x", "-y", "0")
    rho2 = syz("x", "0", "-z")
    h = pairing(rho1, rho2, TRIANGLE)
    assert h.degree == 0 and poly_str(h) == "1"


def test_pairing_antisymmetry_and_multiples():
    rho1 = syz("x", "-y", "0")
    assert pairing(rho1, rho1, TRIANGLE).is_zero()
    scaled = Syzygy(*(p.mul_monomial((0, 0, 1)) for p in rho1.components()))
    assert pairing(rho1, scaled, TRIANGLE).is_zero()


def test_pairing_bilinear_on_random_syzygy_combinations():
    rng = random.Random(5)
    basis = syzygy_basis(TRIANGLE, 1)
    r1, r2 = basis
    for _ in range(5):
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        combo = Syzygy(
            *(
                p.scale(QQ.from_int(a)) + q.scale(QQ.from_int(b))
                for p, q in zip(r1.components(), r2.components())
            )
        )
        lhs = pairing(combo, r2, TRIANGLE)
        rhs = pairing(r1, r2, TRIANGLE).scale(QQ.from_int(a))
        assert lhs == rhs  # the r2-component drops out by antisymmetry


def test_saito_verify_triangle():
    rho1 = syz("x", "-y", "0")
    rho2 = syz("x", "0", "-z")
    assert saito_verify(TRIANGLE, rho1, rho2)


def test_saito_verify_rejects_dependent_pair():
    # degrees still sum to d-1, but the pair is dependent, so h = 0
    rho1 = syz("x", "-y", "0")
    assert not saito_verify(TRIANGLE, rho1, rho1)
    rho2 = syz("x", "0", "-z")
    combo = Syzygy(*(p + q.scale(QQ.from_int(2)) for p, q in zip(rho2.components(), rho1.components())))
    assert saito_verify(TRIANGLE, rho1, combo)  # combos off the line still work


def test_saito_verify_degree_precondition():
    rho1 = syz("x", "-y", "0")
    too_big = Syzygy(*(p.mul_monomial((1, 0, 0)) for p in rho1.components()))
    with pytest.raises(ValueError):
        saito_verify(TRIANGLE, rho1, too_big)


def test_v_map_kills_the_minimal_syzygy_and_its_multiples():
    basis = syzygy_basis(TRIANGLE, 1)
    rho1 = basis[0]
    assert v_map(rho1, rho1, TRIANGLE).is_zero()
    assert v_map(basis[1], rho1, TRIANGLE).degree == 0
    assert not v_map(basis[1], rho1, TRIANGLE).is_zero()


def test_v_map_cusp_gives_independent_linear_forms():
    (rho1,) = syzygy_basis(CUSP, 1)
    _, rho2, rho3 = nearly_free_generators(CUSP, 1)
    l2 = v_map(rho2, rho1, CUSP)
    l3 = v_map(rho3, rho1, CUSP)
    assert l2.degree == 1 and l3.degree == 1
    vecs = [l2.coeff_vector(), l3.coeff_vector()]
    # independence: the 2x3 coefficient matrix has a nonzero 2-minor
    minors = [
        vecs[0][i] * vecs[1][j] - vecs[0][j] * vecs[1][i]
        for i in range(3)
        for j in range(i + 1, 3)
    ]
    assert any(m != 0 for m in minors)


def test_nearly_free_generators_cusp():
    rho1, rho2, rho3 = nearly_free_generators(CUSP, 1)
    assert rho1.degree == 1 and rho2.degree == 2 and rho3.degree == 2
    for s in (rho1, rho2, rho3):
        assert s.holds_for(CUSP)
    # ar(f)_k matches the three-generator resolution count through d+2
    for k in range(0, CUSP.degree + 3):
        assert ar_dim(CUSP, k) == nearly_free_resolution_dim(CUSP.degree, 1, k)


def test_nearly_free_generators_rejects_free_curve():
    with pytest.raises(InternalInconsistencyError):
        nearly_free_generators(TRIANGLE, 1)


def test_free_pair_triangle():
    rho1, rho2 = free_pair(TRIANGLE, 1)
    assert saito_verify(TRIANGLE, rho1, rho2)


@pytest.mark.parametrize(
    "expr,verdict,exponents,symmetry",
    [
        ("x*y*z", FREE, (1, 1), True),
        ("x^3-y^2*z", NEARLY_FREE, (1, 2), True),
        ("x^4-y^3*z", NEARLY_FREE, (1, 3), True),
        ("x*y*z*(x+y+z)", NEARLY_FREE, (2, 2), False),
        ("x*y*z*(x-y)*(x-z)*(y-z)", FREE, (2, 3), False),
        ("x^3+x^2*z-y^2*z", NEITHER, None, False),
        ("x^3+y^3+z^3", SMOOTH, None, False),
        ("x*y*(x+y)", PENCIL_OF_LINES, None, False),
    ],
)
def test_classify_verdicts(expr, verdict, exponents, symmetry):
    c = classify(parse_poly(expr))
    assert c.verdict == verdict
    assert c.exponents == exponents
    assert c.symmetry_flag == symmetry
    if verdict in (FREE, NEARLY_FREE):
        assert c.verified is True
        assert c.criteria == {"tau_test": True, "ctst_test": True, "delta_test": True}


def test_classify_rejects_nonreduced():
    with pytest.raises(NotReducedError):
        classify(parse_poly("x^2*y"))


def test_classify_exponent_identities():
    braid = parse_poly("x*y*z*(x-y)*(x-z)*(y-z)")
    c = classify(braid)
    d1, d2 = c.exponents
    d = braid.degree
    assert d1 + d2 == d - 1
    from freecurve.invariants import tjurina

    assert tjurina(braid) == (d - 1) ** 2 - d1 * d2

    quad = parse_poly("x*y*z*(x+y+z)")
    c = classify(quad)
    d1, d2 = c.exponents
    assert d1 + d2 == quad.degree
    assert tjurina(quad) == (quad.degree - 1) ** 2 - d1 * (d2 - 1) - 1


def test_classify_with_prime_plan_matches_rational():
    for expr in ("x*y*z", "x^3-y^2*z", "x*y*z*(x+y+z)", "x^3+x^2*z-y^2*z"):
        f = parse_poly(expr)
        c_qq = classify(f, QQ)
        c_pp = classify(f, FieldPlan.primes(3))
        assert c_qq.verdict == c_pp.verdict
        assert c_qq.exponents == c_pp.exponents
        assert c_qq.verified == c_pp.verified
