from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stablekr.parse import ParseError, parse_poly
from stablekr.ring import (
    Inhomogeneous,
    NonExactDivision,
    ParityError,
    RingMismatch,
    SuperRing,
    Tridegree,
    exact_divide,
    substitute,
    tridegree_of,
)
from stablekr.symfunc import vandermonde

R2 = SuperRing.standard(2)
R3 = SuperRing.standard(3)


def g(name, ring=R2):
    return ring.gen(name)


def test_add_examples():
    assert (g("u0") + (-g("u0"))).is_zero()
    assert g("u0") + g("u0") == g("u0").scale(2)
    assert g("u0") * g("xi0") + g("xi0") * g("u0") == (g("u0") * g("xi0")).scale(2)


def test_mul_examples():
    assert (g("xi0") * g("xi0")).is_zero()
    x01 = g("xi0") * g("xi1")
    assert g("xi1") * g("xi0") == -x01
    assert (g("y1") - g("y2")) * (g("y1") + g("y2")) == g("y1") ** 2 - g("y2") ** 2


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        g("u0") + R3.gen("u0")


def test_exact_divide_examples():
    y1, y2 = g("y1"), g("y2")
    assert exact_divide(y1 ** 2 - y2 ** 2, y1 - y2) == y1 + y2
    delta = vandermonde(2, R2)
    assert exact_divide(delta * g("u0"), delta) == g("u0")
    with pytest.raises(NonExactDivision):
        exact_divide(y1 - y2, y1 + y2)


def test_exact_divide_odd_numerator():
    y1, y2 = g("y1"), g("y2")
    num = (y1 - y2) * (g("u1") * g("xi0") + g("xi0") * g("xi1"))
    assert exact_divide(num, y1 - y2) == g("u1") * g("xi0") + g("xi0") * g("xi1")


def test_tridegree_examples():
    assert tridegree_of(g("u1")) == Tridegree(4, -2, 0)
    assert tridegree_of(g("xi1")) == Tridegree(0, -2, 1)
    assert isinstance(tridegree_of(g("y1") + g("u0")), Inhomogeneous)
    assert tridegree_of(R2.zero()) is None


def test_weights_in_qta():
    # wt(u_i) = q t^-i, wt(y) = t, wt(x) = q, wt(xi_i) = a t^-i, wt(theta) = a
    assert tridegree_of(g("u1")).to_qta() == (1, -1, 0)
    assert tridegree_of(g("y1")).to_qta() == (0, 1, 0)
    assert tridegree_of(g("x2")).to_qta() == (1, 0, 0)
    assert tridegree_of(g("xi1")).to_qta() == (0, -1, 1)
    assert tridegree_of(g("theta1")).to_qta() == (0, 0, 1)


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-3, 3))
def test_qta_round_trip(dq, dt, da):
    D = Tridegree.from_qta(dq, dt, da)
    assert D.to_qta() == (dq, dt, da)
    assert Tridegree.from_qta(*D.to_qta()) == D


def test_substitute_examples():
    x1 = g("x1")
    u = g("u0") + g("u1") * g("y1")
    assert substitute(x1 ** 2, {"x1": u}) == u * u
    p = g("y1") * g("y2") - g("y1") - g("y2")
    assert substitute(p, {"y1": R2.zero(), "y2": R2.zero()}).is_zero()
    q = g("u0") * g("xi1") + g("y2") ** 3
    assert substitute(q, {}) == q
    assert substitute(q, {"u0": g("u0"), "xi1": g("xi1")}) == q


def test_substitute_parity_violation():
    with pytest.raises(ParityError):
        substitute(g("xi0"), {"xi0": g("u0")})
    with pytest.raises(ParityError):
        substitute(g("u0"), {"u0": g("xi0")})


def test_substitute_odd_images_keep_signs():
    # xi0 xi1 with xi0 -> xi1, xi1 -> xi0 is xi1 xi0 = -xi0 xi1
    p = g("xi0") * g("xi1")
    assert substitute(p, {"xi0": g("xi1"), "xi1": g("xi0")}) == -p


def test_serialization_format():
    p = g("u0") ** 2 - g("u1") ** 2 * g("y1") * g("y2")
    assert p.to_str() == "-u1^2*y1*y2 + u0^2"
    assert (g("u0") * g("y1") * g("xi0")).scale(3).to_str() == "3*u0*y1*xi0"
    assert R2.zero().to_str() == "0"


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as info:
        parse_poly("u0 + * y1", R2)
    assert info.value.position == 5
    with pytest.raises(ParseError):
        parse_poly("u0 / y1", R2)
    with pytest.raises(ParseError):
        parse_poly("w7", R2)


def test_parse_rationals_and_parentheses():
    p = parse_poly("(u0 + y1)^2/4 - 1/2", R2)
    expect = ((g("u0") + g("y1")) ** 2).scale(Fraction(1, 4)) - R2.const(Fraction(1, 2))
    assert p == expect


# -- property tests -----------------------------------------------------------

GENS = [name for name, _ in R3.even] + [name for name, _ in R3.odd]


@st.composite
def monomial_products(draw, max_len=4):
    names = draw(st.lists(st.sampled_from(GENS), min_size=0, max_size=max_len))
    c = draw(st.integers(-5, 5).filter(bool))
    p = R3.const(c)
    for name in names:
        p = p * R3.gen(name)
    return p


@st.composite
def polys(draw):
    terms = draw(st.lists(monomial_products(), min_size=1, max_size=4))
    out = R3.zero()
    for t in terms:
        out = out + t
    return out


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a


@settings(max_examples=80, deadline=None)
@given(monomial_products(), monomial_products())
def test_super_commutativity_and_degrees(a, b):
    if a.is_zero() or b.is_zero():
        return
    sign = -1 if a.is_odd() and b.is_odd() else 1
    assert a * b == (b * a).scale(sign)
    if not (a * b).is_zero():
        assert tridegree_of(a * b) == tridegree_of(a) + tridegree_of(b)


@settings(max_examples=60, deadline=None)
@given(polys())
def test_parse_round_trip(p):
    assert parse_poly(p.to_str(), R3) == p


EVEN_Y = ["y1", "y2", "y3", "u0", "u1"]


@st.composite
def even_polys(draw):
    out = R3.zero()
    for _ in range(draw(st.integers(1, 3))):
        names = draw(st.lists(st.sampled_from(EVEN_Y), max_size=3))
        t = R3.const(draw(st.integers(-4, 4).filter(bool)))
        for name in names:
            t = t * R3.gen(name)
        out = out + t
    return out


@settings(max_examples=60, deadline=None)
@given(polys(), even_polys())
def test_exact_divide_recovers_quotient(q, den):
    if den.is_zero():
        return
    assert exact_divide(den * q, den) == q
