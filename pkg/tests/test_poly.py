import pytest
from hypothesis import given, settings, strategies as st

from z4hull.poly import (
    PolyF2,
    PolyZ4,
    add,
    cyclic_conjugate,
    divrem_monic,
    f2_add,
    f2_divrem,
    f2_mul,
    fold_mod,
    mu,
    mul,
    mul_mod,
    reciprocal,
)

P = PolyZ4.parse

z4_polys = st.builds(PolyZ4, st.lists(st.integers(0, 3), max_size=12))


@st.composite
def monic_unit_polys(draw):
    deg = draw(st.integers(min_value=0, max_value=10))
    if deg == 0:
        return PolyZ4([1])
    mid = draw(st.lists(st.integers(0, 3), min_size=deg - 1, max_size=deg - 1))
    return PolyZ4([draw(st.sampled_from([1, 3]))] + mid + [1])


# ---------------------------------------------------------------------------
# construction, parsing, formatting
# ---------------------------------------------------------------------------

def test_normalization_and_zero():
    assert PolyZ4([1, 3, 0, 0]).coeffs == (1, 3)
    assert PolyZ4([0, 0]).coeffs == ()
    assert PolyZ4().is_zero()
    assert PolyZ4().degree == -1
    assert PolyZ4([5, -1]).coeffs == (1, 3)


@pytest.mark.parametrize(
    "text,coeffs",
    [
        ("3,1,2,1", (3, 1, 2, 1)),
        ("x^3+2x^2+x+3", (3, 1, 2, 1)),
        ("x^3+2x^2+x-1", (3, 1, 2, 1)),
        ("x−1", (3, 1)),  # unicode minus
        ("0", ()),
        ("1", (1,)),
        ("x", (0, 1)),
        ("2x", (0, 2)),
        ("x+x", (0, 2)),
        (" x^2 + 3 ", (3, 0, 1)),
    ],
)
def test_parse(text, coeffs):
    assert PolyZ4.parse(text).coeffs == coeffs


def test_parse_rejects_garbage():
    for text in ["", "x^", "y+1", "x**"]:
        with pytest.raises(ValueError):
            PolyZ4.parse(text)


def test_format_canonical():
    assert str(P("x^3+2x^2+x-1")) == "x^3+2x^2+x+3"
    assert str(PolyZ4()) == "0"
    assert str(PolyZ4([3])) == "3"
    assert str(P("x")) == "x"
    assert str(PolyZ4.x_pow_n_minus_1(7)) == "x^7+3"


def test_parse_format_round_trip():
    p = P("2x^5+3x^2+1")
    assert PolyZ4.parse(str(p)) == p


# ---------------------------------------------------------------------------
# ring operations
# ---------------------------------------------------------------------------

def test_add_examples():
    assert add(P("x+1"), P("x+3")) == P("2x")
    p = P("x^2+3x+2")
    assert add(p, PolyZ4()) == p
    assert add(P("2x^2"), P("2x^2")).is_zero()


def test_mul_examples():
    f, g, h = P("x^3+2x^2+x-1"), P("x^3-x^2+2x-1"), P("x-1")
    assert mul(mul(h, f), g) == PolyZ4.x_pow_n_minus_1(7)
    p = P("3x^2+x")
    assert mul(p, PolyZ4([1])) == p
    assert mul(PolyZ4([2]), PolyZ4([2])).is_zero()


def test_mul_mod_examples():
    n = 7
    assert mul_mod(PolyZ4.x_pow(n - 1), PolyZ4.x_pow(1), n) == PolyZ4([1])
    f, g, h = P("x^3+2x^2+x-1"), P("x^3-x^2+2x-1"), P("x-1")
    assert mul_mod(mul(f, g), h, n).is_zero()
    assert mul_mod(P("x^2+1"), PolyZ4(), 5).is_zero()


@given(z4_polys, z4_polys, st.integers(1, 31))
@settings(deadline=None)
def test_mul_mod_matches_explicit_reduction(a, b, n):
    _, expected = divrem_monic(mul(a, b), PolyZ4.x_pow_n_minus_1(n))
    assert mul_mod(a, b, n) == expected


@given(z4_polys, z4_polys)
@settings(deadline=None)
def test_degree_bound(a, b):
    p = mul(a, b)
    if a.is_zero() or b.is_zero():
        assert p.is_zero()
    else:
        assert p.degree <= a.degree + b.degree
        if (a.coeffs[-1] * b.coeffs[-1]) & 3:
            assert p.degree == a.degree + b.degree


def test_divrem_monic():
    a = P("x^5+2x^3+x+1")
    b = P("x^2+x+3")
    q, r = divrem_monic(a, b)
    assert add(mul(q, b), r) == a
    assert r.degree < b.degree
    with pytest.raises(ValueError):
        divrem_monic(a, P("2x+1"))


# ---------------------------------------------------------------------------
# reciprocal and mu
# ---------------------------------------------------------------------------

def test_reciprocal_examples():
    assert reciprocal(P("x^3+2x^2+x-1")) == P("x^3-x^2+2x-1")
    assert reciprocal(P("x-1")) == P("x-1")


def test_reciprocal_rejects_bad_input():
    with pytest.raises(ValueError):
        reciprocal(P("2x+1"))  # not monic
    with pytest.raises(ValueError):
        reciprocal(P("x^2+x"))  # zero constant term
    with pytest.raises(ValueError):
        reciprocal(P("x^2+2"))  # non-unit constant term


@given(monic_unit_polys())
@settings(max_examples=500, deadline=None)
def test_reciprocal_is_involution(f):
    assert reciprocal(reciprocal(f)) == f


def test_mu_examples():
    assert mu(P("x^3+2x^2+x-1")) == PolyF2([1, 1, 0, 1])
    assert mu(PolyZ4.x_pow_n_minus_1(9)).bits == (1 << 9) | 1
    assert mu(P("2x^2")).is_zero()


@given(z4_polys, z4_polys)
@settings(max_examples=500, deadline=None)
def test_mu_is_ring_homomorphism(a, b):
    assert mu(add(a, b)) == f2_add(mu(a), mu(b))
    assert mu(mul(a, b)) == f2_mul(mu(a), mu(b))


# ---------------------------------------------------------------------------
# F2 operations
# ---------------------------------------------------------------------------

def test_f2_ops():
    x1 = PolyF2([1, 1])  # x + 1
    assert f2_mul(x1, x1) == PolyF2([1, 0, 1])  # Frobenius: (x+1)^2 = x^2+1
    a = PolyF2([1, 0, 1, 1])
    assert f2_add(a, a).is_zero()
    x7_1 = PolyF2.from_bits((1 << 7) | 1)
    q, r = f2_divrem(x7_1, PolyF2([1, 1, 0, 1]))
    assert r.is_zero()
    assert f2_mul(q, PolyF2([1, 1, 0, 1])) == x7_1
    with pytest.raises(ZeroDivisionError):
        f2_divrem(a, PolyF2())


def test_polyf2_views():
    p = PolyF2([1, 0, 1])
    assert p.coeffs == (1, 0, 1)
    assert p.degree == 2
    assert str(p) == "x^2+1"
    assert str(PolyF2()) == "0"


# ---------------------------------------------------------------------------
# cyclic conjugate
# ---------------------------------------------------------------------------

def test_cyclic_conjugate_matches_reciprocal_up_to_unit():
    n = 7
    v = P("x^3+2x^2+x-1")
    conj = cyclic_conjugate(v, n)
    lifted = mul_mod(reciprocal(v), PolyZ4.x_pow(n - v.degree), n)
    assert conj == mul_mod(lifted, PolyZ4([v.coeffs[0]]), n)


def test_fold_mod():
    assert fold_mod(PolyZ4.x_pow(7), 7) == PolyZ4([1])
    assert fold_mod(P("x^2+1"), 7) == P("x^2+1")
