import pytest
from hypothesis import given, settings, strategies as st

from scrollideals.polyfield import (
    GREATER,
    LESS,
    FieldScalar,
    Monomial,
    Polynomial,
    cmp_degrevlex,
    format_polynomial,
    is_prime,
    iter_monomials,
    parse_polynomial,
)

P = 32003
NV = 3

exps = st.tuples(*[st.integers(0, 2)] * NV)
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(
    lambda d: Polynomial(NV, d, P))


def test_degrevlex_examples():
    # x2^2 > x1*x3 and x1*x4 > x2*x3 in degrevlex with x1 > x2 > ...
    assert cmp_degrevlex((0, 2, 0), (1, 0, 1)) == GREATER
    assert cmp_degrevlex((1, 0, 0, 1), (0, 1, 1, 0)) == LESS
    assert cmp_degrevlex((1, 0, 0), (0, 0, 2)) == LESS  # degree first


def test_edge_generator_leading_term():
    # g_ij = x_i x_{j+1} - x_{i+1} x_j has leading monomial x_{i+1} x_j
    f = parse_polynomial("x1*x4 - x2*x3", 4, P)
    assert str(f.leading_monomial()) == "x2*x3"
    f = parse_polynomial("x1*x3 - x2^2", 3, P)
    assert str(f.leading_monomial()) == "x2^2"


@given(exps, exps, exps)
def test_order_is_multiplicative(a, b, c):
    ma, mb, mc = Monomial(a), Monomial(b), Monomial(c)
    if ma < mb:
        assert ma * mc < mb * mc


@given(exps, exps)
def test_order_is_total(a, b):
    assert (cmp_degrevlex(a, b) == 0) == (a == b)
    assert cmp_degrevlex(a, b) == -cmp_degrevlex(b, a)


@settings(max_examples=60)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == Polynomial.zero(NV, P)


@given(polys)
def test_format_parse_roundtrip(f):
    assert parse_polynomial(format_polynomial(f), NV, P) == f


def test_format_descending_symmetric():
    f = Polynomial(2, {(0, 2): 1, (2, 0): P - 3}, P)
    assert format_polynomial(f) == "-3*x1^2 + x2^2"


def test_field_scalar():
    a = FieldScalar(3, 7)
    assert int(a * a.inverse()) == 1
    assert FieldScalar(6, 7).symmetric() == -1
    with pytest.raises(ZeroDivisionError):
        FieldScalar(0, 7).inverse()


def test_pow_and_substitution():
    x1, x2 = Polynomial.var(1, 2, P), Polynomial.var(2, 2, P)
    f = (x1 + x2) ** 2
    assert f == x1 * x1 + x2 * x2 + x1 * x2 * 2
    assert f.substitute_zero([1]) == x2 * x2


def test_helpers():
    assert is_prime(32003) and not is_prime(32001)
    assert len(list(iter_monomials(3, 2))) == 6
    assert str(Monomial.from_indices([2, 6, 10], 11)) == "x2*x6*x10"


def test_mismatched_rings_rejected():
    with pytest.raises(ValueError):
        Polynomial.var(1, 2, P) + Polynomial.var(1, 3, P)
