from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from casas_alvero.algebra import (
    EXPONENT_LIMIT, GF, QQ, MonomialOrder, PolyRing, compare_monomials, evaluate,
    format_polynomial, is_prime, leading_data, parse_field, parse_polynomial, poly_add, poly_mul,
    primes_between,
)
from casas_alvero.errors import DomainError, ExponentOverflowError, UsageError

R2 = PolyRing.roots(2)
x1, x2 = R2.gens()


# -- fields -------------------------------------------------------------------

def test_prime_helpers():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_between(3, 13) == [3, 5, 7, 11, 13]
    assert primes_between(8, 10) == []


def test_parse_field():
    assert parse_field("q") is QQ
    assert parse_field("fp:5") == GF(5)
    assert parse_field("7").p == 7
    for bad in ("fp:4", "fp:x", "zz"):
        with pytest.raises(UsageError):
            parse_field(bad)


def test_prime_field_arithmetic():
    F = GF(7)
    assert F(-1) == 6
    assert F.inv(3) == 5
    assert F(Fraction(1, 2)) == 4
    with pytest.raises(DomainError):
        F(Fraction(1, 7))
    with pytest.raises(DomainError):
        F.inv(0)


# -- orders -------------------------------------------------------------------

def test_compare_examples():
    assert compare_monomials((1, 0, 0), (0, 1, 0), MonomialOrder.lex(3)) == 1
    assert compare_monomials((1, 2, 0), (0, 0, 3), MonomialOrder.grlex(3)) == 1
    for order in (MonomialOrder.lex(2), MonomialOrder.grlex(2)):
        assert compare_monomials((0, 0), (0, 0), order) == 0


def test_compare_arity_mismatch():
    with pytest.raises(UsageError):
        compare_monomials((1, 0), (1, 0, 0), MonomialOrder.lex(3))


def test_priority_permutation():
    order = MonomialOrder("lex", (1, 0))  # x2 > x1
    assert compare_monomials((0, 1), (5, 0), order) == 1
    assert order.header() == "order=lex priority=2,1"
    assert order.describe(("x1", "x2")) == "x1<x2"


def test_order_parse():
    assert MonomialOrder.parse("lex", 3) == MonomialOrder.lex(3)
    assert MonomialOrder.parse("grlex:3,1,2", 3) == MonomialOrder("grlex", (2, 0, 1))
    for bad in ("lex:1,1,2", "lex:1,2", "revlex", "lex:0,1,2"):
        with pytest.raises(UsageError):
            MonomialOrder.parse(bad, 3)


exps = st.tuples(*[st.integers(0, 6)] * 3)
orders = st.builds(MonomialOrder, st.sampled_from(["lex", "grlex"]), st.permutations([0, 1, 2]).map(tuple))


@given(exps, exps, exps, orders)
def test_order_is_monomial_order(a, b, c, order):
    ab = compare_monomials(a, b, order)
    assert ab == -compare_monomials(b, a, order)
    assert (ab == 0) == (a == b)
    shift = lambda e: tuple(u + v for u, v in zip(e, c))
    assert compare_monomials(shift(a), shift(b), order) == ab
    assert compare_monomials(a, (0, 0, 0), order) >= 0
    if ab <= 0 and compare_monomials(b, c, order) <= 0:
        assert compare_monomials(a, c, order) <= 0


# -- polynomial arithmetic -----------------------------------------------------

def test_add_examples():
    f = x1 * x2 + 3
    assert poly_add(f, R2.zero) == f
    assert poly_add(f, -f).is_zero()
    assert poly_add(x1 + x2, x1 - x2) == 2 * x1


def test_mul_examples():
    f = x1 ** 2 - 3 * x2
    assert poly_mul(f, R2.one) == f
    assert poly_mul(x1 - x2, x1 + x2) == x1 ** 2 - x2 ** 2
    F = PolyRing.roots(1, GF(5))
    y = F.gen(0)
    assert poly_mul(y + 2, y + 3) == y ** 2 + 1


def test_ring_mismatch():
    other = PolyRing.roots(2, GF(3))
    with pytest.raises(UsageError):
        poly_add(x1, other.gen(0))
    with pytest.raises(UsageError):
        poly_mul(x1, PolyRing.roots(3).gen(0))


def test_exponent_overflow():
    big = R2.monomial((EXPONENT_LIMIT - 1, 0))
    with pytest.raises(ExponentOverflowError):
        big * x1 * x1


def test_leading_data_examples():
    f = 2 * x1 * x2 ** 2 + x1 ** 3
    ld = leading_data(f, MonomialOrder.grlex(2))
    assert ld.multidegree == (3, 0) and ld.coefficient == 1
    assert ld.monomial == R2.monomial((3, 0)) and ld.term == x1 ** 3
    for n in range(2, 7):
        R = PolyRing.roots(n)
        g = (n - 1) * R.gen(0) - sum(R.gens()[1:], R.zero)
        ld = leading_data(g, MonomialOrder.lex(n))
        assert ld.multidegree == (1,) + (0,) * (n - 1) and ld.coefficient == n - 1
    ld = leading_data(R2.constant(Fraction(3, 4)), MonomialOrder.lex(2))
    assert ld.multidegree == (0, 0) and ld.coefficient == Fraction(3, 4)
    with pytest.raises(DomainError):
        leading_data(R2.zero, MonomialOrder.lex(2))


def test_evaluate_examples():
    assert evaluate(x1 - x2, (Fraction(5, 3), Fraction(5, 3))) == 0
    F = PolyRing.roots(1, GF(5))
    assert evaluate(F.gen(0) ** 2 + 1, (2,)) == 0
    assert evaluate(R2.one, (7, -1)) == 1
    with pytest.raises(UsageError):
        evaluate(x1, (1,))


def test_format_and_parse():
    f = 2 * x1 * x2 ** 2 - x1 ** 3 + Fraction(-1, 2) * x2 + 1
    assert format_polynomial(f) == "-x1^3 + 2*x1*x2^2 - 1/2*x2 + 1"
    assert format_polynomial(R2.zero) == "0"
    assert parse_polynomial("x1**2 − x2", R2) == x1 ** 2 - x2
    assert parse_polynomial(format_polynomial(f), R2) == f
    with pytest.raises(UsageError):
        parse_polynomial("x3 + 1", R2)


def test_derivative_and_substitute():
    f = x1 ** 3 * x2 + 4 * x2
    assert f.derivative(0) == 3 * x1 ** 2 * x2
    assert f.substitute({0: x2}) == x2 ** 4 + 4 * x2


# -- properties ----------------------------------------------------------------

coeffs = st.integers(-6, 6)
monos = st.tuples(st.integers(0, 3), st.integers(0, 3))
raw_polys = st.dictionaries(monos, coeffs, max_size=5)


def _poly(ring, d):
    return ring.from_dict(d)


@given(raw_polys, raw_polys, raw_polys, st.sampled_from([QQ, GF(2), GF(5), GF(7)]))
def test_ring_laws(a, b, c, field):
    R = PolyRing.roots(2, field)
    f, g, h = _poly(R, a), _poly(R, b), _poly(R, c)
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()
    # canonical form: equal polynomials hash equally and have no zero coefficients
    assert hash(f + g) == hash(g + f)
    assert all(v != 0 for _, v in (f * g).terms)


@given(raw_polys, raw_polys, st.sampled_from([2, 3, 5, 7]))
def test_reduction_mod_p_is_a_homomorphism(a, b, p):
    f, g = _poly(R2, a), _poly(R2, b)
    assert (f * g).reduce_mod(p) == f.reduce_mod(p) * g.reduce_mod(p)
    assert (f + g).reduce_mod(p) == f.reduce_mod(p) + g.reduce_mod(p)


@given(raw_polys, st.tuples(coeffs, coeffs), st.tuples(coeffs, coeffs))
def test_evaluation_is_a_homomorphism(a, u, v):
    f = _poly(R2, a)
    g = _poly(R2, {(1, 1): 1, (0, 2): -3})
    assert evaluate(f * g, u) == evaluate(f, u) * evaluate(g, u)
    assert evaluate(f + g, v) == evaluate(f, v) + evaluate(g, v)


@given(raw_polys)
def test_format_parse_roundtrip(a):
    f = _poly(R2, a) * Fraction(1, 3)
    assert parse_polynomial(format_polynomial(f), R2) == f
