import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from freemedial.errors import BadModulus, FactorMismatch, NotDivisible, NotQuotient, PolySyntaxError, SpecMismatch
from freemedial.poly import (
    ONE,
    T,
    LaurentPoly,
    cyclotomic,
    divide_by_one_minus_t,
    eval_at_one,
    factor_symmetric_poly,
    format_poly,
    parse_poly,
    product,
    symmetric_poly,
)
from freemedial.ring import RingSpec, crt_residues, inv_t, reduce

P = parse_poly
t_sym = sympy.Symbol("t")

laurent_polys = st.dictionaries(st.integers(-4, 4), st.integers(-9, 9), max_size=6).map(LaurentPoly)
polys = st.dictionaries(st.integers(0, 8), st.integers(-9, 9), max_size=6).map(LaurentPoly)

MODULI = ["1+t", "1+t+t^2", "1-2t+t^2", "1-3t+3t^2-t^3", "1+t+t^2+t^3", "1-t"]


def to_sympy(p):
    return sum(c * t_sym**e for e, c in p.items()) if not p.is_zero() else sympy.Integer(0)


def test_add_examples():
    R = RingSpec.laurent()
    assert R("1-t") + R("t") == R(1)
    assert R(0) + R("1+t^-2") == R("1+t^-2")
    S = RingSpec.quotient("1+t+t^2+t^3")
    # deg f = 3, so 2t^3 is not yet reduced: t^3 = -1-t-t^2
    assert (S("t^3") + S("t^3")).value == P("-2-2t-2t^2")
    assert (S("t^2") + S("t^2")).value == P("2t^2")


def test_mul_examples():
    R = RingSpec.laurent()
    assert (R("1-t") * R("1+t")).value == P("1-t^2")
    assert (R("1-t") * R("1-t")).value == P("1-2t+t^2")
    S = RingSpec.quotient("1+t")
    assert (S.t * S.t).value == ONE


@pytest.mark.parametrize("f,expected", [
    ("1+t+t^2+t^3", "-1-t-t^2"),
    ("1+t", "-1"),
    ("1-2t+t^2", "2-t"),
])
def test_inv_t_examples(f, expected):
    S = RingSpec.quotient(f)
    assert inv_t(S).value == P(expected)
    assert (S.t * inv_t(S)).value == ONE


@pytest.mark.parametrize("f", MODULI[:-1] + ["-1+t^2+t^5", "1+t^3"])
def test_inv_t_is_inverse(f):
    S = RingSpec.quotient(f)
    assert S.t * inv_t(S) == S.one


def test_inv_t_laurent_raises():
    with pytest.raises(NotQuotient):
        inv_t(RingSpec.laurent())


def test_reduce_examples():
    S = RingSpec.quotient("1+t+t^2+t^3")
    assert reduce(P("t^4"), S).value == ONE
    assert reduce(P("t^-1"), RingSpec.quotient("1+t")).value == P("-1")
    assert reduce(LaurentPoly(), S).is_zero()


def test_reduce_is_identity_on_laurent():
    p = P("3t^-5+t^7")
    assert reduce(p, RingSpec.laurent()).value == p


@pytest.mark.parametrize("f", MODULI)
def test_reduce_matches_sympy_remainder(f):
    S = RingSpec.quotient(f)
    rng = random.Random(7)
    for _ in range(200):
        p = LaurentPoly({rng.randint(0, 12): rng.randint(-9, 9) for _ in range(5)})
        got = reduce(p, S).value
        expected = sympy.rem(to_sympy(p), to_sympy(S.modulus), t_sym)
        assert sympy.expand(to_sympy(got) - expected) == 0
        assert got.degree is None or got.degree < S.degree


@pytest.mark.parametrize("f", MODULI)
def test_negative_exponents_reduce_consistently(f):
    # t^k * reduce(t^-k p) == reduce(p)
    S = RingSpec.quotient(f)
    rng = random.Random(3)
    for _ in range(100):
        p = LaurentPoly({rng.randint(-6, 6): rng.randint(-5, 5) for _ in range(4)})
        k = rng.randint(1, 5)
        lhs = S(T**k) * reduce(p.shift(-k), S)
        assert lhs == reduce(p, S)


@pytest.mark.parametrize("f", [None] + MODULI)
def test_ring_axioms_random(f):
    R = RingSpec.laurent() if f is None else RingSpec.quotient(f)
    rng = random.Random(11)

    def rand():
        lo = -3 if R.is_laurent else 0
        return R(LaurentPoly({rng.randint(lo, 5): rng.randint(-9, 9) for _ in range(4)}))

    for _ in range(1000):
        a, b, c = rand(), rand(), rand()
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + R.zero == a and a * R.one == a
        assert a - a == R.zero


def test_characteristic_ring():
    S = RingSpec.quotient("1-t", characteristic=4)
    assert S("5+3t").value == ONE * 0
    assert S("t^-1").value == ONE
    assert str(S) == "mod 1-t over Z_4"


def test_spec_mismatch():
    with pytest.raises(SpecMismatch):
        RingSpec.quotient("1+t")(1) + RingSpec.quotient("1+t+t^2")(1)


@pytest.mark.parametrize("f", ["2+t", "1+2t", "t", "3", "1+t^-1"])
def test_bad_modulus(f):
    with pytest.raises(BadModulus):
        RingSpec.quotient(f)


def test_eval_at_one_examples():
    assert eval_at_one(P("1-t")) == 0
    assert eval_at_one(P("1+t-t^2")) == 1
    assert eval_at_one(LaurentPoly()) == 0


@given(laurent_polys, laurent_polys)
def test_eval_at_one_is_homomorphism(p, q):
    assert eval_at_one(p * q) == eval_at_one(p) * eval_at_one(q)
    assert eval_at_one(p + q) == eval_at_one(p) + eval_at_one(q)


def test_divide_examples():
    assert divide_by_one_minus_t(P("1-t^2")) == P("1+t")
    assert divide_by_one_minus_t(P("t^5-t^6")) == P("t^5")
    assert divide_by_one_minus_t(P("t-t^3")) == P("t+t^2")
    with pytest.raises(NotDivisible):
        divide_by_one_minus_t(P("1+t"))


@given(laurent_polys)
def test_divide_inverts_multiplication(p):
    assert divide_by_one_minus_t(P("1-t") * p) == p


@pytest.mark.parametrize("k", range(1, 31))
def test_cyclotomic_matches_sympy(k):
    ours = to_sympy(cyclotomic(k))
    assert sympy.expand(ours - sympy.cyclotomic_poly(k, t_sym)) == 0


def test_cyclotomic_examples():
    assert cyclotomic(2) == P("1+t")
    assert cyclotomic(1) == P("t-1")
    assert cyclotomic(6) == P("t^2-t+1")


def test_factor_examples():
    assert factor_symmetric_poly(2) == [P("1+t")]
    assert factor_symmetric_poly(4) == [P("1+t"), P("1+t^2")]
    assert factor_symmetric_poly(6) == [P("1+t"), P("1+t+t^2"), P("1-t+t^2")]


@pytest.mark.parametrize("n", range(2, 25))
def test_factor_product(n):
    fs = factor_symmetric_poly(n)
    assert product(fs) == symmetric_poly(n)
    assert (T - 1) * symmetric_poly(n) == T**n - 1
    for g in fs:
        assert sympy.Poly(to_sympy(g), t_sym).is_irreducible


def test_crt_examples_and_errors():
    S = RingSpec.quotient(symmetric_poly(6))
    assert all(r.is_zero() for r in crt_residues(S.zero, factor_symmetric_poly(6)))
    assert [str(r) for r in crt_residues(S.t, factor_symmetric_poly(6))] == ["-1", "t", "t"]
    with pytest.raises(FactorMismatch):
        crt_residues(S.t, [P("1+t")])
    with pytest.raises(NotQuotient):
        crt_residues(RingSpec.laurent().t, [P("1+t")])


@pytest.mark.parametrize("n", [2, 3, 4, 6, 8, 12])
def test_crt_injective_random(n):
    S = RingSpec.quotient(symmetric_poly(n))
    fs = factor_symmetric_poly(n)
    rng = random.Random(n)
    for _ in range(200):
        a = S(LaurentPoly({rng.randint(0, n): rng.randint(-9, 9) for _ in range(3)}))
        res = crt_residues(a, fs)
        assert a.is_zero() == all(r.is_zero() for r in res)


@settings(max_examples=200)
@given(laurent_polys)
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p)) == p


@pytest.mark.parametrize("text,expected", [
    ("1 - t + 2t^3", {0: 1, 1: -1, 3: 2}),
    ("t^-1", {-1: 1}),
    ("2*t^(-2) + t", {-2: 2, 1: 1}),
    ("0", {}),
    ("-t", {1: -1}),
])
def test_parse_examples(text, expected):
    assert parse_poly(text) == LaurentPoly(expected)


def test_format_examples():
    assert format_poly(P("2t^3 + 1 - t")) == "1-t+2t^3"
    assert str(P("t^-1")) == "t^-1"
    assert str(LaurentPoly()) == "0"


@pytest.mark.parametrize("bad", ["", "t^", "1+", "x", "2t^1.5", "t^^2"])
def test_parse_errors(bad):
    with pytest.raises(PolySyntaxError):
        parse_poly(bad)
