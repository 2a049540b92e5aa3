from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from mnqt.exact import (ONE, ZERO, MPoly, ParseError, RatFunc, derivative_at_a1,
                        exact_divide_a_minus_1, normalize, parse, q_binomial,
                        q_shifted_factorial, rsum)
from mnqt.exact import _pykernels

q, t, a = (RatFunc.var(v) for v in "qta")
SQ, ST, SA = sympy.symbols("q t a")


def poly(text):
    return RatFunc(text).num


# -- normalize -------------------------------------------------------------------

def test_normalize_cancels_common_factor():
    assert normalize(poly("q^2 - t^2"), poly("q - t")) == q + t


def test_normalize_zero_numerator():
    r = normalize(MPoly.const(0), poly("1 - t"))
    assert r.is_zero()
    assert r.num.is_zero() and r.den.terms() == [((0, 0, 0), 1)]


def test_normalize_identical_factors():
    assert normalize(poly("(1-q)*(1-t)"), poly("(1-t)*(1-q)")) == ONE


def test_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        normalize(poly("q"), MPoly.const(0))


def test_canonical_string_puts_constant_first():
    r = (1 - q * t ** 2) / (1 - t)
    assert str(r) == "(1 - q*t^2)/(1 - t)"
    assert str((q * t ** 2 - 1) / (t - 1)) == str(r)


# -- q-series ----------------------------------------------------------------------

def test_shifted_factorial_examples():
    assert q_shifted_factorial(q, 2) == (1 - q) * (1 - q ** 2)
    assert q_shifted_factorial(RatFunc("q*t + 7"), 0) == ONE
    assert q_shifted_factorial(t, 3) == (1 - t) * (1 - t * q) * (1 - t * q ** 2)


def test_shifted_factorial_negative_length():
    with pytest.raises(ValueError):
        q_shifted_factorial(q, -1)


def test_q_binomial_examples():
    assert q_binomial(5, 0) == ONE
    assert q_binomial(2, 1) == 1 + q
    assert q_binomial(4, 2) == RatFunc("1 + q + 2*q^2 + q^3 + q^4")


@given(st.integers(0, 9), st.integers(0, 9))
def test_q_binomial_is_symmetric_polynomial(n, k):
    assume(k <= n)
    b = q_binomial(n, k)
    assert b.is_polynomial()
    assert b == q_binomial(n, n - k)
    assert b.specialize("q", 1) == RatFunc(comb(n, k))


@given(st.integers(1, 9), st.integers(1, 9))
def test_q_binomial_recurrence(n, k):
    assume(k <= n)
    lhs = q_binomial(n, k)
    rhs = q_binomial(n - 1, k - 1) + q ** k * q_binomial(n - 1, k)
    assert lhs == rhs


def test_exact_divide_a_minus_1():
    f = (1 - q) / (1 - t)
    assert exact_divide_a_minus_1((a - 1) * f) == f
    assert exact_divide_a_minus_1(a ** 3 - 1) == a ** 2 + a + 1
    assert exact_divide_a_minus_1(ZERO) == ZERO


def test_exact_divide_rejects_remainder():
    with pytest.raises(ValueError, match="not divisible"):
        exact_divide_a_minus_1(a ** 2 + q)


def test_derivative_at_one():
    assert derivative_at_a1(a ** 2) == RatFunc(2)
    f = (q - t) / (1 - q * t)
    assert derivative_at_a1((a - 1) * f) == f
    assert derivative_at_a1(a ** 3 - 3 * a) == ZERO


def test_a_in_denominator_is_rejected():
    with pytest.raises(ValueError, match="denominator depends on a"):
        derivative_at_a1(1 / (1 - a))


# -- field axioms and the sympy oracle ------------------------------------------------

monomials = st.tuples(st.integers(-4, 4).filter(bool), st.integers(0, 3),
                      st.integers(0, 3), st.integers(0, 2))
polys = st.lists(monomials, min_size=1, max_size=4)


def to_ratfunc(terms):
    return rsum([RatFunc.monomial(c, eq, et, ea) for c, eq, et, ea in terms])


def to_sympy(r):
    return sympy.sympify(str(r).replace("^", "**"), locals={"q": SQ, "t": ST, "a": SA})


@st.composite
def ratfuncs(draw):
    num = to_ratfunc(draw(polys))
    den = to_ratfunc(draw(polys))
    assume(not den.is_zero())
    return num / den


@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO
    if not x.is_zero():
        assert x * x.inverse() == ONE
        assert (y / x) * x == y


@given(ratfuncs(), ratfuncs(), st.sampled_from("+-*/"))
def test_arithmetic_matches_sympy(x, y, op):
    if op == "/":
        assume(not y.is_zero())
    ours = {"+": x + y, "-": x - y, "*": x * y, "/": x / y if op == "/" else None}[op]
    sx, sy = to_sympy(x), to_sympy(y)
    theirs = {"+": sx + sy, "-": sx - sy, "*": sx * sy, "/": sx / sy if op == "/" else None}[op]
    assert sympy.simplify(to_sympy(ours) - theirs) == 0
    num, den = sympy.fraction(sympy.cancel(to_sympy(ours)))
    assert sympy.gcd(num, den).is_number


@given(ratfuncs())
def test_print_parse_round_trip(x):
    s = str(x)
    assert parse(s) == x
    assert str(parse(s)) == s


@given(ratfuncs(), st.integers(-3, 3))
def test_specialize_matches_sympy(x, value):
    expected = to_sympy(x).subs(SQ, value)
    try:
        ours = x.specialize("q", value)
    except ZeroDivisionError:
        assert sympy.fraction(sympy.cancel(to_sympy(x)))[1].subs(SQ, value) == 0
        return
    assert sympy.simplify(to_sympy(ours) - expected) == 0


def test_parse_errors_name_the_input():
    with pytest.raises(ParseError):
        parse("q + * t")
    with pytest.raises(ParseError):
        parse("x + 1")


def test_latex_rendering():
    assert ((1 - q * t ** 2) / (1 - t)).latex() == r"\frac{1 - q t^{2}}{1 - t}"
    assert RatFunc(Fraction(-1, 2)).latex() == r"\frac{-1}{2}"


# -- kernels --------------------------------------------------------------------

def test_compiled_and_python_kernels_agree():
    try:
        from mnqt.exact import _ckernels
    except ImportError:
        pytest.skip("compiled kernels not built")
    import random
    rng = random.Random(7)

    def rand_poly():
        return {_pykernels.pack(rng.randint(0, 5), rng.randint(0, 5), rng.randint(0, 2)):
                rng.randint(-9, 9) or 1 for _ in range(rng.randint(1, 8))}

    for _ in range(200):
        x, y = rand_poly(), rand_poly()
        assert _ckernels.mul(x, y) == _pykernels.mul(x, y)
        assert _ckernels.lincomb(x, 3, y, -2) == _pykernels.lincomb(x, 3, y, -2)
        prod = _pykernels.mul(x, y)
        assert _pykernels.divexact(prod, y) == x
        assert _ckernels.divexact(prod, y) == x


def test_pure_python_backend_can_be_forced():
    import subprocess
    import sys
    out = subprocess.run(
        [sys.executable, "-c", "import mnqt.exact as e; print(e.BACKEND)"],
        env={"MNQT_PURE_PYTHON": "1", "PATH": ""}, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


# -- multivariate gcd ------------------------------------------------------------

@given(polys, polys, polys)
def test_gcd_matches_sympy(f, g, h):
    from mnqt.exact.gcd import _gcd_rec, _prim, poly_gcd
    f, g, h = (to_ratfunc(x) for x in (f, g, h))
    assume(not (f.is_zero() or g.is_zero() or h.is_zero()))
    A = (f * h).num.raw
    B = (g * h).num.raw
    expected = sympy.gcd(to_sympy(RatFunc(MPoly(A))), to_sympy(RatFunc(MPoly(B))))
    for ours in (poly_gcd(A, B), _prim(_gcd_rec(A, B))):
        ratio = sympy.cancel(to_sympy(RatFunc(MPoly(ours))) / expected)
        assert ratio.is_number
