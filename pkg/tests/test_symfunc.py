from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mnqt.exact import ONE, ZERO, RatFunc, q_shifted_factorial
from mnqt.partitions import Partition, partitions_of
from mnqt.symfunc import (MONOMIAL, POWER, SCHUR, Alphabet, DegreeOverflow, SymFunc, convert,
                          eval_alphabet, g_element, inner_hall, inner_qt, perp,
                          plethysm_difference, plethysm_geometric, specialize, truncation,
                          truncation_degree)

q, t, a = (RatFunc.var(v) for v in "qta")
VALUES = (2, -1, 3)


def power_sum_at(values, lam):
    out = 1
    for part in lam:
        out *= sum(v ** part for v in values)
    return out


def monomial_at(values, lam):
    """m_lam at a finite list of numbers by summing distinct rearrangements."""
    exps = list(lam) + [0] * (len(values) - len(lam))
    if len(exps) > len(values):
        return 0
    total = 0
    for perm in set(permutations(exps)):
        term = 1
        for v, e in zip(values, perm):
            term *= v ** e
        total += term
    return total


def schur_at(values, lam):
    """s_lam by brute-force semistandard fillings with entries 1..len(values)."""
    lam = Partition(lam)
    cells = lam.cells()
    n = len(values)
    total = 0
    for filling in product(range(n), repeat=len(cells)):
        f = dict(zip(cells, filling))
        ok = all(f[(i, j)] <= f[(i, j + 1)] for i, j in cells if (i, j + 1) in f) and \
            all(f[(i, j)] < f[(i + 1, j)] for i, j in cells if (i + 1, j) in f)
        if ok:
            term = 1
            for v in filling:
                term *= values[v]
            total += term
    return total


def at_values(f):
    return eval_alphabet(f, Alphabet.finite(VALUES))


# -- bases --------------------------------------------------------------------------

def test_small_conversions():
    assert convert(SymFunc.p((1,)), MONOMIAL).terms() == {Partition((1,)): ONE}
    assert convert(SymFunc.p((2,)), MONOMIAL).terms() == {Partition((2,)): ONE}
    s11 = SymFunc.s((1, 1)).terms(POWER)
    assert s11 == {Partition((1, 1)): RatFunc(Fraction(1, 2)), Partition((2,)): RatFunc(Fraction(-1, 2))}


@pytest.mark.parametrize("n", range(1, 6))
def test_bases_against_three_variable_evaluation(n):
    for lam in partitions_of(n):
        assert at_values(SymFunc.m(lam)) == RatFunc(monomial_at(VALUES, lam))
        assert at_values(SymFunc.s(lam)) == RatFunc(schur_at(VALUES, lam))
        assert at_values(SymFunc.p(lam)) == RatFunc(power_sum_at(VALUES, lam))


@pytest.mark.parametrize("n", range(1, 7))
def test_conversion_round_trips(n):
    for lam in partitions_of(n):
        for basis in (MONOMIAL, SCHUR):
            f = SymFunc({lam: 1}, basis)
            for other in (POWER, MONOMIAL, SCHUR):
                assert convert(convert(f, other), basis).terms() == {lam: ONE}


@pytest.mark.parametrize("n", range(1, 7))
def test_schur_functions_are_orthonormal(n):
    parts = partitions_of(n)
    for lam, mu in product(parts, parts):
        assert inner_hall(SymFunc.s(lam), SymFunc.s(mu)) == (ONE if lam == mu else ZERO)


@given(st.integers(1, 4), st.integers(1, 3))
def test_multiplication_matches_evaluation(i, j):
    f = SymFunc.s(partitions_of(i)[-1])
    g = SymFunc.m(partitions_of(j)[0])
    assert at_values(f * g) == at_values(f) * at_values(g)


def test_json_round_trip():
    f = SymFunc({(2, 1): (1 - q) / (1 - t), (3,): 2}, SCHUR)
    assert SymFunc.from_json(f.to_json()) == f
    assert SymFunc.from_json(f.to_json()).basis == SCHUR


# -- inner products ----------------------------------------------------------------

def test_qt_inner_product_examples():
    p1, p2, p11, p21 = (SymFunc.p(l) for l in [(1,), (2,), (1, 1), (2, 1)])
    assert inner_qt(p1, p1) == (1 - q) / (1 - t)
    assert inner_qt(p21, p21) == 2 * (1 - q ** 2) * (1 - q) / ((1 - t ** 2) * (1 - t))
    assert inner_qt(p2, p11) == ZERO


# -- alphabets ----------------------------------------------------------------------

def test_alphabet_examples():
    x = RatFunc.var("q")
    for n in range(1, 5):
        assert eval_alphabet(SymFunc.p((n,)), Alphabet.singleton(x)) == x ** n
        assert eval_alphabet(SymFunc.p((n,)), Alphabet.difference(a, t)) == a ** n - t ** n


@pytest.mark.parametrize("n", range(1, 8))
def test_row_schur_at_geometric_alphabet(n):
    value = eval_alphabet(SymFunc.s((n,)), Alphabet.geometric(q))
    assert value == ONE / q_shifted_factorial(q, n)


# -- g elements ---------------------------------------------------------------------

def test_g_element_examples():
    assert g_element(0) == SymFunc.one()
    assert g_element(1) == SymFunc.p((1,)) * ((1 - t) / (1 - q))
    for k in range(1, 5):
        assert g_element(k, Alphabet.difference(a, a)).is_zero()


def test_g_elements_multiply_like_a_series():
    # the generating series is an exponential: g(A + B) = g(A) g(B) degreewise
    A, B = Alphabet.singleton(a), Alphabet.constant(-1)
    for k in range(1, 5):
        lhs = g_element(k, A + B)
        rhs = SymFunc.zero()
        for j in range(k + 1):
            rhs = rhs + g_element(j, A) * g_element(k - j, B)
        assert lhs == rhs


# -- adjoints and plethysm -----------------------------------------------------------

def test_perp_examples():
    p1 = SymFunc.p((1,))
    assert perp(p1, p1) == SymFunc.one() * ((1 - q) / (1 - t))
    assert perp(SymFunc.p((2, 1)), SymFunc.p((2,))).is_zero()


@pytest.mark.parametrize("which,form", [("qt", inner_qt), ("hall", inner_hall)])
def test_perp_is_adjoint_to_multiplication(which, form):
    for f_lam, g_lam, h_lam in [((1,), (2,), (2, 1)), ((2,), (1, 1), (3, 1)), ((1, 1), (2, 1), (3, 2))]:
        f, g, h = SymFunc.s(f_lam), SymFunc.m(g_lam), SymFunc.s(h_lam)
        assert form(f * g, h) == form(g, perp(f, h, which))


def test_plethysm_difference_inverts_geometric():
    f = SymFunc.s((2, 1)) + SymFunc.m((3,))
    assert plethysm_difference(plethysm_geometric(f)) == f
    assert plethysm_geometric(plethysm_difference(f, "q"), "q") == f


def test_specialize_reports_pole():
    f = SymFunc.p((2,)) * (ONE / q)
    with pytest.raises(ZeroDivisionError, match=r"p\[2\]"):
        specialize(f, q=0)


def test_truncation_degree_is_enforced():
    assert truncation_degree() == 8
    with truncation(3):
        with pytest.raises(DegreeOverflow):
            g_element(4)
    assert truncation_degree() == 8
