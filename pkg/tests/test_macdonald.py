from itertools import product

import pytest

from mnqt import macdonald as mac
from mnqt.exact import ONE, ZERO, RatFunc, q_shifted_factorial, rsum
from mnqt.partitions import (Partition, SkewShape, horizontal_strips_removed, partitions_between,
                             partitions_of, strict_partitions)
from mnqt.symfunc import (MONOMIAL, Alphabet, SymFunc, eval_alphabet, g_element, inner_qt,
                          inner_t, specialize)

q, t, a = (RatFunc.var(v) for v in "qta")
SWAP = {"q": t, "t": q}


def skew_pairs(n_max):
    for n in range(n_max + 1):
        for lam in partitions_of(n):
            for mu in partitions_between((), lam):
                yield lam, mu


# -- construction -------------------------------------------------------------------

def test_first_polynomials():
    assert mac.macdonald_P((1,)) == SymFunc.m((1,))
    c = (1 + q) * (1 - t) / (1 - q * t)
    assert mac.macdonald_P((2,)) == SymFunc.m((2,)) + SymFunc.m((1, 1)) * c
    assert mac.macdonald_P((1, 1)) == SymFunc.m((1, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_q_equals_t_gives_schur(n):
    for lam in partitions_of(n):
        assert specialize(mac.macdonald_P(lam), q=t) == SymFunc.s(lam)


@pytest.mark.parametrize("n", range(1, 6))
def test_unitriangular_in_dominance(n):
    for lam in partitions_of(n):
        terms = mac.macdonald_P(lam).terms(MONOMIAL)
        assert terms[lam] == ONE
        assert all(lam.dominates(mu) for mu in terms)


# -- scalars ------------------------------------------------------------------------

def test_scalar_examples():
    assert mac.c_lambda((1,)) == 1 - t
    assert mac.c_prime((1,)) == 1 - q
    for n in range(1, 7):
        assert mac.b_lambda((n,)) == q_shifted_factorial(t, n) / q_shifted_factorial(q, n)


@pytest.mark.parametrize("n", range(1, 7))
def test_norm_two_ways(n):
    for lam in partitions_of(n):
        assert mac.b_lambda(lam) == mac.b_lambda_product(lam)


@pytest.mark.parametrize("n", range(1, 6))
def test_norm_is_inverse_of_self_pairing(n):
    for lam in partitions_of(n):
        P = mac.macdonald_P(lam)
        assert inner_qt(P, P) * mac.b_lambda(lam) == ONE


@pytest.mark.parametrize("n", range(1, 7))
def test_dual_arm_leg_product_swaps_q_and_t(n):
    for lam in partitions_of(n):
        assert mac.c_prime(lam) == mac.c_lambda(lam.conjugate).substitute(**SWAP)


def test_dual_arm_leg_product_without_swap_fails():
    lam = Partition((2,))
    assert mac.c_prime(lam) != mac.c_lambda(lam.conjugate)


# -- structure coefficients ------------------------------------------------------------

def test_structure_coefficient_examples():
    assert mac.f_coeff((2, 1), (2, 1), ()) == ONE
    assert mac.f_coeff((2,), (1,), (1,)) == ONE
    c = (1 + q) * (1 - t) / (1 - q * t)
    assert mac.f_coeff((1, 1), (1,), (1,)) == 2 - c


@pytest.mark.parametrize("mu,nu", [((1,), (1,)), ((2,), (1,)), ((1, 1), (2,)), ((2, 1), (1,)),
                                   ((2,), (2,))])
def test_structure_coefficients_rebuild_products(mu, nu):
    n = sum(mu) + sum(nu)
    rebuilt = SymFunc.zero()
    for lam in partitions_of(n):
        rebuilt = rebuilt + mac.macdonald_P(lam) * mac.f_coeff(lam, mu, nu)
    assert rebuilt == mac.macdonald_P(mu) * mac.macdonald_P(nu)


def test_skew_outside_is_zero():
    assert mac.skew_Q((2,), (1, 1)).is_zero()


# -- Pieri coefficients ------------------------------------------------------------------

def test_pieri_coefficient_edges():
    assert mac.phi((3, 1), (3, 1)) == ONE
    assert mac.psi_prime((2,), ()) == ZERO
    assert mac.phi((1, 1), ()) == ZERO


@pytest.mark.parametrize("mu,r", [((), 2), ((1,), 1), ((1,), 2), ((2,), 2), ((2, 1), 2), ((1, 1), 3)])
def test_row_pieri_rule(mu, r):
    mu = Partition(mu)
    lhs = mac.macdonald_P(mu) * g_element(r)
    rhs = SymFunc.zero()
    for lam in partitions_of(mu.size + r):
        if lam.contains(mu):
            rhs = rhs + mac.macdonald_P(lam) * mac.phi(lam, mu)
    assert lhs == rhs


@pytest.mark.parametrize("mu,r", [((), 2), ((1,), 1), ((2,), 2), ((2, 1), 2), ((1, 1), 1)])
def test_column_pieri_rule(mu, r):
    mu = Partition(mu)
    lhs = mac.macdonald_P(mu) * SymFunc.s((1,) * r)
    rhs = SymFunc.zero()
    for lam in partitions_of(mu.size + r):
        if lam.contains(mu):
            rhs = rhs + mac.macdonald_P(lam) * mac.psi_prime(lam, mu)
    assert lhs == rhs


# -- alphabet evaluations -----------------------------------------------------------------

def test_principal_evaluation_matches_alphabet():
    alphabet = Alphabet.ratio(q / t, t)
    for lam, mu in skew_pairs(4):
        assert mac.sk_qt(lam, mu) == eval_alphabet(mac.skew_Q(lam, mu), alphabet), (lam, mu)


def test_printed_product_form_fails_on_hook():
    alphabet = Alphabet.ratio(q / t, t)
    lam = Partition((2, 1))
    assert mac.sk_qt_product(lam, ()) != eval_alphabet(mac.macdonald_Q(lam), alphabet)
    rect = Partition((2, 2))
    assert mac.sk_qt_product(rect, ()) == eval_alphabet(mac.macdonald_Q(rect), alphabet)


def test_a_minus_one_examples():
    assert mac.skew_eval_a_minus_1((3, 1), (3, 1)) == ONE
    assert mac.skew_eval_a_minus_1((1,), ()) == (1 - t) / (1 - q) * (a - 1)


def test_a_minus_one_against_alphabet():
    alphabet = Alphabet.difference(a, 1)
    for lam, mu in skew_pairs(4):
        assert mac.skew_eval_a_minus_1(lam, mu) == eval_alphabet(mac.skew_Q(lam, mu), alphabet)


def test_derivative_closed_form():
    from mnqt.exact import derivative_at_a1
    for lam, mu in skew_pairs(4):
        assert mac.skew_eval_a_minus_1_derivative(lam, mu) == \
            derivative_at_a1(mac.skew_eval_a_minus_1(lam, mu))


def test_eta_sum_is_the_negative_unit_alphabet():
    minus_one = Alphabet.constant(-1)
    for lam, mu in skew_pairs(4):
        assert mac.q_minus1_eta_sum(lam, mu) == eval_alphabet(mac.skew_Q(lam, mu), minus_one)


def test_eta_sum_is_not_the_singleton_minus_one():
    singleton = Alphabet.singleton(-1)
    mismatches = [(lam, mu) for lam, mu in skew_pairs(3)
                  if mac.q_minus1_eta_sum(lam, mu) != eval_alphabet(mac.skew_Q(lam, mu), singleton)]
    assert mismatches


def test_binomial_examples():
    assert mac.qt_binomial((2, 1), (2, 1)) == ONE
    assert mac.qt_binomial((1,), ()) == ONE
    assert mac.qt_binomial((1, 1), (2,)) == ZERO


def test_binomial_row_case_is_gaussian():
    from mnqt.exact import q_binomial
    for n in range(1, 6):
        for k in range(n + 1):
            assert mac.qt_binomial((n,), (k,)) == q_binomial(n, k), (n, k)


# -- Hall-Littlewood and Schur Q ------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 6))
def test_q_zero_gives_hall_littlewood(n):
    for lam in partitions_of(n):
        assert specialize(mac.macdonald_P(lam), q=0) == mac.hall_littlewood_P(lam)


@pytest.mark.parametrize("n", range(1, 6))
def test_hall_littlewood_limits_and_orthogonality(n):
    parts = partitions_of(n)
    for lam in parts:
        P = mac.hall_littlewood_P(lam)
        assert specialize(P, t=0) == SymFunc.s(lam)
        assert specialize(P, t=1) == SymFunc.m(lam)
    for lam, mu in product(parts, parts):
        v = inner_t(mac.hall_littlewood_P(lam), mac.hall_littlewood_Q(mu))
        assert v == (ONE if lam == mu else ZERO)


def test_schur_Q_examples():
    # Q_(n) = 2 * sum over hooks of Schur functions, Q_(2,1) = Q_2 Q_1 - 2 Q_3
    Q = mac.schur_Q
    assert Q((1,)) == SymFunc.p((1,)) * 2
    assert Q((2, 1)) == Q((2,)) * Q((1,)) - Q((3,)) * 2
    with pytest.raises(ValueError, match="1,1"):
        Q((1, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_schur_Q_uses_only_odd_power_sums(n):
    for lam in strict_partitions(n):
        assert all(all(x % 2 for x in rho) for rho in mac.schur_Q(lam).power_terms())


def test_table_json_shape():
    doc = mac.table_json(3, "P")
    assert doc["degree"] == 3 and set(doc["entries"]) == {"3", "2,1", "1,1,1"}
    assert set(mac.table_json(3, "schur-Q")["entries"]) == {"3", "2,1"}
