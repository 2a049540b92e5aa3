import pytest

from mnqt import greenkostka as gk
from mnqt.exact import ONE, ZERO, RatFunc, q_shifted_factorial
from mnqt.macdonald import hall_littlewood_Q, macdonald_J
from mnqt.partitions import Partition, SkewShape, partitions_of, standard_tableaux
from mnqt.symfunc import MONOMIAL, POWER, SymFunc

q, t = RatFunc.var("q"), RatFunc.var("t")
SWAP = {"q": t, "t": q}
P2, P11 = Partition((2,)), Partition((1, 1))


def at(value, **point):
    for var, v in point.items():
        value = value.specialize(var, v)
    return value


# -- Green polynomials ---------------------------------------------------------------

def test_green_first_value():
    assert gk.green_direct((1,), (1,)) == ONE
    assert gk.green_iterative((1,), (1,)) == ONE


def test_green_size_mismatch_is_zero():
    assert gk.green_direct((2,), (1,)) == ZERO


@pytest.mark.parametrize("n", range(1, 5))
def test_green_reconstructs_integral_form(n):
    for lam in partitions_of(n):
        assert gk.green_reconstruct(lam) == macdonald_J(lam)


@pytest.mark.parametrize("n", range(1, 5))
def test_green_at_q_zero_is_hall_littlewood(n):
    for lam in partitions_of(n):
        Q = hall_littlewood_Q(lam)
        for mu in partitions_of(n):
            classical = Q.coefficient(mu, POWER) * mu.z
            for x in mu:
                classical = classical / (1 - t ** x)
            assert at(gk.green_direct(lam, mu), q=0) == classical


def test_green_table_shape():
    table = gk.green_table(3, "iterative")
    assert len(table.entries) == 9
    doc = table.to_json_obj()
    assert doc["partitions"] == ["3", "2,1", "1,1,1"]
    assert doc["matrix"][0][0] == str(gk.green_direct((3,), (3,)))
    with pytest.raises(ValueError):
        gk.green_table(3, "nope")


# -- Kostka polynomials ----------------------------------------------------------------

def test_kostka_degree_two():
    expected = {(P2, P2): ONE, (P2, P11): t, (P11, P2): q, (P11, P11): ONE}
    for method in gk.KOSTKA_METHODS:
        for (lam, mu), value in expected.items():
            assert gk.KOSTKA_FUNCTIONS[method](lam, mu) == value, (method, lam, mu)


def test_kostka_degree_one():
    assert gk.kostka_direct((1,), (1,)) == ONE


@pytest.mark.parametrize("n", range(1, 6))
def test_kostka_at_one_one_counts_tableaux(n):
    for lam in partitions_of(n):
        f = len(standard_tableaux(SkewShape(lam)))
        for mu in partitions_of(n):
            assert at(gk.kostka_direct(lam, mu), q=1, t=1) == RatFunc(f)


@pytest.mark.parametrize("n", range(1, 6))
def test_kostka_at_zero_one_counts_semistandard_tableaux(n):
    for lam in partitions_of(n):
        s = SymFunc.s(lam)
        for mu in partitions_of(n):
            assert at(gk.kostka_direct(lam, mu), q=0, t=1) == s.coefficient(mu, MONOMIAL)


@pytest.mark.parametrize("n", range(1, 6))
def test_kostka_conjugation_symmetry(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            swapped = gk.kostka_direct(lam.conjugate, mu.conjugate).substitute(**SWAP)
            assert gk.kostka_direct(lam, mu) == swapped


def test_kostka_from_Q_agrees():
    for lam in partitions_of(4):
        for mu in partitions_of(4):
            assert gk.kostka_from_Q(lam, mu) == gk.kostka_direct(lam, mu)


def test_transposed_green_placement_fails():
    mismatches = [(lam, mu) for lam in partitions_of(3) for mu in partitions_of(3)
                  if gk.kostka_via_green_transposed(lam, mu) != gk.kostka_direct(lam, mu)]
    assert mismatches


def test_kostka_table_rejects_unknown_method():
    with pytest.raises(ValueError):
        gk.kostka_table(2, "nope")


# -- Lassalle-Schlosser coefficients -------------------------------------------------------

def test_ls_coefficient_at_zero_theta():
    for mu in [(2, 1), (3, 1, 1), (2, 2, 1)]:
        length = len(mu) - 1
        assert gk.ls_coefficient_at(mu, (0,) * length) == ONE


def test_ls_coefficient_guards_coincident_values():
    with pytest.raises(ValueError):
        gk.ls_coefficient((0, 0), [q, q])


# -- fake degrees ---------------------------------------------------------------------

def test_fake_degree_examples():
    for n in range(1, 7):
        assert gk.fake_degree((n,)) == ONE
    assert gk.fake_degree((1, 1)) == q
    assert gk.fake_degree((1, 1, 1)) == q ** 3


@pytest.mark.parametrize("n", range(1, 7))
def test_fake_degree_at_one_counts_tableaux(n):
    for lam in partitions_of(n):
        assert gk.fake_degree(lam).specialize("q", 1) == \
            RatFunc(len(standard_tableaux(SkewShape(lam))))


def test_fake_degree_routes_on_skew_shapes():
    for lam, rho in [((3, 2), (1,)), ((3, 3, 1), (2, 1)), ((4, 2, 2), (2, 2))]:
        by_tableaux = gk.schur_skew_geometric_q(lam, rho)
        assert by_tableaux == gk.schur_skew_geometric_q_det(lam, rho)


def test_fake_degree_hook_formula():
    # q^{n(lam)} [n]_q! / prod over cells [hook]_q
    for lam in partitions_of(5):
        value = RatFunc.monomial(1, lam.n, 0) * q_shifted_factorial(q, lam.size)
        for i, j in lam.cells():
            value = value / (1 - q ** (lam.arm(i, j) + lam.leg(i, j) + 1))
        assert gk.fake_degree(lam) == value
