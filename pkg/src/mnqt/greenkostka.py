"""(q,t)-Green polynomials and (q,t)-Kostka polynomials.

Each quantity has a direct definition (coefficient extraction or an inner
product) and one or more recursive formulas that are checked against it.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exact import ONE, ZERO, RatFunc, q_binomial, q_shifted_factorial, rprod, rsum
from .macdonald import (c_prime, macdonald_J, macdonald_Q, qt_binomial,
                        skew_eval_a_minus_1_derivative)
from .partitions import (Composition, Partition, SkewShape, character,
                         major_index, partitions_of, standard_tableaux,
                         vertical_strips_removed)
from .symfunc import POWER, SymFunc, check_degree, inner_t

Q_VAR = RatFunc.var("q")
T_VAR = RatFunc.var("t")
A_VAR = RatFunc.var("a")

GREEN_METHODS = ("direct", "iterative")
KOSTKA_METHODS = ("direct", "iter1", "binomial", "iter2", "via-green")


def _one_minus_t(k):
    return RatFunc.one_minus_monomial(et=k)


def _one_minus_q(k):
    return RatFunc.one_minus_monomial(eq=k)


# -- Green polynomials -----------------------------------------------------------

@lru_cache(maxsize=None)
def green_direct(lam, mu):
    """X^lam_mu = z_mu [p_mu] J_lam / prod_i (1 - t^{mu_i})."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return ZERO
    check_degree(lam.size)
    c = macdonald_J(lam).coefficient(mu, POWER)
    if c.is_zero():
        return ZERO
    return c * mu.z / rprod([_one_minus_t(x) for x in mu])


@lru_cache(maxsize=None)
def green_iterative(lam, mu):
    """Recursion on the first part of mu through d/da Q_{lam/rho}(a - 1) at a = 1."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return ZERO
    if not mu:
        return ONE
    check_degree(lam.size)
    rest = mu.remove_first()
    scale = c_prime(lam) / _one_minus_t(mu[0])
    terms = []
    for rho in partitions_of(rest.size):
        if not lam.contains(rho):
            continue
        below = green_iterative(rho, rest)
        if below.is_zero():
            continue
        deriv = skew_eval_a_minus_1_derivative(lam, rho)
        if not deriv.is_zero():
            terms.append(deriv * below / c_prime(rho))
    return scale * rsum(terms)


def green_reconstruct(lam, method="direct"):
    """sum_mu z_mu^{-1} X^lam_mu p_mu prod(1 - t^{mu_i}); should equal J_lam."""
    lam = Partition(lam)
    fn = green_direct if method == "direct" else green_iterative
    out = {}
    for mu in partitions_of(lam.size):
        x = fn(lam, mu)
        if not x.is_zero():
            out[mu] = x * rprod([_one_minus_t(p) for p in mu]) / mu.z
    return SymFunc(out)


# -- Kostka: direct and first iteration ---------------------------------------

@lru_cache(maxsize=None)
def kostka_direct(lam, mu):
    """K_{lam mu} = <J_mu, s_lam>_t."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return ZERO
    check_degree(lam.size)
    return inner_t(macdonald_J(mu), SymFunc.s(lam))


def kostka_from_Q(lam, mu):
    """The same inner product written as c'_mu <Q_mu, s_lam>_t."""
    lam, mu = Partition(lam), Partition(mu)
    return c_prime(mu) * inner_t(macdonald_Q(mu), SymFunc.s(lam))


@lru_cache(maxsize=None)
def sqsupset_successors(lam):
    """All rho with lam^{[1]}/rho a vertical strip."""
    return tuple(vertical_strips_removed(Partition(lam).remove_first()))


def _sign(k):
    return -1 if k % 2 else 1


@lru_cache(maxsize=None)
def kostka_iter1(lam, mu):
    """Iteration on the length of lam via generalized (q,t)-binomials."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return ZERO
    if not lam:
        return ONE
    head = lam.remove_first()
    terms = []
    for rho in sqsupset_successors(lam):
        sign = _sign(head.size - rho.size)
        for tau in partitions_of(rho.size):
            if not mu.contains(tau):
                continue
            k = kostka_iter1(rho, tau)
            if k.is_zero():
                continue
            terms.append(qt_binomial(mu, tau) * k
                         * RatFunc.monomial(sign, 0, mu.n - tau.n))
    return rsum(terms)


def _lambda_chains(lam):
    """Chains lam = l0 ⊐ l1 ⊐ ... ⊐ lr = empty, with r >= 1."""
    lam = Partition(lam)
    if not lam:
        return [()]
    out = []
    for rho in sqsupset_successors(lam):
        for tail in _lambda_chains(rho):
            out.append((lam,) + tail)
    return out


def _mu_chains(mu, sizes):
    """Chains mu = m0 ⊃ m1 ⊃ ... with |m_i| = sizes[i]."""
    if not sizes:
        return [()]
    out = []
    for nxt in partitions_of(sizes[0]):
        if mu.contains(nxt):
            for tail in _mu_chains(nxt, sizes[1:]):
                out.append((nxt,) + tail)
    return out


@lru_cache(maxsize=None)
def kostka_binomial(lam, mu):
    """Closed sum over pairs of chains of products of (q,t)-binomials."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return ZERO
    if not lam:
        return ONE
    terms = []
    for chain in _lambda_chains(lam):
        steps = chain + (Partition(()),)
        width = sum(p.part(1) for p in steps)
        sizes = tuple(p.size for p in steps[1:])
        for mchain in _mu_chains(mu, sizes):
            full = (mu,) + mchain
            terms.append(rprod([qt_binomial(full[i], full[i + 1])
                                for i in range(len(full) - 1)]) * _sign(width))
    return rsum(terms) * RatFunc.monomial(_sign(lam.size), 0, mu.n)


# -- Lassalle-Schlosser coefficients and the second iteration -----------------

def _poch(x, k):
    return q_shifted_factorial(x, k)


def _det_cofactor(matrix):
    n = len(matrix)
    if n == 0:
        return ONE
    if n == 1:
        return matrix[0][0]
    terms = []
    for j in range(n):
        if not matrix[0][j].is_zero():
            minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
            terms.append(matrix[0][j] * _det_cofactor(minor) * _sign(j))
    return rsum(terms)


def _det(matrix):
    """Determinant: division-free cofactor expansion up to 4x4, elimination
    over the rational function field beyond."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n <= 4:
        return _det_cofactor(rows)
    out = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if not rows[r][col].is_zero()), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            out = -out
        head = rows[col][col]
        out = out * head
        for r in range(col + 1, n):
            if rows[r][col].is_zero():
                continue
            factor = rows[r][col] / head
            rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return out


def ls_coefficient(theta, u):
    """Lassalle-Schlosser coefficient C_theta(u) for monomials u_1..u_n.

    Uses v_i = q^{theta_i} u_i and the Vandermonde prod_{i<j}(v_i - v_j).
    When theta_i = 0 the factor (u_i - v_i) vanishes, so the second term of
    row i is dropped without evaluating (1 - v_i).
    """
    theta = tuple(theta)
    n = len(theta)
    if len(u) != n:
        raise ValueError("theta and u differ in length")
    v = [u[i] * Q_VAR ** theta[i] for i in range(n)]
    if len(set(v)) != n:
        raise ValueError("coincident v values")
    factors = []
    for k in range(n):
        th = theta[k]
        factors.append(T_VAR ** th * _poch(Q_VAR / T_VAR, th) / _poch(Q_VAR, th)
                       * _poch(Q_VAR * u[k], th) / _poch(Q_VAR * T_VAR * u[k], th))
    for i in range(n):
        for j in range(i + 1, n):
            th = theta[i]
            factors.append(_poch(Q_VAR * u[i] / (T_VAR * u[j]), th)
                           / _poch(Q_VAR * u[i] / u[j], th)
                           * _poch(T_VAR * u[i] / v[j], th)
                           / _poch(u[i] / v[j], th))
    rows = []
    for i in range(n):
        if theta[i] == 0:
            second = ZERO
        else:
            second = (1 - T_VAR * v[i]) / (1 - v[i]) * rprod(
                [(u[k] - v[i]) / (T_VAR * u[k] - v[i]) for k in range(n)])
        rows.append([v[i] ** (n - j - 1) * (1 - T_VAR ** j * second) for j in range(n)])
    vandermonde = rprod([v[i] - v[j] for i in range(n) for j in range(i + 1, n)])
    return rprod(factors) * _det(rows) / vandermonde


def ls_u(mu):
    """u_i = q^{mu_i - mu_{l+1}} t^{l-i} for l + 1 = length of mu."""
    mu = Partition(mu)
    l = len(mu) - 1
    last = mu[-1]
    return [RatFunc.monomial(1, mu[i] - last, l - 1 - i) for i in range(l)]


@lru_cache(maxsize=None)
def ls_coefficient_at(mu, theta):
    """C_theta(u(mu)), evaluated through the generic point u_k a^{k+1}, a -> 1.

    The perturbation keeps every v_i, t u_k and 1 apart, so no factor is
    0/0; setting a = 1 after reduction gives the value at the special point.
    """
    mu = Partition(mu)
    u = ls_u(mu)
    generic = [u[k] * A_VAR ** (k + 1) for k in range(len(u))]
    return ls_coefficient(theta, generic).specialize("a", 1)


def compositions_bounded(length, total):
    """All theta in N^length with |theta| <= total."""
    if length == 0:
        return [()]
    out = []
    for first in range(total + 1):
        for rest in compositions_bounded(length - 1, total - first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def fake_degree(lam, rho=()):
    """sum over standard tableaux T of lam/rho of q^{maj(T)}."""
    shape = SkewShape(lam, rho)
    counts = {}
    for tab in standard_tableaux(shape):
        m = major_index(tab)
        counts[m] = counts.get(m, 0) + 1
    return rsum([RatFunc.monomial(c, m, 0) for m, c in counts.items()])


def schur_skew_geometric_q(lam, rho=()):
    """s_{lam/rho}(1/(1-q)) = f^{lam/rho}(q)/(q;q)_n."""
    n = Partition(lam).size - Partition(rho).size
    return fake_degree(lam, rho) / _poch(Q_VAR, n)


def schur_skew_geometric_q_det(lam, rho=()):
    """Jacobi-Trudi route: det(1/(q;q)_{lam_i - rho_j - i + j})."""
    lam, rho = Partition(lam), Partition(rho)
    l = len(lam)

    def entry(i, j):
        k = lam.part(i + 1) - rho.part(j + 1) - i + j
        return ZERO if k < 0 else ONE / _poch(Q_VAR, k)
    return _det([[entry(i, j) for j in range(l)] for i in range(l)])


@lru_cache(maxsize=None)
def kostka_iter2(lam, mu):
    """Iteration on the length of mu through the inverse Pieri coefficients."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return ZERO
    if not mu:
        return ONE if not lam else ZERO
    l = len(mu) - 1
    last = mu[-1]
    terms = []
    for theta in compositions_bounded(l, last):
        tau = Composition(tuple(mu[i] + theta[i] for i in range(l)))
        if not tau.is_partition():
            continue
        tau = Partition(tau)
        c = ls_coefficient_at(mu, theta)
        if c.is_zero():
            continue
        scale = c * c_prime(mu) / c_prime(tau)
        for rho in partitions_of(lam.size - last + sum(theta)):
            if not lam.contains(rho):
                continue
            k = kostka_iter2(rho, tau)
            if k.is_zero():
                continue
            terms.append(scale * schur_skew_geometric_q(lam, rho) * k)
    return rsum(terms)


# -- q = 0: Kostka-Foulkes ----------------------------------------------------

def _t_binomial(n, k):
    return q_binomial(n, k, T_VAR)


def _n_skew(outer, inner):
    oc, ic = outer.conjugate, inner.conjugate
    return sum((oc.part(j) - ic.part(j)) * (oc.part(j) - ic.part(j) - 1) // 2
               for j in range(1, outer.part(1) + 1))


def t_binomial_weight(mu, tau):
    """t^{n(mu/tau)} prod_j [mu'_j - tau'_{j+1}; tau'_j - tau'_{j+1}]_t."""
    mc, tc = mu.conjugate, tau.conjugate
    out = RatFunc.monomial(1, 0, _n_skew(mu, tau))
    for j in range(1, mu.part(1) + 1):
        out = out * _t_binomial(mc.part(j) - tc.part(j + 1), tc.part(j) - tc.part(j + 1))
    return out


@lru_cache(maxsize=None)
def t_kostka_iter(lam, mu):
    """Kostka-Foulkes K_{lam mu}(t) from the q = 0 iteration."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return ZERO
    if not lam:
        return ONE
    head = lam.remove_first()
    terms = []
    for rho in sqsupset_successors(lam):
        sign = _sign(head.size - rho.size)
        for tau in partitions_of(rho.size):
            if mu.contains(tau):
                k = t_kostka_iter(rho, tau)
                if not k.is_zero():
                    terms.append(t_binomial_weight(mu, tau) * k * sign)
    return rsum(terms)


# -- Kostka through Green polynomials and characters --------------------------

@lru_cache(maxsize=None)
def kostka_via_green(lam, mu):
    """sum_rho z_rho^{-1} chi^lam_rho X^mu_rho."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return ZERO
    terms = []
    for rho in partitions_of(lam.size):
        chi = character(lam, rho)
        if chi:
            terms.append(green_direct(mu, rho) * Fraction(chi, rho.z))
    return rsum(terms)


def kostka_via_green_transposed(lam, mu):
    """The other index placement, sum_rho z_rho^{-1} chi^mu_rho X^lam_rho."""
    return kostka_via_green(mu, lam)


KOSTKA_FUNCTIONS = {
    "direct": kostka_direct,
    "iter1": kostka_iter1,
    "binomial": kostka_binomial,
    "iter2": kostka_iter2,
    "via-green": kostka_via_green,
}

GREEN_FUNCTIONS = {"direct": green_direct, "iterative": green_iterative}


# -- tables ---------------------------------------------------------------------

@dataclass
class Table:
    """Square table over partitions of n: entries[(row, col)] -> RatFunc."""
    kind: str
    degree: int
    method: str
    entries: dict = field(default_factory=dict)

    def partitions(self):
        return partitions_of(self.degree)

    def to_json_obj(self):
        parts = self.partitions()
        return {"kind": self.kind, "degree": self.degree, "method": self.method,
                "partitions": [str(p) for p in parts],
                "matrix": [[str(self.entries[(r, c)]) for c in parts] for r in parts]}


def _fill(kind, fn, n, method, threads):
    check_degree(n)
    parts = partitions_of(n)
    pairs = [(r, c) for r in parts for c in parts]
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(lambda rc: fn(*rc), pairs))
    else:
        values = [fn(r, c) for r, c in pairs]
    return Table(kind, n, method, dict(zip(pairs, values)))


def kostka_table(n, method="direct", threads=1):
    """K_{lam mu}; rows lam, columns mu."""
    if method not in KOSTKA_FUNCTIONS:
        raise ValueError("unknown method %r" % method)
    return _fill("kostka", KOSTKA_FUNCTIONS[method], n, method, threads)


def green_table(n, method="direct", threads=1):
    """X^lam_mu; rows lam, columns mu."""
    if method not in GREEN_FUNCTIONS:
        raise ValueError("unknown method %r" % method)
    return _fill("green", GREEN_FUNCTIONS[method], n, method, threads)


__all__ = [
    "green_direct", "green_iterative", "green_reconstruct", "kostka_direct",
    "kostka_from_Q", "kostka_iter1", "kostka_binomial", "ls_coefficient",
    "ls_coefficient_at", "ls_u", "kostka_iter2", "fake_degree",
    "schur_skew_geometric_q", "schur_skew_geometric_q_det", "t_kostka_iter",
    "t_binomial_weight", "kostka_via_green", "kostka_via_green_transposed",
    "kostka_table", "green_table", "Table", "KOSTKA_METHODS", "GREEN_METHODS",
    "compositions_bounded", "sqsupset_successors",
]
