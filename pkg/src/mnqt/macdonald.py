"""Macdonald polynomials and the closed forms built from them.

P is constructed by Gram-Schmidt in the monomial basis: the P of a
partition is its monomial minus its projections onto the P of all
dominance-smaller partitions, with norms given by the arm/leg product.
Hall-Littlewood functions use the same routine with the q = 0 form.
"""
import threading
from functools import lru_cache

from .exact import ONE, ZERO, RatFunc, rprod, rsum
from .partitions import (Partition, SkewShape, horizontal_strips_removed,
                         partitions_of, vertical_strips_removed)
from .symfunc import (MONOMIAL, POWER, Alphabet, SymFunc, _M_TO_P, check_degree,
                      eval_alphabet, inner_qt, multiply, perp, specialize, z_qt, z_t)

GENERIC = "qt"
HALL_LITTLEWOOD = "t"

@lru_cache(maxsize=None)
def binomial_factor(eq, et, sign=1):
    """1 - sign * q^eq * t^et, with possibly negative exponents."""
    return ONE - RatFunc.monomial(sign, eq, et)


def _qt_mono(eq, et):
    return RatFunc.monomial(1, eq, et)


# -- scalars -----------------------------------------------------------------


def _arm_leg_product(lam, arm_shift, leg_shift, q_on=True):
    lam = Partition(lam)
    out = ONE
    for i, j in lam.cells():
        a = lam.arm(i, j) + arm_shift
        l = lam.leg(i, j) + leg_shift
        if not q_on and a:
            continue
        out = out * binomial_factor(a if q_on else 0, l)
    return out


@lru_cache(maxsize=None)
def c_lambda(lam):
    """prod over cells (1 - q^arm t^(leg+1))."""
    return _arm_leg_product(lam, 0, 1)


@lru_cache(maxsize=None)
def c_prime(lam):
    """prod over cells (1 - q^(arm+1) t^leg)."""
    return _arm_leg_product(lam, 1, 0)


@lru_cache(maxsize=None)
def b_lambda(lam):
    """b = c / c' = 1 / <P, P>."""
    return c_lambda(lam) / c_prime(lam)


def pochhammer(x, n):
    """(x; q)_n for any integer n, with (x; q)_{-m} = 1 / (x q^{-m}; q)_m."""
    q = RatFunc.var("q")
    if n >= 0:
        out = ONE
        for k in range(n):
            out = out * (ONE - x * q ** k)
        return out
    return ONE / pochhammer(x * q ** n, -n)


def _poch_mono(eq, et, n):
    """(q^eq t^et; q)_n for integer n using cached binomial factors."""
    if n >= 0:
        out = ONE
        for k in range(n):
            out = out * binomial_factor(eq + k, et)
        return out
    den = ONE
    for k in range(n, 0):
        den = den * binomial_factor(eq + k, et)
    return ONE / den


def _poch_ratio(eq, et, upper, lower):
    """(x;q)_upper / (x;q)_lower for x = q^eq t^et, as a finite product."""
    out = ONE
    if upper >= lower:
        for k in range(lower, upper):
            out = out * binomial_factor(eq + k, et)
        return out
    for k in range(upper, lower):
        out = out * binomial_factor(eq + k, et)
    return ONE / out


@lru_cache(maxsize=None)
def b_lambda_product(lam):
    """Norm via the row-pair product of shifted factorials (independent of arms)."""
    lam = Partition(lam)
    l = len(lam)
    out = ONE
    for i in range(1, l + 1):
        for j in range(i, l + 1):
            n = lam.part(j) - lam.part(j + 1)
            d = lam.part(i) - lam.part(j)
            out = out * _poch_mono(d, j - i + 1, n) / _poch_mono(d + 1, j - i, n)
    return out


def scalars(lam):
    """(b, c, c', z(q,t)) for a partition."""
    lam = Partition(lam)
    return b_lambda(lam), c_lambda(lam), c_prime(lam), z_qt(lam)


# -- Gram-Schmidt ------------------------------------------------------------


class _Table:
    """P in the monomial basis for one degree and one inner product."""

    def __init__(self, n, form):
        self.n = n
        self.form = form
        self.parts = list(partitions_of(n))  # reverse lex: dominance-larger first
        minv = _M_TO_P(n)
        weight = z_qt if form == GENERIC else z_t
        zs = {rho: weight(rho) for rho in self.parts}
        self.gram = {}
        for i, lam in enumerate(self.parts):
            for nu in self.parts[i:]:
                terms = []
                row_l, row_n = minv[lam], minv[nu]
                for rho, c in row_l.items():
                    d = row_n.get(rho)
                    if d:
                        terms.append(zs[rho] * (c * d))
                v = rsum(terms)
                self.gram[(lam, nu)] = v
                self.gram[(nu, lam)] = v
        self.coeffs = {}
        for lam in reversed(self.parts):
            self.coeffs[lam] = self._build(lam)

    def _norm_inverse(self, mu):
        if self.form == GENERIC:
            return b_lambda(mu)
        return b_lambda(mu).specialize("q", 0)

    def _build(self, lam):
        out = {lam: ONE}
        projections = []
        for mu in self.parts:
            if mu == lam or not lam.dominates(mu):
                continue
            pm = self.coeffs[mu]
            inner = rsum([c * self.gram[(lam, nu)] for nu, c in pm.items()])
            if inner.is_zero():
                continue
            projections.append((mu, inner * self._norm_inverse(mu)))
        acc = {}
        for mu, coef in projections:
            for nu, c in self.coeffs[mu].items():
                acc.setdefault(nu, []).append(coef * c)
        for nu, vals in acc.items():
            v = -rsum(vals)
            if not v.is_zero():
                out[nu] = v
        return out


_tables = {}
_tables_lock = threading.Lock()

def _table(n, form):
    key = (n, form)
    tab = _tables.get(key)
    if tab is None:
        check_degree(n)
        tab = _Table(n, form)
        with _tables_lock:
            tab = _tables.setdefault(key, tab)
    return tab


def monomial_coefficients(lam, form=GENERIC):
    """{mu: u} with P = sum u m_mu, unitriangular in dominance."""
    lam = Partition(lam)
    return dict(_table(lam.size, form).coeffs[lam])


@lru_cache(maxsize=None)
def macdonald_P(lam):
    lam = Partition(lam)
    return SymFunc(monomial_coefficients(lam), MONOMIAL)


@lru_cache(maxsize=None)
def macdonald_Q(lam):
    lam = Partition(lam)
    return (macdonald_P(lam) * b_lambda(lam)).to(MONOMIAL)


@lru_cache(maxsize=None)
def macdonald_J(lam):
    lam = Partition(lam)
    return (macdonald_P(lam) * c_lambda(lam)).to(MONOMIAL)


@lru_cache(maxsize=None)
def hall_littlewood_P(lam):
    """P(X; t), built by Gram-Schmidt for the q = 0 form."""
    lam = Partition(lam)
    return SymFunc(monomial_coefficients(lam, HALL_LITTLEWOOD), MONOMIAL)


def _hl_b(lam):
    return b_lambda(lam).specialize("q", 0)


@lru_cache(maxsize=None)
def hall_littlewood_Q(lam):
    lam = Partition(lam)
    return (hall_littlewood_P(lam) * _hl_b(lam)).to(MONOMIAL)


@lru_cache(maxsize=None)
def schur_Q(lam):
    """Schur Q-function: Hall-Littlewood Q at t = -1 (strict partitions)."""
    lam = Partition(lam)
    if not lam.is_strict():
        raise ValueError("Schur Q-functions need a strict partition, got %s" % (lam,))
    return specialize(hall_littlewood_Q(lam), t=-1)


def schur_P(lam):
    lam = Partition(lam)
    return schur_Q(lam) / (2 ** len(lam))


def basis_element(kind, lam):
    kind = kind.upper() if len(kind) == 1 else kind
    table = {
        "P": macdonald_P, "Q": macdonald_Q, "J": macdonald_J,
        "HL-P": hall_littlewood_P, "HL-Q": hall_littlewood_Q,
        "SCHUR-Q": schur_Q, "S": SymFunc.s,
    }
    try:
        return table[kind.upper()](lam)
    except KeyError:
        raise ValueError("unknown basis %r" % kind) from None


# -- structure coefficients and skew functions ------------------------------------


@lru_cache(maxsize=None)
def f_coeff(lam, mu, nu):
    """Coefficient of P_lam in P_mu P_nu, i.e. <Q_lam, P_mu P_nu>."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        return ZERO
    return inner_qt(macdonald_Q(lam), multiply(macdonald_P(mu), macdonald_P(nu)))


@lru_cache(maxsize=None)
def skew_Q(lam, mu):
    """Q_{lam/mu} = P_mu^perp Q_lam; zero when mu is not inside lam."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return SymFunc.zero()
    if not mu:
        return macdonald_Q(lam)
    return perp(macdonald_P(mu), macdonald_Q(lam), "qt").to(POWER)


def skew_P(lam, mu):
    """P_{lam/mu} = Q_{lam/mu} b_mu / b_lam."""
    lam, mu = Partition(lam), Partition(mu)
    return skew_Q(lam, mu) * (b_lambda(mu) / b_lambda(lam))


@lru_cache(maxsize=None)
def skew_Q_hall_littlewood(lam, mu):
    """Q_{lam/mu}(X; t) = P_mu(X;t)^perp Q_lam(X;t) for the t-form."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return SymFunc.zero()
    if not mu:
        return hall_littlewood_Q(lam)
    return perp(hall_littlewood_P(mu), hall_littlewood_Q(lam), "t").to(POWER)


# -- closed forms -------------------------------------------------------------


def _f_ratio(A, B, et):
    """f(q^A t^et) / f(q^B t^et) with f(u) = (tu;q)_inf / (qu;q)_inf."""
    n = A - B
    return _poch_mono(B + 1, et, n) / _poch_mono(B, et + 1, n)


@lru_cache(maxsize=None)
def phi(lam, mu):
    """Horizontal-strip coefficient; zero unless lam/mu is a horizontal strip."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu) or not SkewShape(lam, mu).is_horizontal_strip():
        return ZERO
    l = len(lam)
    out = ONE
    for i in range(1, l + 1):
        for j in range(i, l + 1):
            e = j - i
            out = out * _f_ratio(lam.part(i) - lam.part(j), lam.part(i) - mu.part(j), e)
            out = out * _f_ratio(mu.part(i) - mu.part(j + 1), mu.part(i) - lam.part(j + 1), e)
    return out


@lru_cache(maxsize=None)
def psi_prime(lam, mu):
    """Vertical-strip coefficient; zero unless lam/mu is a vertical strip."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu) or not SkewShape(lam, mu).is_vertical_strip():
        return ZERO
    l = len(lam)
    out = ONE
    for i in range(1, l + 1):
        if lam.part(i) != mu.part(i):
            continue
        for j in range(i + 1, l + 1):
            if lam.part(j) != mu.part(j) + 1:
                continue
            dm = mu.part(i) - mu.part(j)
            dl = lam.part(i) - lam.part(j)
            out = out * binomial_factor(dm, j - i - 1) * binomial_factor(dl, j - i + 1) \
                / (binomial_factor(dm, j - i) * binomial_factor(dl, j - i))
    return out


@lru_cache(maxsize=None)
def sk_qt_product(lam, mu):
    """Product t^{n(lam)-n(mu)} prod_{i,j} of q-shifted factorial ratios.

    This agrees with Q_{lam/mu}((1 - q/t)/(1 - t)) only on some shapes
    (rectangles among them) and fails already for (2,1); it is kept so the
    discrepancy stays testable.  Use ``sk_qt`` for the actual value.
    """
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return ZERO
    l = len(lam)
    out = RatFunc.monomial(1, 0, lam.n - mu.n)
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            li, mi, mj = lam.part(i), mu.part(i), mu.part(j)
            out = out * _poch_ratio(1, j - i - 1, li - mj, mi - mj)
            out = out * _poch_ratio(1, j - i, mi - mj, li - mj)
    return out


@lru_cache(maxsize=None)
def principal_Q(lam):
    """Q_lam((1 - q/t)/(1 - t)) from the arm/leg principal specialization
    b_lam prod_s (t^{l'(s)} - q^{a'(s)+1}/t) / (1 - q^{a(s)} t^{l(s)+1})."""
    lam = Partition(lam)
    num, den = [], []
    for i, j in lam.cells():

        num.append(RatFunc.monomial(1, 0, i - 1) - RatFunc.monomial(1, j, -1))
        den.append(binomial_factor(lam.arm(i, j), lam.leg(i, j) + 1))
    return b_lambda(lam) * rprod(num) / rprod(den)


@lru_cache(maxsize=None)
def sk_qt(lam, mu):
    """Q_{lam/mu} at the alphabet (1 - q/t)/(1 - t).

    Straight shapes use the arm/leg product; a skew shape is expanded as
    sum_nu f^lam_{mu nu} sk_nu.
    """
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return ZERO
    if not mu:
        return principal_Q(lam)
    return rsum([f_coeff(lam, mu, nu) * principal_Q(nu)
                 for nu in partitions_of(lam.size - mu.size)
                 if lam.contains(nu)])


def _monomial_a(power):
    return RatFunc.monomial(1, 0, 0, power)


@lru_cache(maxsize=None)
def q_minus1_eta_sum(nu, mu):
    """Q_{nu/mu} at the negative unit alphabet, as the sum over eta of
    (-1)^{|nu/eta|} t^{|eta/mu|} psi'_{nu/eta} sk_{eta/mu}."""
    nu, mu = Partition(nu), Partition(mu)
    if not nu.contains(mu):
        return ZERO
    terms = []
    for eta in vertical_strips_removed(nu):
        if not eta.contains(mu):
            continue
        sign = -1 if (nu.size - eta.size) % 2 else 1
        terms.append(psi_prime(nu, eta) * sk_qt(eta, mu)
                     * RatFunc.monomial(sign, 0, eta.size - mu.size))
    return rsum(terms)


@lru_cache(maxsize=None)
def skew_eval_a_minus_1(lam, mu):
    """Closed form of Q_{lam/mu} at the alphabet a - 1 (a polynomial in a)."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return ZERO
    terms = []
    for nu in horizontal_strips_removed(lam):
        if not nu.contains(mu):
            continue
        inner = q_minus1_eta_sum(nu, mu)
        if inner.is_zero():
            continue
        terms.append(phi(lam, nu) * inner * _monomial_a(lam.size - nu.size))
    return rsum(terms)


@lru_cache(maxsize=None)
def skew_eval_a_minus_1_derivative(lam, mu):
    """d/da at a = 1 of the closed form: the same sum weighted by |lam/nu|."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return ZERO
    terms = []
    for nu in horizontal_strips_removed(lam):
        k = lam.size - nu.size
        if not k or not nu.contains(mu):
            continue
        inner = q_minus1_eta_sum(nu, mu)
        if not inner.is_zero():
            terms.append(phi(lam, nu) * inner * k)
    return rsum(terms)


def geometric_t():
    return Alphabet.geometric(RatFunc.var("t"), "1/(1-t)")


@lru_cache(maxsize=None)
def qt_binomial(lam, mu):
    """Generalized (q,t)-binomial via t^{n(mu)-n(lam)} (c'_lam/c'_mu) Q_{lam/mu}(1/(1-t))."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return ZERO
    value = eval_alphabet(skew_Q(lam, mu), geometric_t())
    return value * c_prime(lam) / c_prime(mu) * RatFunc.monomial(1, 0, mu.n - lam.n)


def table_json(n, kind="P"):
    """{"degree": n, "basis": kind, "entries": {partition: symfunc-json}}."""
    entries = {}
    for lam in partitions_of(n):
        if kind.upper() == "SCHUR-Q" and not lam.is_strict():
            continue
        f = basis_element(kind, lam)
        entries[str(lam)] = f.to(MONOMIAL).to_json_obj()
    return {"degree": n, "basis": kind, "entries": entries}


__all__ = [
    "macdonald_P", "macdonald_Q", "macdonald_J", "hall_littlewood_P",
    "hall_littlewood_Q", "schur_Q", "schur_P", "b_lambda", "b_lambda_product",
    "c_lambda", "c_prime", "scalars", "f_coeff", "skew_Q", "skew_P",
    "skew_Q_hall_littlewood", "phi", "psi_prime", "sk_qt", "sk_qt_product", "principal_Q", "q_minus1_eta_sum",
    "skew_eval_a_minus_1", "skew_eval_a_minus_1_derivative", "qt_binomial",
    "monomial_coefficients", "pochhammer", "binomial_factor", "table_json",
    "basis_element",
]
