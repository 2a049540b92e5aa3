"""Murnaghan-Nakayama expansions for Macdonald polynomials and their
Hall-Littlewood, Schur and Schur Q specializations.

Every expansion has a companion ``verify_*`` routine that checks the
defining identity by direct multiplication in the power-sum basis.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .exact import ONE, ZERO, RatFunc, exact_divide_a_minus_1, q_binomial, rsum
from .macdonald import (b_lambda, f_coeff, macdonald_P, macdonald_Q, skew_Q,
                        skew_Q_hall_littlewood)
from .partitions import (Partition, ShiftedSkewShape, SkewShape, character,
                         double_strip_decompose, gbs_weight, gds_weight,
                         partitions_of, strict_partitions, strip_classify)
from .symfunc import (Alphabet, SymFunc, check_degree, eval_alphabet, g_element,
                      multiply, perp)

A_VAR = RatFunc.var("a")
Q_VAR = RatFunc.var("q")
T_VAR = RatFunc.var("t")


@dataclass
class MNExpansion:
    """Coefficients of an expansion; ``terms`` holds (partition, coefficient)."""
    mu: Partition
    k: int
    alphabet: str
    terms: list = field(default_factory=list)
    basis: str = "P"

    def as_dict(self):
        return dict(self.terms)

    def coefficient(self, lam):
        return self.as_dict().get(Partition(lam), ZERO)

    def to_json_obj(self):
        return {"mu": str(self.mu), "k": self.k, "alphabet": self.alphabet,
                "basis": self.basis,
                "terms": [{"lambda": str(lam), "coeff": str(c)} for lam, c in self.terms]}

    def __len__(self):
        return len(self.terms)


def _split_top_level_minus(text):
    depth, cuts = 0, []
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "-" and depth == 0 and i > 0 and text[i - 1] not in "*/^(":
            cuts.append(i)
    return cuts


def difference_alphabet(value):
    """Alphabet x - y from a string such as "a-1", "a-t" or "(1+q)-t".

    Sides containing a minus sign must be parenthesized.  An Alphabet
    passes through unchanged.
    """
    if isinstance(value, Alphabet):
        return value
    text = value.replace(" ", "")
    cuts = _split_top_level_minus(text)
    if len(cuts) != 1:
        raise ValueError("expected a difference x-y, got %r" % value)
    left, right = text[:cuts[0]], text[cuts[0] + 1:]
    return Alphabet.difference(RatFunc(left), RatFunc(right), text)


def _candidates_above(mu, k):
    return [lam for lam in partitions_of(mu.size + k) if lam.contains(mu)]


def _map(fn, items, threads):
    if threads and threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _nonzero(pairs):
    return [(lam, c) for lam, c in pairs if not c.is_zero()]


def mn_expand(mu, k, alphabet="a-1", threads=1):
    """g_k((x - y)X) P_mu = sum_lam Q_{lam/mu}(x - y) P_lam."""
    mu = Partition(mu)
    check_degree(mu.size + k)
    A = difference_alphabet(alphabet)
    cands = _candidates_above(mu, k)
    coeffs = _map(lambda lam: eval_alphabet(skew_Q(lam, mu), A), cands, threads)
    return MNExpansion(mu, k, A.name, _nonzero(zip(cands, coeffs)), "P")


def verify_mn_expand(exp, alphabet=None):
    A = difference_alphabet(alphabet or exp.alphabet)
    lhs = multiply(g_element(exp.k, A), macdonald_P(exp.mu))
    rhs = rsum_sym(macdonald_P(lam) * c for lam, c in exp.terms)
    return lhs == rhs


def rsum_sym(items):
    out = SymFunc.zero()
    for f in items:
        out = out + f
    return out


def mn_skew_expand(mu, rho, k, alphabet="a-1", threads=1):
    """g_k((x - y)X) Q_{mu/rho} = sum_lam c_lam Q_lam with
    c_lam = sum_tau f^mu_{tau rho} P_{lam/tau}(x - y)."""
    mu, rho = Partition(mu), Partition(rho)
    if not mu.contains(rho):
        raise ValueError("%s is not contained in %s" % (rho, mu))
    size = mu.size - rho.size
    check_degree(max(mu.size, size + k))
    A = difference_alphabet(alphabet)
    taus = [(tau, f_coeff(mu, tau, rho)) for tau in partitions_of(size)]
    taus = [(tau, f) for tau, f in taus if not f.is_zero()]

    def coeff(lam):
        terms = []
        for tau, f in taus:
            if lam.contains(tau):
                pskew = eval_alphabet(skew_Q(lam, tau), A) * b_lambda(tau) / b_lambda(lam)
                terms.append(f * pskew)
        return rsum(terms)

    cands = list(partitions_of(size + k))
    out = MNExpansion(mu, k, A.name, _nonzero(zip(cands, _map(coeff, cands, threads))), "Q")
    out.rho = rho
    return out


def verify_mn_skew_expand(exp, alphabet=None):
    A = difference_alphabet(alphabet or exp.alphabet)
    lhs = multiply(g_element(exp.k, A), skew_Q(exp.mu, exp.rho))
    rhs = rsum_sym(macdonald_Q(lam) * c for lam, c in exp.terms)
    return lhs == rhs


def mn_dual(lam, k, alphabet="a-1", threads=1):
    """g_k^perp((x - y)X) Q_lam = sum_mu Q_{lam/mu}(x - y) Q_mu."""
    lam = Partition(lam)
    check_degree(lam.size)
    if k > lam.size:
        return MNExpansion(lam, k, str(alphabet), [], "Q")
    A = difference_alphabet(alphabet)
    cands = [mu for mu in partitions_of(lam.size - k) if lam.contains(mu)]
    coeffs = _map(lambda mu: eval_alphabet(skew_Q(lam, mu), A), cands, threads)
    return MNExpansion(lam, k, A.name, _nonzero(zip(cands, coeffs)), "Q")


def verify_mn_dual(exp, alphabet=None):
    A = difference_alphabet(alphabet or exp.alphabet)
    lhs = perp(g_element(exp.k, A), macdonald_Q(exp.mu), "qt")
    rhs = rsum_sym(macdonald_Q(mu) * c for mu, c in exp.terms)
    return lhs == rhs


def mn_tilde(mu, k, threads=1):
    """Coefficients Q_{lam/mu}(a - 1)/(a - 1) of g~_k((a-1)X) P_mu."""
    base = mn_expand(mu, k, "a-1", threads)
    terms = [(lam, exact_divide_a_minus_1(c)) for lam, c in base.terms]
    return MNExpansion(base.mu, k, "(a-1)/(a-1)", terms, "P")


def g_tilde_limit(k):
    """(1 - t^k)/(1 - q^k) p_k, the a -> 1 limit of g~_k((a-1)X)."""
    return SymFunc.p((k,)) * (RatFunc.one_minus_monomial(et=k)
                              / RatFunc.one_minus_monomial(eq=k))


def g_tilde(k):
    """g~_k((a-1)X) = g_k((a-1)X)/(a-1), coefficientwise."""
    g = g_element(k, difference_alphabet("a-1"))
    return g.map_coefficients(exact_divide_a_minus_1)


def specialize_chain(c, q_value, t_value):
    """Send generic q, t to the given integers, then rename a to q."""
    c = c.specialize("q", q_value).specialize("t", t_value)
    return c.substitute(a=Q_VAR)


# -- Hecke algebra: Schur functions -------------------------------------------

def is_generalized_border_strip(lam, mu):
    return "generalized-border" in strip_classify(SkewShape(lam, mu))


def hecke_mn(mu, r):
    """[(lam, wt(lam/mu; q))] over r-generalized border strips lam/mu."""
    mu = Partition(mu)
    out = []
    for lam in _candidates_above(mu, r):
        if is_generalized_border_strip(lam, mu):
            out.append((lam, gbs_weight(SkewShape(lam, mu), Q_VAR)))
    return out


def schur_skew_a_minus_1(lam, mu):
    """s_{lam/mu} = s_mu^perp s_lam evaluated at the alphabet a - 1."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return ZERO
    skew = perp(SymFunc.s(mu), SymFunc.s(lam), "hall")
    return eval_alphabet(skew, difference_alphabet("a-1"))


# -- Hecke-Clifford algebra: Schur Q-functions ---------------------------------

def hecke_clifford_mn(mu, r):
    """[(lam, (q-1)^{-1} w~t(lam/mu; q))] over strict lam with lam/mu a
    generalized double strip."""
    mu = Partition(mu)
    if not mu.is_strict():
        raise ValueError("%s is not strict" % (mu,))
    out = []
    for lam in strict_partitions(mu.size + r):
        if not lam.contains(mu):
            continue
        shape = ShiftedSkewShape(lam, mu)
        if double_strip_decompose(shape).is_gds:
            out.append((lam, gds_weight(shape, Q_VAR) / (Q_VAR - 1)))
    return out


def hl_skew_single(lam, mu, x, t):
    """Q_{lam/mu}(x; t) in one variable: phi_{lam/mu}(t) x^{|lam/mu|} on
    horizontal strips, where phi is the product of 1 - t^{m_i(lam)} over the
    columns i that meet the strip while column i + 1 does not."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return ZERO
    shape = SkewShape(lam, mu)
    if not shape.is_horizontal_strip():
        return ZERO
    cols = shape.column_lengths()
    out = (x if isinstance(x, RatFunc) else RatFunc(x)) ** shape.size
    for i in range(1, lam.part(1) + 1):
        here = cols[i - 1] if i - 1 < len(cols) else 0
        nxt = cols[i] if i < len(cols) else 0
        if here == 1 and nxt == 0:
            out = out * (1 - RatFunc(t) ** lam.multiplicity(i))
    return out


def _interlacing(lam, mu):
    """Partitions nu with lam/nu and nu/mu both horizontal strips."""
    n = len(lam)
    ranges = []
    for i in range(1, n + 1):
        lo = max(mu.part(i), lam.part(i + 1))
        hi = min(lam.part(i), mu.part(i - 1)) if i > 1 else lam.part(i)
        if lo > hi:
            return
        ranges.append(range(lo, hi + 1))
    for parts in product(*ranges):
        yield Partition(tuple(p for p in parts if p))


def hl_skew_two_letters(lam, mu, x, y, t):
    """Q_{lam/mu}(x, y; t) by the branching sum over nu of
    Q_{lam/nu}(y; t) Q_{nu/mu}(x; t)."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return ZERO
    return rsum([hl_skew_single(nu, mu, x, t) * hl_skew_single(lam, nu, y, t)
                 for nu in _interlacing(lam, mu)])


def schur_Q_skew_two_letters(lam, mu, x):
    """Schur Q_{lam/mu}(x, -1): the oracle for the Hecke-Clifford weights."""
    return hl_skew_two_letters(lam, mu, x, -1, -1)


def schur_Q_skew_minus_one(lam, mu):
    """Schur Q_{lam/mu} at the alphabet -1: (-1)^{|lam/mu|} 2^{a} on horizontal
    strips, a counting the columns i in the strip with column i + 1 empty."""
    return hl_skew_single(lam, mu, -1, -1)


# -- Hall-Littlewood at the alphabet -1 ----------------------------------------

def t_binomial(n, k):
    return q_binomial(n, k, T_VAR)


def psi_prime_t(lam, mu):
    """psi'_{lam/mu} at q = 0: prod_j [lam'_j - lam'_{j+1}; lam'_j - mu'_j]_t."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu) or not SkewShape(lam, mu).is_vertical_strip():
        return ZERO
    lc, mc = lam.conjugate, mu.conjugate
    out = ONE
    for j in range(1, lam.part(1) + 1):
        out = out * t_binomial(lc.part(j) - lc.part(j + 1), lc.part(j) - mc.part(j))
    return out


def _n_skew(lam, mu):
    lc, mc = lam.conjugate, mu.conjugate
    return sum((lc.part(j) - mc.part(j)) * (lc.part(j) - mc.part(j) - 1) // 2
               for j in range(1, lam.part(1) + 1))


def sk_t(lam, mu):
    """Q_{lam/mu}(1/(1-t); t) = t^{n(lam/mu)} prod_j [lam'_j - mu'_{j+1}; m_j(mu)]_t."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return ZERO
    lc, mc = lam.conjugate, mu.conjugate
    out = RatFunc.monomial(1, 0, _n_skew(lam, mu))
    for j in range(1, lam.part(1) + 1):
        out = out * t_binomial(lc.part(j) - mc.part(j + 1), mu.multiplicity(j))
    return out


def hl_q_minus1_sum(lam, mu):
    """t^{|lam/mu|} sum_nu (-t)^{-|lam/nu|} psi'_{lam/nu}(t) sk_{nu/mu}(t)."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return ZERO
    terms = []
    for k in range(lam.size - mu.size + 1):
        for nu in partitions_of(lam.size - k):
            if nu.contains(mu) and lam.contains(nu):
                psi = psi_prime_t(lam, nu)
                if psi.is_zero():
                    continue
                sign = -1 if k % 2 else 1
                terms.append(psi * sk_t(nu, mu)
                             * RatFunc.monomial(sign, 0, lam.size - mu.size - k))
    return rsum(terms)


def hl_q_minus1(lam, mu):
    """Column-factorized Q_{lam/mu}(-1; t): one independent sum per column."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return ZERO
    lc, mc = lam.conjugate, mu.conjugate
    out = RatFunc.monomial(1, 0, lam.size - mu.size)
    for j in range(1, lam.part(1) + 1):
        top = lc.part(j) - max(mc.part(j), lc.part(j + 1))
        col = []
        for k in range(top + 1):
            d = lc.part(j) - mc.part(j) - k
            col.append(RatFunc.monomial(-1 if k % 2 else 1, 0, d * (d - 1) // 2 - k)
                       * t_binomial(lam.multiplicity(j), k)
                       * t_binomial(lc.part(j) - mc.part(j + 1) - k, mu.multiplicity(j)))
        out = out * rsum(col)
    return out


def hl_q_minus1_oracle(lam, mu):
    """Q_{lam/mu}(X; t) at the alphabet p_n -> -1."""
    return eval_alphabet(skew_Q_hall_littlewood(lam, mu), Alphabet.constant(-1, "-1"))


def classical_character(lam, rho):
    """Irreducible symmetric-group character chi^lam at cycle type rho."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError("sizes differ: %s and %s" % (lam, rho))
    return character(lam, rho)


__all__ = [
    "MNExpansion", "difference_alphabet", "mn_expand", "verify_mn_expand",
    "mn_skew_expand", "verify_mn_skew_expand", "mn_dual", "verify_mn_dual",
    "mn_tilde", "g_tilde", "g_tilde_limit", "specialize_chain", "hecke_mn",
    "is_generalized_border_strip", "schur_skew_a_minus_1", "hecke_clifford_mn",
    "psi_prime_t", "sk_t", "hl_q_minus1", "hl_q_minus1_sum", "hl_q_minus1_oracle",
    "classical_character", "t_binomial", "hl_skew_single",
    "hl_skew_two_letters", "schur_Q_skew_minus_one", "schur_Q_skew_two_letters",
]
