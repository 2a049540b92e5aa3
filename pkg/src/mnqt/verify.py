"""Identity suites: each check compares a closed form or iteration with an
independent computation and records the cells that disagree.

The suites are shared by ``mnqt verify`` and the acceptance tests.  Size
bounds default to the desk-scale ranges and are clipped to the current
truncation degree.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import greenkostka as gk
from . import macdonald as mac
from . import mn
from . import pieri
from .exact import ONE, ZERO, RatFunc, q_shifted_factorial, rsum
from .partitions import (Partition, ShiftedSkewShape, double_strip_decompose, gds_weight,
                         partitions_of, skew_character, skew_shapes, strict_partitions)
from .symfunc import (Alphabet, SymFunc, eval_alphabet, g_element, inner_qt, truncation,
                      truncation_degree, z_qt)

Q_VAR = RatFunc.var("q")


@dataclass
class Check:
    """Outcome of one identity check; ``failures`` names the offending cells."""
    label: str
    bound: str
    failures: list = field(default_factory=list)
    count: int = 0

    @property
    def passed(self):
        return not self.failures

    def line(self):
        head = "PASS" if self.passed else "FAIL"
        text = "%s %s %s (%d cases)" % (head, self.label, self.bound, self.count)
        if self.failures:
            shown = "; ".join(self.failures[:5])
            more = len(self.failures) - 5
            text += ": " + shown + (" ... %d more" % more if more > 0 else "")
        return text

    def expect(self, ok, cell):
        self.count += 1
        if not ok:
            self.failures.append(cell)


def _cap(n):
    return min(n, truncation_degree())


def _pairs(n_max, n_min=0):
    """(lam, mu) with mu inside lam and |lam| <= n_max."""
    for n in range(n_min, n_max + 1):
        for lam in partitions_of(n):
            for k in range(n + 1):
                for mu in partitions_of(k):
                    if lam.contains(mu):
                        yield lam, mu


def _cell(*parts):
    return "(" + " | ".join(str(p) for p in parts) + ")"


# -- orthogonality -------------------------------------------------------------

def check_orthogonality(n_max=6):
    n_max = _cap(n_max)
    c = Check("<P_lam, Q_mu>_qt = delta", "n<=%d" % n_max)
    for n in range(1, n_max + 1):
        parts = partitions_of(n)
        for lam in parts:
            P = mac.macdonald_P(lam)
            for mu in parts:
                v = inner_qt(P, mac.macdonald_Q(mu))
                c.expect(v == (ONE if lam == mu else ZERO), _cell(lam, mu))
    return c


def check_g_elements(n_max=8):
    n_max = _cap(n_max)
    c = Check("g_n = Q_(n) = sum p_lam / z_lam(q,t)", "n<=%d" % n_max)
    for n in range(1, n_max + 1):
        g = g_element(n)
        c.expect(g == mac.macdonald_Q((n,)), _cell("Q", n))
        series = SymFunc({lam: ONE / z_qt(lam) for lam in partitions_of(n)})
        c.expect(g == series, _cell("series", n))
    return c


# -- Murnaghan-Nakayama rules ------------------------------------------------

def check_mn_rules(n_max=5, k_max=3, threads=1):
    n_max = _cap(n_max)
    checks = []
    prim = Check("g_k((a-1)X) P_mu expansion", "|mu|<=%d, k<=%d" % (n_max, k_max))
    skew = Check("g_k((a-1)X) Q_{mu/rho} expansion", "|mu|<=%d, k<=%d" % (n_max, k_max))
    dual = Check("g_k^perp((a-1)X) Q_lam expansion", "|lam|<=%d, k<=%d" % (n_max, k_max))
    adj = Check("primal/dual coefficient adjointness", "|lam|<=%d, k<=%d" % (n_max, k_max))
    top = truncation_degree()
    for n in range(n_max + 1):
        for mu in partitions_of(n):
            for k in range(0, k_max + 1):
                if n + k > top:
                    continue
                e = mn.mn_expand(mu, k, threads=threads)
                prim.expect(mn.verify_mn_expand(e), _cell(mu, k))
                if n >= 1 and k >= 1:
                    d = mn.mn_dual(mu, k, threads=threads)
                    dual.expect(mn.verify_mn_dual(d), _cell(mu, k))
                    for nu, coeff in d.terms:
                        below = mn.mn_expand(nu, k, threads=threads)
                        adj.expect(below.coefficient(mu) == coeff, _cell(mu, nu, k))
                for rho in (r for m in range(n) for r in partitions_of(m)):
                    if mu.contains(rho) and n - rho.size + k <= top:
                        s = mn.mn_skew_expand(mu, rho, k, threads=threads)
                        skew.expect(mn.verify_mn_skew_expand(s), _cell(mu, rho, k))
    checks.extend([prim, skew, dual, adj])
    return checks


def check_closed_form(n_max=5):
    n_max = _cap(n_max)
    c = Check("closed form Q_{lam/mu}(a-1) = p_n -> a^n - 1 oracle", "|lam|<=%d" % n_max)
    at_one = Check("Q_{lam/mu}(a-1) at a = 1 is delta", "|lam|<=%d" % n_max)
    oracle = Alphabet.difference(RatFunc.var("a"), 1)
    for lam, mu in _pairs(n_max):
        closed = mac.skew_eval_a_minus_1(lam, mu)
        c.expect(closed == eval_alphabet(mac.skew_Q(lam, mu), oracle), _cell(lam, mu))
        at_one.expect(closed.specialize("a", 1) == (ONE if lam == mu else ZERO),
                      _cell(lam, mu))
    return [c, at_one]


def check_limit(k_max=8):
    k_max = _cap(k_max)
    c = Check("g~_k((a-1)X) at a = 1 equals (1-t^k)/(1-q^k) p_k", "k<=%d" % k_max)
    for k in range(1, k_max + 1):
        lim = mn.g_tilde(k).map_coefficients(lambda v: v.specialize("a", 1))
        c.expect(lim == mn.g_tilde_limit(k), _cell(k))
    return c


# -- Green polynomials ---------------------------------------------------------

def check_green(n_max=5):
    n_max = _cap(n_max)
    it = Check("Green iteration = extraction from J_lam", "n<=%d" % n_max)
    rec = Check("J_lam = sum z_mu^-1 X^lam_mu p_mu(X;t)", "n<=%d" % n_max)
    for n in range(1, n_max + 1):
        parts = partitions_of(n)
        for lam in parts:
            rec.expect(gk.green_reconstruct(lam, "iterative") == mac.macdonald_J(lam),
                       _cell(lam))
            for mu in parts:
                it.expect(gk.green_direct(lam, mu) == gk.green_iterative(lam, mu),
                          _cell(lam, mu))
    return [it, rec]


# -- specializations ---------------------------------------------------------

HECKE_EXAMPLE = (Partition((4, 3, 3, 1)), Partition((3, 2, 1)))
CLIFFORD_EXAMPLE = (Partition((15, 14, 10, 8, 7, 6, 5, 3, 1)),
                    Partition((13, 11, 8, 6, 5, 4, 2, 1)))


def check_hl_minus_one(n_max=8):
    n_max = _cap(n_max)
    c = Check("Q_{lam/mu}(-1;t) factorized = eta-sum", "|lam|<=%d" % n_max)
    for lam, mu in _pairs(n_max):
        c.expect(mn.hl_q_minus1(lam, mu) == mn.hl_q_minus1_sum(lam, mu), _cell(lam, mu))
    return c


def _hecke_pair(c, lam, mu):
    weights = dict(mn.hecke_mn(mu, lam.size - mu.size))
    oracle = mn.schur_skew_a_minus_1(lam, mu).substitute(a=Q_VAR)
    c.expect(oracle == weights.get(lam, ZERO) * (Q_VAR - 1), _cell(lam, mu))


def check_hecke(n_max=6):
    n_max = _cap(n_max)
    c = Check("Hecke weights: s_{lam/mu}(q-1) = (q-1) wt(lam/mu)",
              "n<=%d plus %s/%s" % (n_max, *HECKE_EXAMPLE))
    for lam, mu in _pairs(n_max, 1):
        if lam != mu:
            _hecke_pair(c, lam, mu)
    with truncation(max(truncation_degree(), HECKE_EXAMPLE[0].size)):
        _hecke_pair(c, *HECKE_EXAMPLE)
    return c


def _clifford_pair(c, lam, mu):
    shape = ShiftedSkewShape(lam, mu)
    info = double_strip_decompose(shape)
    weight = gds_weight(shape, Q_VAR) if info.is_gds else ZERO
    c.expect(mn.schur_Q_skew_two_letters(lam, mu, Q_VAR) == weight, _cell(lam, mu))
    return info


def check_hecke_clifford(n_max=6):
    n_max = _cap(n_max)
    c = Check("Hecke-Clifford weights: Q_{lam/mu}(q,-1) = w~t(lam/mu)",
              "strict n<=%d plus the 19-cell double strip" % n_max)
    coh = Check("Hecke-Clifford coefficients = (q-1)^-1 Q_{lam/mu}(q,-1)",
                "strict n<=%d" % n_max)
    for n in range(n_max + 1):
        for lam in strict_partitions(n):
            for k in range(n + 1):
                for mu in strict_partitions(k):
                    if lam.contains(mu):
                        _clifford_pair(c, lam, mu)
    for n in range(n_max):
        for mu in strict_partitions(n):
            for r in range(1, n_max - n + 1):
                got = dict(mn.hecke_clifford_mn(mu, r))
                for lam in strict_partitions(n + r):
                    if lam.contains(mu):
                        want = mn.schur_Q_skew_two_letters(lam, mu, Q_VAR) / (Q_VAR - 1)
                        coh.expect(got.get(lam, ZERO) == want, _cell(lam, mu))
    info = _clifford_pair(c, *CLIFFORD_EXAMPLE)
    c.expect(info.is_gds and info.c == 5 and info.m == 5, "example c = m = 5")
    return [c, coh]


# -- Pieri inversion -----------------------------------------------------------

def check_inversion(n_max=7, strict_max=8):
    n_max, strict_max = _cap(n_max), _cap(strict_max)
    hl = Check("Hall-Littlewood inverse Pieri reconstructs Q_lam(X;t)", "n<=%d" % n_max)
    t0 = Check("t = 0 reduction: Schur signs over vertical strips", "n<=%d" % n_max)
    tm1 = Check("t = -1 reduction: Schur Q coefficients Q_{lam/mu}(-1)",
                "strict n<=%d" % n_max)
    sq = Check("Schur Q inverse Pieri reconstructs Q_lam", "strict n<=%d" % strict_max)
    for n in range(1, n_max + 1):
        for lam in partitions_of(n):
            e = pieri.hl_inverse_pieri(lam)
            hl.expect(pieri.verify_inversion(e), _cell(lam))
            s = pieri.schur_inverse(lam)
            t0.expect(pieri.specialize_coefficients(e, 0) == s.terms
                      and pieri.verify_inversion(s), _cell(lam))
            if lam.is_strict():
                # Q_mu(X;-1) vanishes for non-strict mu, so those terms drop out
                strict_terms = [x for x in pieri.specialize_coefficients(e, -1)
                                if x[1].is_strict()]
                tm1.expect(strict_terms == pieri.schurQ_inverse(lam).terms, _cell(lam))
    for n in range(1, strict_max + 1):
        for lam in strict_partitions(n):
            sq.expect(pieri.verify_inversion(pieri.schurQ_inverse(lam)), _cell(lam))
    return [hl, t0, tm1, sq]


def check_signs_only_schurQ(n_max=6):
    """The bare-sign Schur Q inversion; expected to fail from (2,1) on."""
    n_max = _cap(n_max)
    c = Check("Schur Q inverse Pieri with bare strip signs", "strict n<=%d" % n_max)
    for n in range(1, n_max + 1):
        for lam in strict_partitions(n):
            c.expect(pieri.verify_inversion(pieri.schurQ_inverse_signs_only(lam)), _cell(lam))
    return c


def check_lassalle_schlosser(n_max=6, max_length=3):
    n_max = _cap(n_max)
    c = Check("Q_lam(X;q,t) from the determinantal inverse Pieri coefficients",
              "l(lam)<=%d, |lam|<=%d" % (max_length, n_max))
    for n in range(1, n_max + 1):
        for lam in partitions_of(n):
            if len(lam) <= max_length:
                c.expect(pieri.macdonald_inverse_reconstruct(lam) == mac.macdonald_Q(lam),
                         _cell(lam))
    return c


# -- Kostka and fake degrees ---------------------------------------------------

def _is_integer_polynomial(v):
    num, den = v._expanded()
    if den not in ({0: 1}, {0: -1}):
        return False
    return all(Fraction(x).denominator == 1 for x in num.values())


def check_kostka(n_max=5, iter2_length=3, perturb=None):
    """Compare every Kostka method with the direct extraction.

    ``perturb`` = (lam, mu) adds one to that direct entry, to exercise the
    failure path.
    """
    n_max = _cap(n_max)
    bound = "n<=%d" % n_max
    four = Check("Kostka agreement: direct, iter1, binomial, via-green", bound)
    it2 = Check("Kostka second iteration", "l(mu)<=%d, %s" % (iter2_length, bound))
    col = Check("Kostka q = 0 column = Kostka-Foulkes iteration", bound)
    ints = Check("Kostka entries are integer polynomials", bound)
    if perturb is not None:
        perturb = (Partition(perturb[0]), Partition(perturb[1]))
    for n in range(1, n_max + 1):
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                d = gk.kostka_direct(lam, mu)
                if (lam, mu) == perturb:
                    d = d + 1
                cell = _cell(lam, mu)
                four.expect(all(fn(lam, mu) == d for fn in
                                (gk.kostka_iter1, gk.kostka_binomial, gk.kostka_via_green)),
                            cell)
                if len(mu) <= iter2_length:
                    it2.expect(gk.kostka_iter2(lam, mu) == d, cell)
                col.expect(d.specialize("q", 0) == gk.t_kostka_iter(lam, mu), cell)
                ints.expect(_is_integer_polynomial(d), cell)
    return [four, it2, col, ints]


def _skew_schur_geometric_by_characters(lam, rho):
    """s_{lam/rho}(1/(1-q)) = sum_sigma chi^{lam/rho}_sigma / z_sigma prod 1/(1-q^sigma_i)."""
    n = lam.size - rho.size
    terms = []
    for sigma in partitions_of(n):
        chi = skew_character(lam, rho, sigma)
        if chi:
            den = ONE
            for part in sigma:
                den = den * RatFunc.one_minus_monomial(eq=part)
            terms.append(RatFunc(Fraction(chi, sigma.z)) / den)
    return rsum(terms)


def check_fake_degree(cells=7):
    cells = _cap(cells)
    c = Check("fake degree: SYT major index = (q;q)_n s_{lam/rho}(1/(1-q)) = Jacobi-Trudi",
              "skew shapes with <=%d cells" % cells)
    for n in range(1, cells + 1):
        poch = q_shifted_factorial(Q_VAR, n)
        for lam, rho in skew_shapes(n):
            syt = gk.fake_degree(lam, rho)
            first = _skew_schur_geometric_by_characters(lam, rho) * poch
            second = gk.schur_skew_geometric_q_det(lam, rho) * poch
            c.expect(syt == first == second, _cell(lam, rho))
    return c


# -- suites --------------------------------------------------------------------

def _flatten(items):
    out = []
    for x in items:
        out.extend(x if isinstance(x, list) else [x])
    return out


def suite_orthogonality(**kw):
    return [check_orthogonality(), check_g_elements()]


def suite_mn(threads=1, **kw):
    return _flatten([check_mn_rules(threads=threads), check_closed_form(), check_limit()])


def suite_specializations(**kw):
    return _flatten([check_hl_minus_one(), check_hecke(), check_hecke_clifford()])


def suite_green(**kw):
    return check_green()


def suite_kostka(perturb=None, **kw):
    return _flatten([check_kostka(perturb=perturb), check_fake_degree()])


def suite_inversion(**kw):
    return _flatten([check_inversion(), check_lassalle_schlosser()])


SUITES = {
    "orthogonality": suite_orthogonality,
    "mn": suite_mn,
    "specializations": suite_specializations,
    "green": suite_green,
    "kostka": suite_kostka,
    "inversion": suite_inversion,
}


def spot_checks(count, seed, threads=1):
    """Random primal expansions checked at the full truncation degree."""
    rng = random.Random(seed)
    top = truncation_degree()
    c = Check("random spot checks of g_k((a-1)X) P_mu", "seed=%s, degree<=%d" % (seed, top))
    for _ in range(count):
        total = rng.randint(1, top)
        k = rng.randint(1, total)
        parts = partitions_of(total - k)
        mu = parts[rng.randrange(len(parts))]
        e = mn.mn_expand(mu, k, threads=threads)
        c.expect(mn.verify_mn_expand(e), _cell(mu, k))
    return c


def run_suite(name, threads=1, perturb=None):
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(run_suite(key, threads, perturb))
        return out
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](threads=threads, perturb=perturb)


__all__ = ["Check", "SUITES", "run_suite", "spot_checks", "check_orthogonality",
           "check_g_elements", "check_mn_rules", "check_closed_form", "check_limit",
           "check_green", "check_hl_minus_one", "check_hecke", "check_hecke_clifford",
           "check_inversion", "check_signs_only_schurQ", "check_lassalle_schlosser",
           "check_kostka", "check_fake_degree", "HECKE_EXAMPLE", "CLIFFORD_EXAMPLE"]
