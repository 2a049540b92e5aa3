"""Inverting the Pieri rule: Q_lam as a combination of one-row functions
times functions of smaller partitions.

The Hall-Littlewood expansion takes its coefficients from
``mn.hl_q_minus1``; the Schur and Schur Q versions are its t = 0 and t = -1
reductions. At t = 0 the coefficients are strip signs; at t = -1 they pick
up a power of two from the one-variable skew Schur Q function.
"""
from dataclasses import dataclass, field
from functools import lru_cache

from .exact import RatFunc
from .greenkostka import compositions_bounded, ls_coefficient_at
from .macdonald import hall_littlewood_Q, macdonald_Q, schur_Q
from .mn import hl_q_minus1, schur_Q_skew_minus_one
from .partitions import Composition, Partition, SkewShape, partitions_of
from .symfunc import SymFunc, check_degree, g_element, multiply


@dataclass
class InversionExpansion:
    """Terms (k, mu, coeff) of Q_lam = sum coeff * row(lam_1 + k) * Q_mu."""
    lam: Partition
    kind: str
    terms: list = field(default_factory=list)

    def to_json_obj(self):
        return {"lambda": str(self.lam), "kind": self.kind,
                "terms": [{"k": k, "mu": str(mu), "row": self.lam.part(1) + k,
                           "coeff": str(c)} for k, mu, c in self.terms]}


def _inner_candidates(lam):
    head = lam.remove_first()
    n, first = lam.size, lam.part(1)
    for k in range(n - first + 1):
        for mu in partitions_of(n - first - k):
            if head.contains(mu):
                yield k, mu, head


@lru_cache(maxsize=None)
def one_row_hl(r):
    """q_r(X; t) = Q_(r)(X; t), the q = 0 specialization of g_r."""
    return g_element(r).map_coefficients(lambda c: c.specialize("q", 0))


def hl_inverse_pieri(lam):
    lam = Partition(lam)
    check_degree(lam.size)
    terms = []
    for k, mu, head in _inner_candidates(lam):
        c = hl_q_minus1(head, mu)
        if not c.is_zero():
            terms.append((k, mu, c))
    return InversionExpansion(lam, "hall-littlewood", terms)


def _strip_sign(head, mu):
    return RatFunc(-1 if (head.size - mu.size) % 2 else 1)


def schur_inverse(lam):
    """t = 0: signs over mu with lam^{[1]}/mu a vertical strip."""
    lam = Partition(lam)
    check_degree(lam.size)
    terms = [(k, mu, _strip_sign(head, mu)) for k, mu, head in _inner_candidates(lam)
             if SkewShape(head, mu).is_vertical_strip()]
    return InversionExpansion(lam, "schur", terms)


def schurQ_inverse(lam):
    """t = -1: coefficients Q_{lam^{[1]}/mu}(-1) over strict mu with
    lam^{[1]}/mu a horizontal strip."""
    lam = Partition(lam)
    if not lam.is_strict():
        raise ValueError("%s is not strict" % (lam,))
    check_degree(lam.size)
    terms = [(k, mu, schur_Q_skew_minus_one(head, mu))
             for k, mu, head in _inner_candidates(lam)
             if mu.is_strict() and SkewShape(head, mu).is_horizontal_strip()]
    return InversionExpansion(lam, "schur-Q", terms)


def schurQ_inverse_signs_only(lam):
    """The variant with bare strip signs (-1)^{|lam^{[1]}/mu|}, which drops the
    powers of two; kept for comparison, it does not reconstruct Q_lam."""
    lam = Partition(lam)
    exp = schurQ_inverse(lam)
    exp.terms = [(k, mu, _strip_sign(lam.remove_first(), mu)) for k, mu, _ in exp.terms]
    return exp


def _row_and_basis(kind):
    if kind == "hall-littlewood":
        return one_row_hl, hall_littlewood_Q
    if kind == "schur":
        return (lambda r: SymFunc.s((r,))), (lambda mu: SymFunc.s(mu))
    if kind == "schur-Q":
        return (lambda r: schur_Q((r,))), schur_Q
    raise ValueError("unknown kind %r" % kind)


def reconstruct(exp):
    """Expand the right side in power sums."""
    row, basis = _row_and_basis(exp.kind)
    out = SymFunc.zero()
    for k, mu, c in exp.terms:
        out = out + multiply(row(exp.lam.part(1) + k), basis(mu)) * c
    return out


def target(exp):
    _, basis = _row_and_basis(exp.kind)
    return basis(exp.lam)


def verify_inversion(exp):
    return reconstruct(exp) == target(exp)


def specialize_coefficients(exp, t_value):
    """Hall-Littlewood coefficients at an integer t, zero terms dropped."""
    out = []
    for k, mu, c in exp.terms:
        v = c.specialize("t", t_value)
        if not v.is_zero():
            out.append((k, mu, v))
    return out


# -- Macdonald case: inversion through the Lassalle-Schlosser coefficients ------

def macdonald_inverse_pieri(lam):
    """Terms (theta, C_theta, tau) of Q_lam = sum C_theta g_{last - |theta|} Q_tau,
    tau = (lam_1 + theta_1, ..., lam_l + theta_l); non-partition tau dropped."""
    lam = Partition(lam)
    check_degree(lam.size)
    if not lam:
        return [((), RatFunc(1), lam)]
    l, last = len(lam) - 1, lam[-1]
    terms = []
    for theta in compositions_bounded(l, last):
        tau = Composition(tuple(lam[i] + theta[i] for i in range(l)))
        if not tau.is_partition():
            continue
        c = ls_coefficient_at(lam, theta)
        if not c.is_zero():
            terms.append((theta, c, Partition(tau)))
    return terms


def macdonald_inverse_reconstruct(lam):
    lam = Partition(lam)
    last = lam[-1] if lam else 0
    out = SymFunc.zero()
    for theta, c, tau in macdonald_inverse_pieri(lam):
        out = out + multiply(g_element(last - sum(theta)), macdonald_Q(tau)) * c
    return out


__all__ = [
    "InversionExpansion", "hl_inverse_pieri", "schur_inverse", "schurQ_inverse",
    "schurQ_inverse_signs_only",
    "reconstruct", "target", "verify_inversion", "specialize_coefficients",
    "one_row_hl", "macdonald_inverse_pieri", "macdonald_inverse_reconstruct",
]
