"""Symmetric functions over Q(q, t, a), stored in the power-sum basis.

A ``SymFunc`` carries a basis tag only for presentation; arithmetic and the
inner products run on power-sum coefficients.  Transition matrices to the
monomial and Schur bases are computed once per degree.
"""
import json
import os
import threading
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import ONE, ZERO, RatFunc, rsum
from .partitions import Partition, character, partitions_of

POWER, MONOMIAL, SCHUR = "power", "monomial", "schur"
BASES = (POWER, MONOMIAL, SCHUR)

DEFAULT_DEGREE = 8
_degree = [None]


def truncation_degree():
    """Current maximum degree N (MNQT_DEGREE overrides the default 8)."""
    if _degree[0] is not None:
        return _degree[0]
    env = os.environ.get("MNQT_DEGREE")
    if env:
        value = int(env)
        if value < 1:
            raise ValueError("MNQT_DEGREE must be positive")
        return value
    return DEFAULT_DEGREE


def set_truncation_degree(n):
    if n is not None and n < 1:
        raise ValueError("truncation degree must be positive")
    _degree[0] = n


@contextmanager
def truncation(n):
    old = _degree[0]
    set_truncation_degree(n)
    try:
        yield
    finally:
        _degree[0] = old


class DegreeOverflow(ValueError):
    pass


def check_degree(n):
    limit = truncation_degree()
    if n > limit:
        raise DegreeOverflow("degree %d exceeds the truncation degree %d" % (n, limit))


# -- transition data ----------------------------------------------------------

class _WriteOnce:
    """Per-key cache; concurrent first writers compute idempotently."""

    def __init__(self, build):
        self._build = build
        self._data = {}
        self._lock = threading.Lock()

    def __call__(self, key):
        try:
            return self._data[key]
        except KeyError:
            pass
        value = self._build(key)
        with self._lock:
            return self._data.setdefault(key, value)


def _count_fillings(rho, mu):
    """Number of ways to distribute the parts of rho into the rows of mu."""
    @lru_cache(maxsize=None)
    def rec(i, caps):
        if i == len(rho):
            return 1 if not any(caps) else 0
        total = 0
        for j, c in enumerate(caps):
            if c >= rho[i]:
                new = caps[:j] + (c - rho[i],) + caps[j + 1:]
                total += rec(i + 1, new)
        return total
    return rec(0, tuple(mu))


def _p_to_m(n):
    """{rho: {mu: int}} with p_rho = sum_mu L[rho][mu] m_mu."""
    out = {}
    for rho in partitions_of(n):
        row = {}
        for mu in partitions_of(n):
            c = _count_fillings(rho, mu)
            if c:
                row[mu] = c
        out[rho] = row
    return out


def _m_to_p(n):
    """Inverse of the p-to-m matrix, exactly over Q."""
    L = _P_TO_M(n)
    parts = list(partitions_of(n))
    # p_rho is supported on mu dominating rho; solve by back substitution in
    # reverse-lex order, where the matrix is triangular.
    order = {p: i for i, p in enumerate(parts)}
    inv = {}
    for mu in parts:  # m_mu = (p_mu - sum_{nu > mu} L[mu][nu] m_nu) / L[mu][mu]
        row = {mu: Fraction(1, L[mu][mu])}
        for nu, c in L[mu].items():
            if nu == mu:
                continue
            assert order[nu] < order[mu]
            for rho, v in inv[nu].items():
                row[rho] = row.get(rho, 0) - Fraction(c, L[mu][mu]) * v
        inv[mu] = {k: v for k, v in row.items() if v}
    return inv


def _s_to_p(n):
    return {lam: {rho: Fraction(character(lam, rho), rho.z) for rho in partitions_of(n)
                  if character(lam, rho)}
            for lam in partitions_of(n)}


_P_TO_M = _WriteOnce(_p_to_m)
_M_TO_P = _WriteOnce(_m_to_p)
_S_TO_P = _WriteOnce(_s_to_p)


# -- symmetric functions --------------------------------------------------------

def _as_ratfunc(c):
    return c if isinstance(c, RatFunc) else RatFunc(c)


def _partition_key(p):
    return (p.size, tuple(-x for x in p))


class SymFunc:
    """Immutable symmetric function: power-sum coefficients plus a display basis."""

    __slots__ = ("_p", "basis")

    def __init__(self, terms=None, basis=POWER):
        """``terms`` maps partitions to coefficients in ``basis``."""
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        self.basis = basis
        terms = terms or {}
        clean = {}
        for lam, c in terms.items():
            c = _as_ratfunc(c)
            if not c.is_zero():
                clean[Partition(lam)] = c
        if basis == POWER:
            self._p = clean
        else:
            self._p = _to_power(clean, basis)

    @classmethod
    def _from_power(cls, p, basis=POWER):
        self = object.__new__(cls)
        self._p = {k: v for k, v in p.items() if not v.is_zero()}
        self.basis = basis
        return self

    # constructors
    @classmethod
    def p(cls, lam):
        return cls._from_power({Partition(lam): ONE})

    @classmethod
    def m(cls, lam):
        return cls({lam: 1}, MONOMIAL)

    @classmethod
    def s(cls, lam):
        return cls({lam: 1}, SCHUR)

    @classmethod
    def one(cls):
        return cls._from_power({Partition(()): ONE})

    @classmethod
    def zero(cls):
        return cls._from_power({})

    # access
    def power_terms(self):
        return dict(self._p)

    def terms(self, basis=None):
        """Coefficients in ``basis`` (defaults to the display basis)."""
        basis = basis or self.basis
        if basis == POWER:
            return dict(self._p)
        return _from_power(self._p, basis)

    def coefficient(self, lam, basis=None):
        return self.terms(basis).get(Partition(lam), ZERO)

    def to(self, basis):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        return SymFunc._from_power(self._p, basis)

    def degrees(self):
        return sorted({lam.size for lam in self._p})

    def degree(self):
        return max((lam.size for lam in self._p), default=0)

    def is_zero(self):
        return not self._p

    def component(self, k):
        return SymFunc._from_power({l: c for l, c in self._p.items() if l.size == k}, self.basis)

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def map_coefficients(self, fn):
        return SymFunc._from_power({l: fn(c) for l, c in self._p.items()}, self.basis)

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._p)
        groups = {}
        for l, c in other._p.items():
            if l in out:
                groups[l] = [out[l], c]
            else:
                out[l] = c
        for l, pair in groups.items():
            out[l] = rsum(pair)
        return SymFunc._from_power(out, self.basis)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._from_power({l: -c for l, c in self._p.items()}, self.basis)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, RatFunc)):
            c = _as_ratfunc(other)
            if c.is_zero():
                return SymFunc._from_power({}, self.basis)
            return SymFunc._from_power({l: v * c for l, v in self._p.items()}, self.basis)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self * (ONE / _as_ratfunc(other))
        return NotImplemented

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._p == other._p

    def __hash__(self):
        return hash(frozenset(self._p.items()))

    def __repr__(self):
        return "SymFunc(%s)" % self

    def __str__(self):
        terms = self.terms()
        if not terms:
            return "0"
        sym = {POWER: "p", MONOMIAL: "m", SCHUR: "s"}[self.basis]
        parts = []
        for lam in sorted(terms, key=_partition_key):
            parts.append("(%s)*%s[%s]" % (terms[lam], sym, lam))
        return " + ".join(parts)

    # serialization
    def to_json_obj(self):
        terms = self.terms()
        return {
            "basis": self.basis,
            "terms": [{"partition": list(lam), "coeff": str(terms[lam])}
                      for lam in sorted(terms, key=_partition_key)],
        }

    def to_json(self):
        return json.dumps(self.to_json_obj(), ensure_ascii=False)

    @classmethod
    def from_json_obj(cls, obj):
        terms = {Partition(t["partition"]): RatFunc(t["coeff"]) for t in obj["terms"]}
        return cls(terms, obj["basis"])

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))


def _coerce(x):
    if isinstance(x, SymFunc):
        return x
    if isinstance(x, (int, Fraction, RatFunc)):
        c = _as_ratfunc(x)
        return SymFunc._from_power({Partition(()): c} if not c.is_zero() else {})
    return None


def _to_power(terms, basis):
    table = _M_TO_P if basis == MONOMIAL else _S_TO_P
    acc = {}
    for lam, c in terms.items():
        check_degree(lam.size)
        for rho, v in table(lam.size)[lam].items():
            acc.setdefault(rho, []).append(c * v)
    return {rho: rsum(vals) for rho, vals in acc.items()}


def _from_power(p, basis):
    acc = {}
    if basis == MONOMIAL:
        for rho, c in p.items():
            for mu, v in _P_TO_M(rho.size)[rho].items():
                acc.setdefault(mu, []).append(c * v)
    else:
        for rho, c in p.items():
            for lam in partitions_of(rho.size):
                chi = character(lam, rho)
                if chi:
                    acc.setdefault(lam, []).append(c * chi)
    out = {}
    for lam, vals in acc.items():
        v = rsum(vals)
        if not v.is_zero():
            out[lam] = v
    return out


def convert(f, basis):
    """Same function, displayed in another basis."""
    return f.to(basis)


def _merge(a, b):
    return Partition(sorted(a + b, reverse=True))


def multiply(f, g):
    """Product; power sums multiply by concatenating their indices."""
    check_degree(f.degree() + g.degree())
    acc = {}
    for la, ca in f._p.items():
        for lb, cb in g._p.items():
            acc.setdefault(_merge(la, lb), []).append(ca * cb)
    return SymFunc._from_power({l: rsum(v) for l, v in acc.items()}, f.basis)


# -- inner products ----------------------------------------------------------------

_q = RatFunc.var("q")
_t = RatFunc.var("t")


@lru_cache(maxsize=None)
def z_qt(lam):
    """z_lam * prod (1 - q^{lam_i}) / (1 - t^{lam_i})."""
    lam = Partition(lam)
    out = RatFunc(lam.z)
    for x in lam:
        out = out * RatFunc.one_minus_monomial(eq=x) / RatFunc.one_minus_monomial(et=x)
    return out


@lru_cache(maxsize=None)
def z_t(lam):
    """z_lam / prod (1 - t^{lam_i})."""
    lam = Partition(lam)
    out = RatFunc(lam.z)
    for x in lam:
        out = out / RatFunc.one_minus_monomial(et=x)
    return out


def _inner(f, g, weight):
    f, g = _coerce(f), _coerce(g)
    terms = []
    small, big = (f._p, g._p) if len(f._p) <= len(g._p) else (g._p, f._p)
    for lam, c in small.items():
        d = big.get(lam)
        if d is not None:
            terms.append(c * d * weight(lam))
    return rsum(terms)


def inner_qt(f, g):
    """Bilinear form with <p_lam, p_mu> = delta * z_lam(q, t)."""
    return _inner(f, g, z_qt)


def inner_t(f, g):
    """The q = 0 form: <p_lam, p_mu> = delta * z_lam / prod(1 - t^{lam_i})."""
    return _inner(f, g, z_t)


def inner_hall(f, g):
    """Classical form with <p_lam, p_mu> = delta * z_lam."""
    return _inner(f, g, lambda lam: RatFunc(lam.z))


# -- alphabets -----------------------------------------------------------------

class Alphabet:
    """Virtual alphabet given by the value of every power sum p_n."""

    __slots__ = ("_rule", "name", "_cache")

    def __init__(self, rule, name="A"):
        self._rule = rule
        self.name = name
        self._cache = {}

    def __call__(self, n):
        v = self._cache.get(n)
        if v is None:
            v = _as_ratfunc(self._rule(n))
            self._cache[n] = v
        return v

    def __repr__(self):
        return "Alphabet(%s)" % self.name

    def __add__(self, other):
        return Alphabet(lambda n: self(n) + other(n), "(%s)+(%s)" % (self.name, other.name))

    def __sub__(self, other):
        return Alphabet(lambda n: self(n) - other(n), "(%s)-(%s)" % (self.name, other.name))

    def __neg__(self):
        return Alphabet(lambda n: -self(n), "-(%s)" % self.name)

    def __mul__(self, other):
        return Alphabet(lambda n: self(n) * other(n), "(%s)(%s)" % (self.name, other.name))

    @staticmethod
    def singleton(x, name=None):
        x = _as_ratfunc(x)
        return Alphabet(lambda n: x ** n, name or str(x))

    @staticmethod
    def finite(values, name=None):
        values = [_as_ratfunc(v) for v in values]
        return Alphabet(lambda n: rsum([v ** n for v in values]),
                        name or "{%s}" % ",".join(map(str, values)))

    @staticmethod
    def difference(a, b, name=None):
        a, b = _as_ratfunc(a), _as_ratfunc(b)
        return Alphabet(lambda n: a ** n - b ** n, name or "%s-%s" % (a, b))

    @staticmethod
    def geometric(x, name=None):
        """1/(1 - x): p_n = 1/(1 - x^n)."""
        x = _as_ratfunc(x)
        return Alphabet(lambda n: ONE / (ONE - x ** n), name or "1/(1-%s)" % x)

    @staticmethod
    def ratio(num, den, name=None):
        """(1 - num)/(1 - den): p_n = (1 - num^n)/(1 - den^n)."""
        num, den = _as_ratfunc(num), _as_ratfunc(den)
        return Alphabet(lambda n: (ONE - num ** n) / (ONE - den ** n),
                        name or "(1-%s)/(1-%s)" % (num, den))

    @staticmethod
    def constant(c, name=None):
        """The scalar alphabet c (p_n = c for all n); c = -1 is the negative unit."""
        c = _as_ratfunc(c)
        return Alphabet(lambda n: c, name or str(c))


UNIT = Alphabet.constant(1, "1")


def eval_alphabet(f, A):
    """Substitute p_n -> A(n) into f."""
    terms = []
    for lam, c in _coerce(f)._p.items():
        v = c
        for x in lam:
            v = v * A(x)
        terms.append(v)
    return rsum(terms)


def scale_power_sums(f, rule, basis=None):
    """The ring map p_n -> rule(n) * p_n."""
    f = _coerce(f)
    out = {}
    for lam, c in f._p.items():
        v = c
        for x in lam:
            v = v * _as_ratfunc(rule(x))
        out[lam] = v
    return SymFunc._from_power(out, basis or f.basis)


def plethysm_geometric(f, denomvar="t"):
    """f(X / (1 - v)) with v in {q, t}: p_n -> p_n / (1 - v^n)."""
    v = RatFunc.var(denomvar)
    return scale_power_sums(f, lambda n: ONE / (ONE - v ** n))


def plethysm_difference(f, denomvar="t"):
    """f((1 - v) X): p_n -> (1 - v^n) p_n, the inverse of plethysm_geometric."""
    v = RatFunc.var(denomvar)
    return scale_power_sums(f, lambda n: ONE - v ** n)


def g_element(k, A=UNIT):
    """Degree-k part of exp(sum_n (1-t^n)/(1-q^n) A(n) p_n z^n / n)."""
    check_degree(k)
    out = {}
    for rho in partitions_of(k):
        c = RatFunc(Fraction(1, rho.z))
        for x in rho:
            c = c * A(x) * RatFunc.one_minus_monomial(et=x) / RatFunc.one_minus_monomial(eq=x)
        if not c.is_zero():
            out[rho] = c
    return SymFunc._from_power(out)


def _derivative_factor(rho, sigma):
    """Coefficient and remainder for prod d/dp applied to p_sigma."""
    mr, ms = rho.multiplicities, dict(sigma.multiplicities)
    c = 1
    for part, m in mr.items():
        have = ms.get(part, 0)
        if have < m:
            return 0, None
        for j in range(m):
            c *= have - j
        ms[part] = have - m
    rest = Partition(sorted((x for x, m in ms.items() for _ in range(m)), reverse=True))
    return c, rest


def perp(f, target, which="qt"):
    """Adjoint of multiplication by f for the chosen form ("qt", "t" or "hall")."""
    f, target = _coerce(f), _coerce(target)
    weight = {"qt": z_qt, "t": z_t, "hall": lambda lam: RatFunc(lam.z)}[which]
    acc = {}
    for rho, c in f._p.items():
        # prod over parts n of n * w(n) equals z_w(rho) / prod m_i(rho)!
        mfact = 1
        for m in rho.multiplicities.values():
            mfact *= factorial(m)
        scale = c * weight(rho) / mfact
        for sigma, d in target._p.items():
            k, rest = _derivative_factor(rho, sigma)
            if k:
                acc.setdefault(rest, []).append(scale * d * k)
    return SymFunc._from_power({l: rsum(v) for l, v in acc.items()}, target.basis)


def specialize(f, **values):
    """Coefficientwise substitution, e.g. specialize(f, q=0, t=-1).

    A pole raises ZeroDivisionError naming the partition whose coefficient
    failed.
    """
    out = {}
    for lam, c in _coerce(f)._p.items():
        try:
            v = c
            for name, val in values.items():
                if isinstance(val, int):
                    v = v.specialize(name, val)
                else:
                    v = v.substitute(**{name: val})
        except ZeroDivisionError as exc:
            raise ZeroDivisionError("coefficient of p[%s]: %s" % (lam, exc)) from None
        out[lam] = v
    return SymFunc._from_power(out, f.basis)


def power_sum_deformed(mu):
    """p_mu(X; t) = p_mu * prod (1 - t^{mu_i})."""
    mu = Partition(mu)
    c = ONE
    for x in mu:
        c = c * RatFunc.one_minus_monomial(et=x)
    return SymFunc._from_power({mu: c})


__all__ = [
    "SymFunc", "Alphabet", "UNIT", "POWER", "MONOMIAL", "SCHUR", "convert",
    "multiply", "inner_qt", "inner_t", "inner_hall", "eval_alphabet", "g_element",
    "perp", "plethysm_geometric", "plethysm_difference", "scale_power_sums",
    "specialize", "z_qt", "z_t", "truncation_degree", "set_truncation_degree",
    "truncation", "DegreeOverflow", "check_degree", "power_sum_deformed",
]
