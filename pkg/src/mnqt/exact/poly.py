"""Sparse integer polynomials in q, t, a.

The raw representation is a dict from packed exponent key to int (see
``_pykernels``).  ``MPoly`` wraps such a dict as an immutable value.
Rational polynomials are represented as ``RatFunc`` values with a constant
denominator, so coefficients here are always integers.
"""
from math import gcd

from ._backend import kernels
from ._pykernels import SHIFT, FIELD, LIMIT, ExponentOverflow, pack, unpack, degrees

VARS = ("q", "t", "a")
ONE_KEY = 0

mul = kernels.mul
divexact = kernels.divexact
lincomb = kernels.lincomb
div_atom = kernels.div_atom


def var_key(name, power=1):
    i = VARS.index(name)
    e = [0, 0, 0]
    e[i] = power
    return pack(*e)


def content(p):
    """Positive gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for c in p.values():
        g = gcd(g, c)
        if g == 1:
            break
    return g


def scale(p, c):
    if c == 1:
        return p
    return {k: v * c for k, v in p.items()} if c else {}


def exact_scale_div(p, c):
    if c == 1:
        return p
    return {k: v // c for k, v in p.items()}


def shift(p, key):
    """Multiply by the monomial with packed exponent ``key``."""
    if not key:
        return p
    lo, hi = degrees(p)
    e = unpack(key)
    if any(hi[i] + e[i] >= LIMIT for i in range(3)):
        raise ExponentOverflow("exponent exceeds 2^20")
    return {k + key: v for k, v in p.items()}


def mono_content(p):
    """Packed key of the gcd monomial of the terms of p."""
    lo, _ = degrees(p)
    return pack(*lo)


def lowest_sign(p):
    return 1 if p[min(p)] > 0 else -1


def primitive_normal(p):
    """Split p into (c, m, r) with p = c * x^m * r.

    r has integer content 1, no monomial factor and a positive coefficient
    on its lex-lowest term.  c may be negative.
    """
    m = mono_content(p)
    if m:
        p = {k - m: v for k, v in p.items()}
    c = content(p)
    if p[min(p)] < 0:
        c = -c
    if c != 1:
        p = {k: v // c for k, v in p.items()}
    return c, m, p


def is_constant(p):
    return len(p) == 1 and ONE_KEY in p


def variables(p):
    lo, hi = degrees(p)
    return tuple(i for i in range(3) if hi[i] > 0)


def derivative(p, var):
    i = VARS.index(var)
    unit = (1 << (SHIFT * (2 - i)))
    out = {}
    for k, c in p.items():
        e = unpack(k)[i]
        if e:
            out[k - unit] = c * e
    return out


def specialize_int(p, var, value):
    """Substitute an integer for one variable."""
    i = VARS.index(var)
    sh = SHIFT * (2 - i)
    mask = FIELD << sh
    out = {}
    for k, c in p.items():
        e = (k >> sh) & FIELD
        nk = k & ~mask
        if e:
            if value == 0:
                continue
            c = c * value ** e
        v = out.get(nk, 0) + c
        if v:
            out[nk] = v
        else:
            out.pop(nk, None)
    return out


def evaluate_mod(p, point, prime):
    total = 0
    x, y, z = point
    for k, c in p.items():
        e = unpack(k)
        total += c * pow(x, e[0], prime) * pow(y, e[1], prime) * pow(z, e[2], prime)
    return total % prime


def mono_str(key):
    parts = []
    for name, e in zip(VARS, unpack(key)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def poly_str(p):
    """Print terms in ascending lex order: ``1 - q*t^2``."""
    if not p:
        return "0"
    out = []
    for i, k in enumerate(sorted(p)):
        c = p[k]
        m = mono_str(k)
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = m
        else:
            body = "%d*%s" % (mag, m)
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


class MPoly:
    """Immutable sparse polynomial with integer coefficients in q, t, a."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict) or any(not isinstance(k, int) for k in terms):
            raise TypeError("use MPoly.from_exponents for exponent tuples")
        self._terms = {k: c for k, c in terms.items() if c}
        self._hash = None

    @classmethod
    def from_exponents(cls, mapping):
        """Build from ``{(e_q, e_t, e_a): int}``."""
        out = {}
        for e, c in mapping.items():
            e = tuple(e) + (0,) * (3 - len(e))
            if min(e) < 0:
                raise ValueError("negative exponent %r" % (e,))
            if int(c) != c:
                raise ValueError("MPoly coefficients must be integers")
            k = pack(*e)
            out[k] = out.get(k, 0) + int(c)
        return cls(out)

    @classmethod
    def var(cls, name):
        return cls({var_key(name): 1})

    @classmethod
    def const(cls, c):
        return cls({0: int(c)} if c else {})

    @property
    def raw(self):
        return self._terms

    def terms(self):
        """(exponent triple, coefficient) pairs in ascending lex order."""
        return [(unpack(k), self._terms[k]) for k in sorted(self._terms)]

    def is_zero(self):
        return not self._terms

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other._terms
        if isinstance(other, int):
            return {0: other} if other else {}
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MPoly(lincomb(self._terms, 1, o, 1))

    __radd__ = __add__

    def __neg__(self):
        return MPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MPoly(lincomb(self._terms, 1, o, -1))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MPoly(lincomb(o, 1, self._terms, -1))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MPoly(mul(self._terms, o))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = {0: 1}
        base = self._terms
        while n:
            if n & 1:
                out = mul(out, base)
            n >>= 1
            if n:
                base = mul(base, base)
        return MPoly(out)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        return poly_str(self._terms)

    def __repr__(self):
        return "MPoly(%s)" % poly_str(self._terms)
