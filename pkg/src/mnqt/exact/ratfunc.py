"""Normalized rational functions in q, t, a over the rationals.

A value is kept as ``c * N / D`` where ``c`` is a Fraction and N, D are
factored integer polynomials (``FPoly``): a monomial, a multiset of
cyclotomic atoms and a tuple of opaque primitive "rest" factors.  The
factored form is reduced at all times: N and D share no atom, no variable,
and no rest has a common factor with anything on the other side.  Because
the expanded forms of such a pair are coprime, primitive, and sign
normalized, they are the canonical representative used for equality,
hashing and printing.
"""
import re
from fractions import Fraction
from math import gcd as igcd

from .atoms import atom, binomial_factors, expand_atoms
from .gcd import poly_gcd
from .poly import (VARS, LIMIT, MPoly, ExponentOverflow, degrees, divexact,
                   lincomb, mul, pack, poly_str, primitive_normal, unpack,
                   var_key)

_EMPTY = {}


class FPoly:
    """Factored integer polynomial: x^mono * prod(atoms) * prod(rests)."""

    __slots__ = ("mono", "atoms", "rests", "_exp")

    def __init__(self, mono=0, atoms=None, rests=()):
        self.mono = mono
        self.atoms = atoms if atoms is not None else {}
        self.rests = rests
        self._exp = None

    def is_one(self):
        return not self.mono and not self.atoms and not self.rests

    def atoms_key(self):
        return tuple(sorted(self.atoms.items()))

    def expand(self):
        if self._exp is None:
            p = expand_atoms(self.atoms_key()) if self.atoms else {0: 1}
            for r in self.rests:
                p = mul(p, r)
            if self.mono:
                p = _shift(p, self.mono)
            self._exp = p
        return self._exp


ONE_F = FPoly()


def _shift(p, key):
    if not key:
        return p
    _, hi = degrees(p)
    e = unpack(key)
    for i in range(3):
        if hi[i] + e[i] >= LIMIT:
            raise ExponentOverflow("exponent exceeds 2^20")
    return {k + key: c for k, c in p.items()}


def _mono_add(a, b):
    if not a:
        return b
    if not b:
        return a
    ea, eb = unpack(a), unpack(b)
    return pack(ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])


def _mono_cancel(a, b):
    """Remove the common part of two monomial keys."""
    if not a or not b:
        return a, b
    ea, eb = unpack(a), unpack(b)
    m = [min(ea[i], eb[i]) for i in range(3)]
    return (pack(ea[0] - m[0], ea[1] - m[1], ea[2] - m[2]),
            pack(eb[0] - m[0], eb[1] - m[1], eb[2] - m[2]))


def _mono_max(a, b):
    ea, eb = unpack(a), unpack(b)
    return pack(*(max(ea[i], eb[i]) for i in range(3)))


def _mono_sub(a, b):
    ea, eb = unpack(a), unpack(b)
    return pack(*(ea[i] - eb[i] for i in range(3)))


def _classify(p):
    """Factor a primitive, sign-normalized polynomial without monomial part.

    Returns (atoms dict, rests tuple).
    """
    if len(p) == 1:
        return {}, ()
    bf = binomial_factors(p)
    if bf is not None:
        mono, fs = bf
        assert mono == 0
        return dict(fs), ()
    return {}, (p,)


def _merge_atoms(a, b):
    if not a:
        return dict(b)
    out = dict(a)
    for k, e in b.items():
        out[k] = out.get(k, 0) + e
    return out


def _cancel_atoms(na, da):
    """Cancel common atoms in place-free manner; returns new dicts."""
    if not na or not da:
        return na, da
    common = [k for k in na if k in da]
    if not common:
        return na, da
    na, da = dict(na), dict(da)
    for k in common:
        m = min(na[k], da[k])
        na[k] -= m
        da[k] -= m
        if not na[k]:
            del na[k]
        if not da[k]:
            del da[k]
    return na, da


def _strip_rests(rests, atoms_other):
    """Trial-divide each rest by the atoms of the other side.

    Returns (new rests, new other atoms) with every successful division
    removed from both.
    """
    if not rests or not atoms_other:
        return rests, atoms_other
    atoms_other = dict(atoms_other)
    out = []
    for r in rests:
        for key in list(atoms_other):
            e = atoms_other[key]
            n = 0
            while n < e:
                q = atom(*key).divide(r)
                if q is None:
                    break
                r = q
                n += 1
            if n:
                if n == e:
                    del atoms_other[key]
                else:
                    atoms_other[key] = e - n
            if len(r) == 1:
                break
        if len(r) > 1:
            out.append(r)
    return tuple(out), atoms_other


def _cancel_rests(nr, dr):
    """Remove gcds between numerator and denominator rests."""
    if not nr or not dr:
        return nr, dr
    nr, dr = list(nr), list(dr)
    for i in range(len(nr)):
        for j in range(len(dr)):
            a, b = nr[i], dr[j]
            if len(a) == 1 or len(b) == 1:
                continue
            g = poly_gcd(a, b)
            if len(g) > 1:
                nr[i] = divexact(a, g)
                dr[j] = divexact(b, g)
    nr = tuple(r for r in nr if len(r) > 1)
    dr = tuple(r for r in dr if len(r) > 1)
    return nr, dr


def _reclassify(rests):
    """Split rests that happen to be binomials into atoms."""
    atoms_out = {}
    keep = []
    for r in rests:
        a, rr = _classify(r)
        if a:
            for k, e in a.items():
                atoms_out[k] = atoms_out.get(k, 0) + e
        keep.extend(rr)
    return atoms_out, tuple(keep)


def _canon(c, nm, na, nr, dm, da, dr):
    """Reduce a factored fraction completely and build a RatFunc."""
    if not c:
        return ZERO
    nm, dm = _mono_cancel(nm, dm)
    na, da = _cancel_atoms(na, da)
    if nr and da:
        nr, da = _strip_rests(nr, da)
    if dr and na:
        dr, na = _strip_rests(dr, na)
    if nr and dr:
        nr, dr = _cancel_rests(nr, dr)
    return RatFunc._make(c, FPoly(nm, na, nr), FPoly(dm, da, dr))


def _fpoly_from_poly(p):
    """Factor an arbitrary nonzero integer polynomial: (const, FPoly)."""
    c, m, r = primitive_normal(p)
    a, rests = _classify(r)
    return c, FPoly(m, a, rests)


class RatFunc:
    """Exact element of Q(q, t, a) in reduced canonical form."""

    __slots__ = ("_c", "_n", "_d", "_N", "_D", "_hash")

    @classmethod
    def _make(cls, c, n, d):
        self = object.__new__(cls)
        self._c = c
        self._n = n
        self._d = d
        self._N = None
        self._D = None
        self._hash = None
        return self

    def __init__(self, value=0):
        if isinstance(value, RatFunc):
            src = value
        elif isinstance(value, str):
            from .parse import parse
            src = parse(value)
        elif isinstance(value, MPoly):
            src = RatFunc.from_poly(value.raw)
        else:
            src = RatFunc.const(value)
        self._c, self._n, self._d = src._c, src._n, src._d
        self._N = self._D = self._hash = None

    # construction -------------------------------------------------------
    @staticmethod
    def const(value):
        value = Fraction(value)
        if not value:
            return ZERO
        return RatFunc._make(value, ONE_F, ONE_F)

    @staticmethod
    def var(name, power=1):
        if power >= 0:
            return RatFunc._make(Fraction(1), FPoly(var_key(name, power)), ONE_F)
        return RatFunc._make(Fraction(1), ONE_F, FPoly(var_key(name, -power)))

    @staticmethod
    def monomial(coeff, eq=0, et=0, ea=0):
        """coeff * q^eq * t^et * a^ea with possibly negative exponents."""
        coeff = Fraction(coeff)
        if not coeff:
            return ZERO
        num = pack(max(eq, 0), max(et, 0), max(ea, 0))
        den = pack(max(-eq, 0), max(-et, 0), max(-ea, 0))
        return RatFunc._make(coeff, FPoly(num), FPoly(den))

    @staticmethod
    def from_poly(p):
        """Wrap a raw integer polynomial dict."""
        if not p:
            return ZERO
        c, f = _fpoly_from_poly(p)
        return RatFunc._make(Fraction(c), f, ONE_F)

    @staticmethod
    def normalize(num, den):
        """Canonical form of num/den for integer polynomials (raw or MPoly)."""
        if isinstance(num, MPoly):
            num = num.raw
        if isinstance(den, MPoly):
            den = den.raw
        if not den:
            raise ZeroDivisionError("division by zero")
        if not num:
            return ZERO
        cn, fn = _fpoly_from_poly(num)
        cd, fd = _fpoly_from_poly(den)
        return _canon(Fraction(cn, cd), fn.mono, fn.atoms, fn.rests,
                      fd.mono, fd.atoms, fd.rests)

    @staticmethod
    def one_minus_monomial(eq=0, et=0, ea=0, coeff=1):
        """1 - coeff*q^eq*t^et*a^ea for nonnegative exponents, coeff = +-1."""
        p = {0: 1}
        k = pack(eq, et, ea)
        if k == 0:
            return RatFunc.const(1 - coeff)
        p[k] = -coeff
        return RatFunc.from_poly(p)

    # accessors ----------------------------------------------------------
    def _expanded(self):
        if self._N is None:
            c = self._c
            if not c:
                self._N, self._D = {}, {0: 1}
            else:
                n = self._n.expand()
                d = self._d.expand()
                if c.numerator != 1:
                    n = {k: v * c.numerator for k, v in n.items()}
                if c.denominator != 1:
                    d = {k: v * c.denominator for k, v in d.items()}
                self._N, self._D = n, d
        return self._N, self._D

    @property
    def num(self):
        return MPoly(self._expanded()[0])

    @property
    def den(self):
        return MPoly(self._expanded()[1])

    @property
    def constant_factor(self):
        return self._c

    def is_zero(self):
        return not self._c

    def is_constant(self):
        return self._n.is_one() and self._d.is_one()

    def is_polynomial(self):
        return self._d.is_one() and self._c.denominator == 1

    def has_rest_denominator(self):
        return bool(self._d.rests)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        return self._c

    def variables(self):
        n, d = self._expanded()
        out = set()
        for p in (n, d):
            if p:
                _, hi = degrees(p)
                out.update(VARS[i] for i in range(3) if hi[i])
        return out

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(x)
        if isinstance(x, MPoly):
            return RatFunc.from_poly(x.raw)
        return None

    def __mul__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        if not self._c or not o._c:
            return ZERO
        if o.is_constant():
            if o._c == 1:
                return self
            return RatFunc._make(self._c * o._c, self._n, self._d)
        if self.is_constant():
            if self._c == 1:
                return o
            return RatFunc._make(self._c * o._c, o._n, o._d)
        x, y = self, o
        c = x._c * y._c
        nm = _mono_add(x._n.mono, y._n.mono)
        dm = _mono_add(x._d.mono, y._d.mono)
        na = _merge_atoms(x._n.atoms, y._n.atoms)
        da = _merge_atoms(x._d.atoms, y._d.atoms)
        nm, dm = _mono_cancel(nm, dm)
        na, da = _cancel_atoms(na, da)
        # only cross pairs can share factors
        xnr, ynr = x._n.rests, y._n.rests
        xdr, ydr = x._d.rests, y._d.rests
        if (xnr or ynr) and da:
            if xnr and y._d.atoms:
                xnr, da = _strip_rests(xnr, da)
            if ynr and x._d.atoms:
                ynr, da = _strip_rests(ynr, da)
        if (xdr or ydr) and na:
            if xdr and y._n.atoms:
                xdr, na = _strip_rests(xdr, na)
            if ydr and x._n.atoms:
                ydr, na = _strip_rests(ydr, na)
        if xnr and ydr:
            xnr, ydr = _cancel_rests(xnr, ydr)
        if ynr and xdr:
            ynr, xdr = _cancel_rests(ynr, xdr)
        return RatFunc._make(c, FPoly(nm, na, xnr + ynr), FPoly(dm, da, xdr + ydr))

    __rmul__ = __mul__

    def inverse(self):
        if not self._c:
            raise ZeroDivisionError("division by zero")
        return RatFunc._make(1 / self._c, self._d, self._n)

    def __truediv__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        if not self._c:
            return self
        return RatFunc._make(-self._c, self._n, self._d)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return rsum((self, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return rsum((self, -o))

    def __rsub__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return rsum((o, -self))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # comparison / hashing --------------------------------------------------
    def __eq__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        if self is o:
            return True
        if self._c != o._c:
            return False
        if self.is_constant() and o.is_constant():
            return True
        return self._expanded() == o._expanded()

    def __hash__(self):
        if self._hash is None:
            n, d = self._expanded()
            self._hash = hash((frozenset(n.items()), frozenset(d.items())))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    # printing ---------------------------------------------------------------
    def __str__(self):
        n, d = self._expanded()
        ns = poly_str(n)
        if d == {0: 1}:
            return ns
        ds = poly_str(d)
        if len(n) > 1:
            ns = "(" + ns + ")"
        if len(d) > 1 or "*" in ds:
            ds = "(" + ds + ")"
        return ns + "/" + ds

    def __repr__(self):
        return "RatFunc(%r)" % str(self)

    def latex(self):
        """LaTeX rendering of the expanded form."""
        n, d = self._expanded()

        def tex(poly):
            return re.sub(r"\^(\d+)", r"^{\1}", poly_str(poly).replace("*", " "))
        if d == {0: 1}:
            return tex(n)
        if d == {0: -1}:
            return tex({k: -v for k, v in n.items()})
        return "\\frac{%s}{%s}" % (tex(n), tex(d))

    def factored_str(self):
        """Human-oriented factored rendering (not canonical)."""
        parts = []
        if self._c != 1:
            parts.append(str(self._c))
        for label, f in (("", self._n), ("/", self._d)):
            for key, e in sorted(f.atoms.items()):
                s = "(" + poly_str(atom(*key).poly) + ")"
                parts.append(label + s + ("^%d" % e if e > 1 else ""))
            for r in f.rests:
                parts.append(label + "(" + poly_str(r) + ")")
            if f.mono:
                from .poly import mono_str
                parts.append(label + mono_str(f.mono))
        return " ".join(parts) or "1"

    # substitution -------------------------------------------------------
    def substitute(self, **values):
        """Substitute variables by RatFunc / int / Fraction values.

        Raises ``ZeroDivisionError`` naming the value when the substitution
        hits a pole.
        """
        if not values:
            return self
        n, d = self._expanded()
        vals = [None, None, None]
        for name, v in values.items():
            vals[VARS.index(name)] = RatFunc._coerce(v) if not isinstance(v, RatFunc) else v
        num = _subs_poly(n, vals)
        den = _subs_poly(d, vals)
        if den.is_zero():
            raise ZeroDivisionError("pole at %s in %s" % (
                ", ".join("%s=%s" % kv for kv in sorted(values.items(), key=lambda x: x[0])), self))
        return num / den

    def specialize(self, var, value):
        """Fast substitution of an integer value for one variable."""
        from .poly import specialize_int
        n, d = self._expanded()
        dd = specialize_int(d, var, value)
        if not dd:
            raise ZeroDivisionError("pole at %s=%s in %s" % (var, value, self))
        nn = specialize_int(n, var, value)
        if not nn:
            return ZERO
        return RatFunc.normalize(nn, dd)


def _subs_poly(p, vals):
    """Evaluate an integer polynomial with some variables replaced."""
    # group by the substituted exponents to share power computations
    powers = [{} for _ in range(3)]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = vals[i] ** e
        return cache[e]

    groups = {}
    for k, c in p.items():
        e = unpack(k)
        kept = [0, 0, 0]
        sub = []
        for i in range(3):
            if vals[i] is None:
                kept[i] = e[i]
            else:
                sub.append((i, e[i]))
        groups.setdefault(tuple(sub), {})
        g = groups[tuple(sub)]
        kk = pack(*kept)
        g[kk] = g.get(kk, 0) + c
    terms = []
    for sub, poly in groups.items():
        poly = {k: c for k, c in poly.items() if c}
        if not poly:
            continue
        val = RatFunc.from_poly(poly)
        for i, e in sub:
            if e:
                val = val * power(i, e)
        terms.append(val)
    return rsum(terms)


def _lcm_int(a, b):
    return a // igcd(a, b) * b


def rsum(items):
    """Sum of RatFunc values with a single shared-denominator pass."""
    terms = [x for x in items if x._c]
    if not terms:
        return ZERO
    if len(terms) == 1:
        return terms[0]
    if any(x._d.rests for x in terms):
        return _rsum_general(terms)
    # common denominator L: max monomial, max atom exponents
    L_mono = 0
    L_atoms = {}
    hits = {}
    for x in terms:
        if x._d.mono:
            L_mono = _mono_max(L_mono, x._d.mono) if L_mono else x._d.mono
        for k, e in x._d.atoms.items():
            cur = L_atoms.get(k, 0)
            if e > cur:
                L_atoms[k] = e
                hits[k] = 1
            elif e == cur:
                hits[k] += 1
    lden = 1
    for x in terms:
        lden = _lcm_int(lden, x._c.denominator)
    total = {}
    cache = {}
    for x in terms:
        cof_atoms = {k: e - x._d.atoms.get(k, 0) for k, e in L_atoms.items()
                     if e - x._d.atoms.get(k, 0)}
        num_atoms = _merge_atoms(x._n.atoms, cof_atoms)
        key = tuple(sorted(num_atoms.items()))
        p = cache.get(key)
        if p is None:
            p = expand_atoms(key) if key else {0: 1}
            cache[key] = p
        for r in x._n.rests:
            p = mul(p, r)
        shift = _mono_add(x._n.mono, _mono_sub(L_mono, x._d.mono) if L_mono else 0)
        scale = x._c.numerator * (lden // x._c.denominator)
        if shift:
            p = _shift(p, shift)
        total = lincomb(total, 1, p, scale) if total else {k: v * scale for k, v in p.items()}
    if not total:
        return ZERO
    c, m, r = primitive_normal(total)
    # cancel the monomial part against L
    m, L_mono = _mono_cancel(m, L_mono)
    # candidate atoms: maximal exponent attained by at least two terms
    den_atoms = dict(L_atoms)
    for k, e in L_atoms.items():
        if hits[k] < 2 or len(r) == 1:
            continue
        a = atom(*k)
        n = 0
        while n < e:
            qq = a.divide(r)
            if qq is None:
                break
            r = qq
            n += 1
        if n:
            if n == e:
                del den_atoms[k]
            else:
                den_atoms[k] = e - n
    na, nr = _classify(r)
    if na:
        # a binomial numerator cannot share atoms with the denominator here,
        # except through atoms that were not candidates; cancel symbolically
        na, den_atoms = _cancel_atoms(na, den_atoms)
    return RatFunc._make(Fraction(c, lden), FPoly(m, na, nr), FPoly(L_mono, den_atoms, ()))


def _rsum_general(terms):
    acc = terms[0]
    for x in terms[1:]:
        an, ad = acc._expanded()
        xn, xd = x._expanded()
        if ad == xd:
            num = lincomb(an, 1, xn, 1)
            den = ad
        else:
            num = lincomb(mul(an, xd), 1, mul(xn, ad), 1)
            den = mul(ad, xd)
        acc = RatFunc.normalize(num, den) if num else ZERO
    return acc


def rprod(items):
    out = ONE
    for x in items:
        out = out * x
    return out


ZERO = RatFunc._make(Fraction(0), ONE_F, ONE_F)
ONE = RatFunc._make(Fraction(1), ONE_F, ONE_F)
