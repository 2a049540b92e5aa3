"""Cyclotomic atoms Phi_d(x^v) in a primitive Laurent direction v.

Every binomial x^e1 - x^e2 or x^e1 + x^e2 factors over the integers into a
monomial times such atoms, and each atom is irreducible.  Denominators in
this library are almost always products of atoms, so rational functions keep
them symbolically and cancel by bookkeeping instead of gcd computations.
"""
import cmath
from functools import lru_cache
from math import gcd

from .poly import SHIFT, divexact, div_atom, pack, unpack, degrees


@lru_cache(maxsize=None)
def cyclotomic(d):
    """Coefficients of Phi_d from degree 0 upward."""
    num = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            num = _udiv(num, cyclotomic(e))
    return tuple(num)


def _udiv(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, dc in enumerate(den):
            num[i + j] -= c * dc
    assert not any(num), "inexact cyclotomic division"
    return out


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


class Atom:
    """Data for the atom keyed ``(d, v)``.

    ``poly`` is the sign-normalized polynomial x^shift * Phi_d(x^v) (times -1
    when d = 1, so that it reads 1 - x^v).
    """

    __slots__ = ("key", "d", "direction", "coeffs", "shift", "sign", "poly",
                 "support", "root_point", "hi")

    def __init__(self, d, v):
        self.key = (d, v)
        self.d = d
        self.direction = v
        self.coeffs = cyclotomic(d)
        deg = len(self.coeffs) - 1
        self.shift = tuple(deg * max(0, -x) for x in v)
        self.sign = -1 if d == 1 else 1
        poly = {}
        for j, c in enumerate(self.coeffs):
            if c:
                e = tuple(self.shift[i] + j * v[i] for i in range(3))
                poly[pack(*e)] = self.sign * c
        self.poly = poly
        self.support = tuple(i for i in range(3) if v[i])
        _, self.hi = degrees(poly)
        self.root_point = _root_point(d, v)

    def divide(self, p):
        """Exact quotient p / poly, or None."""
        if d_quick_reject(self, p):
            return None
        q = div_atom(p, self.direction, self.coeffs, self.shift)
        if q is None:
            return None
        if self.sign < 0:
            q = {k: -c for k, c in q.items()}
        return q

    def __repr__(self):
        return "Atom(%d, %r)" % self.key


def _root_point(d, v):
    """A complex point where x^v is a primitive d-th root of unity."""
    # Bezout coefficients w with w . v = 1
    w = _bezout(v)
    zeta = cmath.exp(2j * cmath.pi / d)
    return tuple(zeta ** wi for wi in w)


def _bezout(v):
    def ext(a, b):
        if b == 0:
            return (1 if a >= 0 else -1), 0, abs(a)
        x, y, g = ext(b, a % b)
        return y, x - (a // b) * y, g
    x, y, g = ext(v[0], v[1])
    s, u, g2 = ext(g, v[2])
    assert g2 == 1
    return (s * x, s * y, u)


def d_quick_reject(atom, p):
    """Cheap necessary tests for atom | p; True means certainly not."""
    lo, hi = degrees(p)
    for i in range(3):
        if hi[i] - lo[i] < atom.hi[i]:
            return True
    if atom.d == 1:
        return sum(p.values()) != 0
    if atom.d == 2:
        # x^v = -1 at a +-1 point
        i = next(i for i in range(3) if atom.direction[i] % 2)
        sh = SHIFT * (2 - i)
        total = 0
        for k, c in p.items():
            total += -c if (k >> sh) & 1 else c
        return total != 0
    x, y, z = atom.root_point
    total = 0j
    mag = 0
    for k, c in p.items():
        e = unpack(k)
        total += c * (x ** e[0]) * (y ** e[1]) * (z ** e[2])
        mag += abs(c)
    return abs(total) > 1e-7 * mag * max(1, len(p))


_ATOMS = {}


def atom(d, v):
    key = (d, v)
    a = _ATOMS.get(key)
    if a is None:
        a = _ATOMS.setdefault(key, Atom(d, v))
    return a


def primitive_direction(w):
    g = 0
    for x in w:
        g = gcd(g, x)
    return g, tuple(x // g for x in w)


def binomial_factors(p):
    """Factor a primitive, sign-normalized binomial into atoms.

    Returns ``(mono_key, [(atom_key, exp), ...])`` with p = x^mono * prod, or
    None when p is not of the form x^e1 +- x^e2.
    """
    if len(p) != 2:
        return None
    k1, k2 = sorted(p)
    c1, c2 = p[k1], p[k2]
    if c1 != 1 or c2 not in (1, -1):
        return None
    e1, e2 = unpack(k1), unpack(k2)
    w = tuple(e2[i] - e1[i] for i in range(3))
    g, v = primitive_direction(w)
    if c2 == -1:
        ds = divisors(g)
    else:
        ds = [d for d in divisors(2 * g) if g % d]
    factors = [(d, v) for d in ds]
    shift_total = [0, 0, 0]
    for d, _ in factors:
        s = atom(d, v).shift
        for i in range(3):
            shift_total[i] += s[i]
    mono = tuple(e1[i] - shift_total[i] for i in range(3))
    assert min(mono) >= 0
    return pack(*mono), [(f, 1) for f in factors]


@lru_cache(maxsize=4096)
def expand_atoms(items):
    """Expanded product of atoms given as a sorted tuple of (key, exp)."""
    from .poly import mul
    if not items:
        return {0: 1}
    if len(items) == 1:
        key, e = items[0]
        base = atom(*key).poly
        if e == 1:
            return base
        half = expand_atoms(((key, e // 2),))
        out = mul(half, half)
        return mul(out, base) if e % 2 else out
    mid = len(items) // 2
    return mul(expand_atoms(items[:mid]), expand_atoms(items[mid:]))


def divide_out(p, atom_key, limit):
    """Divide p by the atom as many times as possible, at most ``limit``.

    Returns (quotient, times).
    """
    a = atom(*atom_key)
    n = 0
    while n < limit:
        q = a.divide(p)
        if q is None:
            break
        p = q
        n += 1
    return p, n


__all__ = ["atom", "binomial_factors", "expand_atoms", "divide_out",
           "cyclotomic", "divexact"]
