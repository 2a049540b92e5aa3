"""Multivariate polynomial gcd over the integers.

The heuristic gcd (evaluate at a large integer, recurse, rebuild by
balanced base-xi digits, confirm by exact division) answers almost every
call.  A recursive primitive pseudo-remainder sequence is the fallback.
Used only for the rare denominators that are not products of cyclotomic
atoms.
"""
from math import gcd as _igcd, isqrt

from .poly import (SHIFT, FIELD, content, degrees, divexact, mul, lincomb,
                   mono_content)


def _split(p, var):
    """Coefficients of p as a polynomial in ``var``: {power: poly}."""
    sh = SHIFT * (2 - var)
    mask = ~(FIELD << sh)
    out = {}
    for k, c in p.items():
        e = (k >> sh) & FIELD
        out.setdefault(e, {})[k & mask] = c
    return out


def _join(coeffs, var):
    sh = SHIFT * (2 - var)
    out = {}
    for e, poly in coeffs.items():
        off = e << sh
        for k, c in poly.items():
            out[k + off] = c
    return out


def _vars(p):
    _, hi = degrees(p)
    return [i for i in range(3) if hi[i] > 0]


def poly_gcd(a, b):
    """Primitive, sign-normalized gcd of two nonzero integer polynomials.

    The monomial part of the gcd is included.
    """
    if not a or not b:
        raise ValueError("gcd of zero polynomial")
    ma, mb = mono_content(a), mono_content(b)
    a = {k - ma: c for k, c in a.items()}
    b = {k - mb: c for k, c in b.items()}
    # monomial gcd fieldwise
    m = 0
    for i in range(3):
        sh = SHIFT * (2 - i)
        m |= min((ma >> sh) & FIELD, (mb >> sh) & FIELD) << sh
    g = _heu_gcd(a, b)
    if g is None:
        g = _gcd_rec(a, b)
    g = _prim(g)
    return {k + m: c for k, c in g.items()}


_HEU_TRIES = 6


def _norm(p):
    return max(abs(c) for c in p.values())


def _evaluate(p, var, xi):
    sh = SHIFT * (2 - var)
    mask = ~(FIELD << sh)
    out = {}
    for k, c in p.items():
        e = (k >> sh) & FIELD
        j = k & mask
        out[j] = out.get(j, 0) + c * xi ** e
    return {k: c for k, c in out.items() if c}


def _rebuild(h, var, xi):
    """Polynomial whose balanced base-xi digits in ``var`` are read off h."""
    sh = SHIFT * (2 - var)
    half = xi // 2
    out = {}
    e = 0
    while h:
        nxt = {}
        for k, c in h.items():
            d = c % xi
            if d > half:
                d -= xi
            if d:
                out[k | (e << sh)] = d
            rest = (c - d) // xi
            if rest:
                nxt[k] = rest
        h = nxt
        e += 1
    return out


def _heu_gcd(a, b):
    """Heuristic gcd of two nonzero polynomials, or None when it gives up."""
    ca, cb = content(a), content(b)
    cg = _igcd(ca, cb)
    a = {k: c // ca for k, c in a.items()}
    b = {k: c // cb for k, c in b.items()}
    vs = sorted(set(_vars(a)) | set(_vars(b)))
    if not vs:
        return {0: cg}
    var = vs[-1]
    bound = 2 * min(_norm(a), _norm(b)) + 29
    xi = bound  # at least 2 min(norms) + 2, which makes the divisibility test conclusive
    for _ in range(_HEU_TRIES):
        ea, eb = _evaluate(a, var, xi), _evaluate(b, var, xi)
        if ea and eb:
            h = _heu_gcd(ea, eb) if len(vs) > 1 else {0: _igcd(ea[0], eb[0])}
            if h is not None:
                g = _rebuild(h, var, xi)
                if g:
                    g = {k: c // content(g) for k, c in g.items()}
                    if divexact(a, g) is not None and divexact(b, g) is not None:
                        return {k: c * cg for k, c in g.items()}
        xi = xi * 73794 * isqrt(isqrt(xi)) // 27011
    return None


def _gcd_rec(a, b):
    va, vb = _vars(a), _vars(b)
    if not va or not vb:
        return {0: 1}
    allv = sorted(set(va) | set(vb))
    var = allv[-1]  # innermost variable first keeps coefficients small
    if var not in va:
        return _gcd_rec(a, _content_in(b, var))
    if var not in vb:
        return _gcd_rec(_content_in(a, var), b)
    ca = _content_in(a, var)
    cb = _content_in(b, var)
    cg = _gcd_rec(ca, cb)
    pa = divexact(a, ca)
    pb = divexact(b, cb)
    assert pa is not None and pb is not None
    A, B = _split(pa, var), _split(pb, var)
    if max(A) < max(B):
        A, B = B, A
    while True:
        if max(B) == 0:
            pg = {0: 1}
            break
        R = _prem(A, B)
        if not R:
            pg = _join(B, var)
            break
        r = _join(R, var)
        r = _prim(divexact(r, _content_in(r, var)))
        A, B = B, _split(r, var)
    return mul(cg, _prim(pg))


def _prim(p):
    """Remove the integer content and make the lex-lowest coefficient positive."""
    c = content(p)
    if p[min(p)] < 0:
        c = -c
    return p if c == 1 else {k: x // c for k, x in p.items()}


def _content_in(p, var):
    """gcd of the coefficients of p viewed as a polynomial in ``var``."""
    coeffs = sorted(_split(p, var).values(), key=len)
    g = _prim(coeffs[0])
    for c in coeffs[1:]:
        if not _vars(g):
            break
        g = _prim(_gcd_rec(g, c))
    return g if _vars(g) else {0: 1}


def _prem(A, B):
    """Pseudo-remainder of A by B (dicts power -> coefficient polynomial)."""
    db = max(B)
    lb = B[db]
    R = dict(A)
    while R and max(R) >= db:
        dr = max(R)
        lr = R[dr]
        shift = dr - db
        # R = lb*R - lr * x^shift * B
        new = {}
        for e, c in R.items():
            if e == dr:
                continue
            new[e] = mul(c, lb)
        for e, c in B.items():
            if e == db:
                continue
            t = e + shift
            prod = mul(lr, c)
            cur = new.get(t)
            v = lincomb(cur, 1, prod, -1) if cur else {k: -x for k, x in prod.items()}
            if v:
                new[t] = v
            else:
                new.pop(t, None)
        # keep coefficient growth in check
        g = 0
        for c in new.values():
            g = _igcd(g, content(c))
        if g > 1:
            new = {e: {k: x // g for k, x in c.items()} for e, c in new.items()}
        R = {e: c for e, c in new.items() if c}
    return R
