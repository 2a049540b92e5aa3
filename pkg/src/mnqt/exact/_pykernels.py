"""Pure-Python sparse polynomial kernels.

Polynomials are plain dicts mapping a packed exponent key to a nonzero
Python int.  A key packs (e_q, e_t, e_a) as ``e_q << 42 | e_t << 21 | e_a``
so integer order on keys is lex order with q > t > a.  The compiled module
``_ckernels`` exposes the same functions with the same semantics.
"""

SHIFT = 21
FIELD = (1 << SHIFT) - 1
LIMIT = 1 << (SHIFT - 1)

BACKEND = "python"


class ExponentOverflow(OverflowError):
    pass


def unpack(k):
    return (k >> 42, (k >> SHIFT) & FIELD, k & FIELD)


def pack(eq, et, ea):
    if eq >= LIMIT or et >= LIMIT or ea >= LIMIT:
        raise ExponentOverflow("exponent exceeds 2^20")
    return (eq << 42) | (et << SHIFT) | ea


def degrees(a):
    """Per-variable (min, max) exponents of a nonzero polynomial."""
    lo = [LIMIT, LIMIT, LIMIT]
    hi = [0, 0, 0]
    for k in a:
        e = (k >> 42, (k >> SHIFT) & FIELD, k & FIELD)
        for i in range(3):
            if e[i] < lo[i]:
                lo[i] = e[i]
            if e[i] > hi[i]:
                hi[i] = e[i]
    return lo, hi


def mul(a, b):
    """Product of two sparse polynomials."""
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    _, ha = degrees(a)
    _, hb = degrees(b)
    if ha[0] + hb[0] >= LIMIT or ha[1] + hb[1] >= LIMIT or ha[2] + hb[2] >= LIMIT:
        raise ExponentOverflow("exponent exceeds 2^20")
    out = {}
    get = out.get
    bitems = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bitems:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def divexact(a, b):
    """Return a / b when b divides a over the integers, else None.

    Leading-term division in lex order, abandoned as soon as a quotient term
    leaves the exponent box that an exact quotient must occupy.
    """
    if not a:
        return {}
    la, ha = degrees(a)
    lb, hb = degrees(b)
    qlo = [la[i] - lb[i] for i in range(3)]
    qhi = [ha[i] - hb[i] for i in range(3)]
    if min(qlo) < 0 or any(qlo[i] > qhi[i] for i in range(3)):
        return None
    lead_b = max(b)
    cb = b[lead_b]
    rest_b = [(k - lead_b, c) for k, c in b.items() if k != lead_b]
    rem = dict(a)
    quo = {}
    while rem:
        lead = max(rem)
        qk = lead - lead_b
        if qk < 0:
            return None
        e = (qk >> 42, (qk >> SHIFT) & FIELD, qk & FIELD)
        if (e[0] < qlo[0] or e[0] > qhi[0] or e[1] < qlo[1] or e[1] > qhi[1]
                or e[2] < qlo[2] or e[2] > qhi[2]):
            return None
        c = rem.pop(lead)
        qc, r = divmod(c, cb)
        if r:
            return None
        quo[qk] = qc
        for dk, dc in rest_b:
            k = lead + dk
            v = rem.get(k, 0) - qc * dc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return quo


def lincomb(a, ca, b, cb):
    """ca*a + cb*b for integer scalars ca, cb."""
    out = {k: ca * c for k, c in a.items()} if ca != 1 else dict(a)
    get = out.get
    for k, c in b.items():
        v = get(k, 0) + cb * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def div_atom(a, direction, coeffs, shift):
    """Divide a by x^shift * Phi(x^direction), or return None.

    ``direction`` is an exponent triple whose first nonzero entry is
    positive; later entries may be negative.  ``coeffs`` is the monic
    univariate divisor Phi from degree 0 upward; ``shift`` is the exponent
    triple that clears negative exponents of the Laurent atom.
    """
    i0 = 0
    while direction[i0] == 0:
        i0 += 1
    lead_dir = direction[i0]
    step = direction[0] * (1 << 42) + direction[1] * (1 << SHIFT) + direction[2]
    deg = len(coeffs) - 1
    orbits = {}
    for k, c in a.items():
        e = (k >> 42, (k >> SHIFT) & FIELD, k & FIELD)
        j = e[i0] // lead_dir
        base = k - j * step
        orbit = orbits.get(base)
        if orbit is None:
            orbits[base] = [(j, c)]
        else:
            orbit.append((j, c))
    sq, st, sa = shift
    quo = {}
    for base, terms in orbits.items():
        jmin = min(j for j, _ in terms)
        jmax = max(j for j, _ in terms)
        n = jmax - jmin
        if n < deg:
            return None
        rem = [0] * (n + 1)
        for j, c in terms:
            rem[j - jmin] = c
        for i in range(n - deg, -1, -1):
            c = rem[i + deg]
            if c:
                for d in range(deg):
                    rem[i + d] -= c * coeffs[d]
        if any(rem[:deg]):
            return None
        for i in range(n - deg + 1):
            c = rem[i + deg]
            if c:
                k = base + (jmin + i) * step
                e = (k >> 42, (k >> SHIFT) & FIELD, k & FIELD)
                if e[0] < sq or e[1] < st or e[2] < sa:
                    return None
                quo[((e[0] - sq) << 42) | ((e[1] - st) << SHIFT) | (e[2] - sa)] = c
    return quo
