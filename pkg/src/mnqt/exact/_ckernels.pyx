# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse polynomial kernels; same contract as ``_pykernels``."""
from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t, uint64_t

from ._pykernels import ExponentOverflow, degrees, divexact as _py_divexact

BACKEND = "cython"

cdef enum:
    SHIFT = 21
    FIELD = (1 << 21) - 1
    LIMIT = 1 << 20
    # dense accumulation is used while the exponent box stays below this size
    DENSE_MAX = 1 << 22
    SMALL = 2147483647


cdef inline void _unpack(int64_t k, int64_t* e):
    e[0] = k >> 42
    e[1] = (k >> SHIFT) & FIELD
    e[2] = k & FIELD


def mul(dict a, dict b):
    """Product of two sparse polynomials."""
    if not a or not b:
        return {}
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, n_out
    cdef int64_t ha[3]
    cdef int64_t hb[3]
    cdef int64_t e[3]
    cdef int64_t k
    cdef object ka, kb, ca, cb
    ha[0] = ha[1] = ha[2] = 0
    hb[0] = hb[1] = hb[2] = 0
    cdef bint small = True
    cdef object maxa = 0, maxb = 0
    for ka, ca in a.items():
        _unpack(ka, e)
        for j in range(3):
            if e[j] > ha[j]:
                ha[j] = e[j]
        if ca > SMALL or ca < -SMALL:
            small = False
        elif abs(ca) > maxa:
            maxa = abs(ca)
    for kb, cb in b.items():
        _unpack(kb, e)
        for j in range(3):
            if e[j] > hb[j]:
                hb[j] = e[j]
        if cb > SMALL or cb < -SMALL:
            small = False
        elif abs(cb) > maxb:
            maxb = abs(cb)
    if ha[0] + hb[0] >= LIMIT or ha[1] + hb[1] >= LIMIT or ha[2] + hb[2] >= LIMIT:
        raise ExponentOverflow("exponent exceeds 2^20")
    if small and maxa * maxb * min(na, nb) >= (1 << 62):
        small = False
    cdef int64_t dq = ha[0] + hb[0] + 1, dt = ha[1] + hb[1] + 1, da = ha[2] + hb[2] + 1
    cdef int64_t vol = dq * dt * da
    if vol > DENSE_MAX:
        return _mul_sparse(a, b)
    cdef int64_t st = da, sq = dt * da
    cdef int64_t* ia = <int64_t*>malloc(na * sizeof(int64_t))
    cdef int64_t* ib = <int64_t*>malloc(nb * sizeof(int64_t))
    cdef int64_t* xa = NULL
    cdef int64_t* xb = NULL
    cdef int64_t* acc = NULL
    cdef unsigned char* seen = NULL
    cdef int64_t* touched = NULL
    cdef Py_ssize_t n_touched = 0
    cdef int64_t idx, v
    cdef list la, lb
    out = {}
    try:
        la = list(a.items())
        lb = list(b.items())
        for i in range(na):
            _unpack(la[i][0], e)
            ia[i] = e[0] * sq + e[1] * st + e[2]
        for i in range(nb):
            _unpack(lb[i][0], e)
            ib[i] = e[0] * sq + e[1] * st + e[2]
        if small:
            xa = <int64_t*>malloc(na * sizeof(int64_t))
            xb = <int64_t*>malloc(nb * sizeof(int64_t))
            acc = <int64_t*>calloc(vol, sizeof(int64_t))
            seen = <unsigned char*>calloc(vol, 1)
            touched = <int64_t*>malloc(min(vol, <int64_t>na * nb) * sizeof(int64_t))
            if xa == NULL or xb == NULL or acc == NULL or seen == NULL or touched == NULL:
                raise MemoryError()
            for i in range(na):
                xa[i] = la[i][1]
            for i in range(nb):
                xb[i] = lb[i][1]
            for i in range(na):
                for j in range(nb):
                    idx = ia[i] + ib[j]
                    acc[idx] += xa[i] * xb[j]
                    if not seen[idx]:
                        seen[idx] = 1
                        touched[n_touched] = idx
                        n_touched += 1
            for i in range(n_touched):
                idx = touched[i]
                v = acc[idx]
                if v:
                    e[0] = idx // sq
                    e[1] = (idx // st) % dt
                    e[2] = idx % st
                    k = (e[0] << 42) | (e[1] << SHIFT) | e[2]
                    out[k] = v
        else:
            slots = {}
            for i in range(na):
                ca = la[i][1]
                for j in range(nb):
                    idx = ia[i] + ib[j]
                    cur = slots.get(idx)
                    if cur is None:
                        slots[idx] = ca * lb[j][1]
                    else:
                        slots[idx] = cur + ca * lb[j][1]
            for idx, v_obj in slots.items():
                if v_obj:
                    e[0] = idx // sq
                    e[1] = (idx // st) % dt
                    e[2] = idx % st
                    k = (e[0] << 42) | (e[1] << SHIFT) | e[2]
                    out[k] = v_obj
    finally:
        free(ia)
        free(ib)
        free(xa)
        free(xb)
        free(acc)
        free(seen)
        free(touched)
    return out


def _mul_sparse(dict a, dict b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            out[k] = out.get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def lincomb(dict a, ca, dict b, cb):
    """ca*a + cb*b for integer scalars ca, cb."""
    cdef dict out
    if ca == 1:
        out = dict(a)
    else:
        out = {k: ca * c for k, c in a.items()}
    for k, c in b.items():
        v = out.get(k, 0) + cb * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def divexact(dict a, dict b):
    return _py_divexact(a, b)


def div_atom(dict a, direction, coeffs, shift):
    """Divide a by x^shift * Phi(x^direction), or return None."""
    cdef int i0 = 0
    while direction[i0] == 0:
        i0 += 1
    cdef int64_t lead_dir = direction[i0]
    cdef int64_t v0 = direction[0], v1 = direction[1], v2 = direction[2]
    cdef int deg = len(coeffs) - 1
    cdef int64_t e[3]
    cdef int64_t j, base_q, base_t, base_a
    cdef int64_t sq = shift[0], st = shift[1], sa = shift[2]
    cdef Py_ssize_t n, i, d
    cdef list terms, rem
    cdef dict orbits = {}
    for k, c in a.items():
        _unpack(k, e)
        j = e[i0] // lead_dir
        base = (e[0] - j * v0, e[1] - j * v1, e[2] - j * v2)
        terms = orbits.get(base)
        if terms is None:
            orbits[base] = [(j, c)]
        else:
            terms.append((j, c))
    cdef list cf = list(coeffs)
    cdef dict quo = {}
    cdef int64_t jmin, jmax, jj
    cdef int64_t eq, et, ea
    for base, terms in orbits.items():
        jmin = jmax = terms[0][0]
        for item in terms:
            jj = item[0]
            if jj < jmin:
                jmin = jj
            if jj > jmax:
                jmax = jj
        n = jmax - jmin
        if n < deg:
            return None
        rem = [0] * (n + 1)
        for item in terms:
            rem[item[0] - jmin] = item[1]
        for i in range(n - deg, -1, -1):
            c = rem[i + deg]
            if c:
                for d in range(deg):
                    if cf[d]:
                        rem[i + d] = rem[i + d] - c * cf[d]
        for i in range(deg):
            if rem[i]:
                return None
        base_q, base_t, base_a = base
        for i in range(n - deg + 1):
            c = rem[i + deg]
            if c:
                jj = jmin + i
                eq = base_q + jj * v0 - sq
                et = base_t + jj * v1 - st
                ea = base_a + jj * v2 - sa
                if eq < 0 or et < 0 or ea < 0:
                    return None
                quo[(eq << 42) | (et << SHIFT) | ea] = c
    return quo
