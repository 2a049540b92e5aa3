"""q-series primitives and operations on polynomials in the auxiliary a."""
from .poly import derivative, specialize_int
from .ratfunc import ONE, ZERO, RatFunc


def q_shifted_factorial(x, k, base=None):
    """(x; q)_k = prod_{j<k} (1 - x q^j).  ``base`` replaces q when given."""
    if k < 0:
        raise ValueError("negative length %d" % k)
    x = RatFunc(x) if not isinstance(x, RatFunc) else x
    base = RatFunc.var("q") if base is None else base
    out = ONE
    step = ONE
    for _ in range(k):
        out = out * (ONE - x * step)
        step = step * base
    return out


def q_binomial(a, b, base=None):
    """Gaussian binomial (q^{a-b+1}; q)_b / (q; q)_b."""
    if b < 0 or (a >= 0 and b > a):
        return ZERO
    q = RatFunc.var("q") if base is None else base
    return q_shifted_factorial(q ** (a - b + 1), b, q) / q_shifted_factorial(q, b, q)


def _check_polynomial_in_a(p):
    n, d = p._expanded()
    if "a" in RatFunc.from_poly(d).variables():
        raise ValueError("denominator depends on a: %s" % p)
    return n, d


def exact_divide_a_minus_1(p):
    """p / (a - 1) for p vanishing at a = 1; raises ValueError otherwise."""
    if p.is_zero():
        return ZERO
    n, _ = _check_polynomial_in_a(p)
    if specialize_int(n, "a", 1):
        raise ValueError("not divisible")
    return p / (RatFunc.var("a") - 1)


def derivative_at_a1(p):
    """d/da of p, evaluated at a = 1."""
    if p.is_zero():
        return ZERO
    n, d = _check_polynomial_in_a(p)
    dn = specialize_int(derivative(n, "a"), "a", 1)
    if not dn:
        return ZERO
    return RatFunc.normalize(dn, d)
