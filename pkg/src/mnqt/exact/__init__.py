"""Exact arithmetic in Q(q, t, a)."""
from ._backend import BACKEND
from .parse import ParseError, parse
from .poly import MPoly, ExponentOverflow
from .qseries import (derivative_at_a1, exact_divide_a_minus_1, q_binomial,
                      q_shifted_factorial)
from .ratfunc import ONE, ZERO, RatFunc, rprod, rsum

q = RatFunc.var("q")
t = RatFunc.var("t")
a = RatFunc.var("a")


def normalize(num, den):
    """Canonical RatFunc for num/den (MPoly, raw dict, or RatFunc inputs)."""
    if isinstance(num, RatFunc) or isinstance(den, RatFunc):
        return RatFunc(num) / RatFunc(den)
    return RatFunc.normalize(num, den)


__all__ = ["BACKEND", "MPoly", "RatFunc", "ZERO", "ONE", "q", "t", "a",
           "normalize", "parse", "ParseError", "rsum", "rprod",
           "q_shifted_factorial", "q_binomial", "exact_divide_a_minus_1",
           "derivative_at_a1", "ExponentOverflow"]
