"""Recursive-descent parser for rational expressions in q, t, a."""
import re

_TOKEN = re.compile(r"\s*(?:(\d+)|([qta])|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    pass


def _tokens(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character %r at %d in %r" % (text[pos], pos, text))
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("var", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    out.append(("end", None))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok != ("op", op):
            raise ParseError("expected %r in %r" % (op, self.text))

    def expr(self):
        from .ratfunc import rsum
        terms = [self.term()]
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = self.take()[1]
            t = self.term()
            terms.append(-t if sign == "-" else t)
        return rsum(terms)

    def term(self):
        val = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            kind, val = self.take()
            if kind != "num":
                raise ParseError("integer exponent expected in %r" % self.text)
            return base ** (-val if neg else val)
        return base

    def atom(self):
        from .ratfunc import RatFunc
        kind, val = self.take()
        if kind == "num":
            return RatFunc.const(val)
        if kind == "var":
            return RatFunc.var(val)
        if (kind, val) == ("op", "("):
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError("unexpected token %r in %r" % (val, self.text))


def parse(text):
    """Parse a string such as ``(1 - q*t^2)/(1 - t)`` into a RatFunc."""
    p = _Parser(text)
    val = p.expr()
    if p.peek()[0] != "end":
        raise ParseError("trailing input in %r" % text)
    return val
