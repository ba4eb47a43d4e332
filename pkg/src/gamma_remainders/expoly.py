"""Exact exponential polynomials sum_k p_k(t) * exp(k*t) over the rationals.

Coefficient polynomials are tuples of Fractions (index = power of t), the
exponential degrees k are nonnegative integers.  The ring is closed under
+, -, *, integer powers and d/dt, which is all the absolute-monotonicity
machinery needs.  Floating-point only ever enters through ExpPoly.eval.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import factorial

import mpmath

from . import ratseries

Poly = tuple  # tuple of Fractions, highest index nonzero; () is the zero poly


class ExpPolyError(ValueError):
    pass


class ParseError(ExpPolyError):
    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(Fraction(c) for c in coeffs)


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                  for i in range(n)])


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _trim(out)


def poly_scale(a, c):
    c = Fraction(c)
    if c == 0:
        return ()
    return _trim([ai * c for ai in a])


def poly_diff(a):
    return _trim([i * a[i] for i in range(1, len(a))])


def poly_eval_exact(a, t):
    t = Fraction(t)
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * t + c
    return acc


class ExpPoly:
    """Immutable sum of terms p_k(t)*exp(k*t), stored as {k: poly}."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, p in terms.items():
                if k < 0 or int(k) != k:
                    raise ExpPolyError("exponential degree must be a nonnegative integer: %r" % (k,))
                p = _trim(p)
                if p:
                    clean[int(k)] = p
        self._terms = clean

    @property
    def terms(self):
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, ExpPoly) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(sorted(self._terms.items())))

    def __repr__(self):
        return "ExpPoly(%s)" % (render(self),)

    # ---- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for k, p in other._terms.items():
            out[k] = poly_add(out.get(k, ()), p)
        return ExpPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly({k: poly_scale(p, -1) for k, p in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for k1, p1 in self._terms.items():
            for k2, p2 in other._terms.items():
                k = k1 + k2
                out[k] = poly_add(out.get(k, ()), poly_mul(p1, p2))
        return ExpPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0 or int(e) != e:
            raise ExpPolyError("exponent must be a nonnegative integer: %r" % (e,))
        acc = ExpPoly({0: (Fraction(1),)})
        for _ in range(int(e)):
            acc = acc * self
        return acc

    def scale(self, c):
        return ExpPoly({k: poly_scale(p, c) for k, p in self._terms.items()})

    # ---- structure queries ----------------------------------------------

    def min_exp_degree(self):
        """Smallest k with a nonzero term; 0 for the zero ExpPoly."""
        return min(self._terms) if self._terms else 0

    def strip_exp(self, k):
        """Divide by exp(k*t); every term must have degree >= k."""
        if any(d < k for d in self._terms):
            raise ExpPolyError("exp(%d t) is not a common factor" % k)
        return ExpPoly({d - k: p for d, p in self._terms.items()})

    def content(self):
        """Positive rational c such that self/c has coprime integer coefficients."""
        coeffs = [c for p in self._terms.values() for c in p]
        if not coeffs:
            return Fraction(1)
        num = 0
        den = 1
        for c in coeffs:
            num = math.gcd(num, abs(c.numerator))
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def limit_at_zero(self):
        """Exact value at t = 0 (continuous extension)."""
        return sum((p[0] for p in self._terms.values() if p), Fraction(0))

    def all_coeffs_nonnegative(self):
        return all(c >= 0 for p in self._terms.values() for c in p)

    # ---- calculus --------------------------------------------------------

    def differentiate(self):
        """Exact derivative: d/dt[p*e^{kt}] = (p' + k p) e^{kt}."""
        out = {}
        for k, p in self._terms.items():
            out[k] = poly_add(poly_diff(p), poly_scale(p, k))
        return ExpPoly(out)

    def derivative_limit_at_zero(self, n):
        """Exact value of the n-th derivative at 0+, by n symbolic derivatives."""
        if n < 0:
            raise ExpPolyError("derivative order must be nonnegative")
        f = self
        for _ in range(n):
            f = f.differentiate()
        return f.limit_at_zero()

    def taylor_coeffs(self, n):
        """First n Maclaurin coefficients, via convolution with the exp(k*t) series.

        Independent of derivative_limit_at_zero: c_m = sum_k sum_j p_kj k^(m-j)/(m-j)!.
        """
        if n < 1:
            raise ExpPolyError("need at least one coefficient")
        out = [Fraction(0)] * n
        for k, p in self._terms.items():
            for j, c in enumerate(p):
                if not c:
                    continue
                for m in range(j, n):
                    out[m] += c * Fraction(k ** (m - j), factorial(m - j))
        return out

    def eval(self, t, exact=False):
        """Value at t.

        exact=True is only supported at t == 0 (elsewhere e^{kt} is
        transcendental) and returns a Fraction.  Otherwise evaluates with
        mpmath at the current working precision.
        """
        if exact:
            if Fraction(t) != 0:
                raise ExpPolyError("exact evaluation is only defined at t = 0")
            return self.limit_at_zero()
        t = mpmath.mpf(t) if not isinstance(t, mpmath.mpf) else t
        top = max(self._terms, default=0)
        if top and abs(t) * top > 5e8:
            raise OverflowError("exp(%d*t) at t=%s exceeds the working range" % (top, t))
        acc = mpmath.mpf(0)
        for k in sorted(self._terms):
            p = self._terms[k]
            pv = mpmath.mpf(0)
            for c in reversed(p):
                pv = pv * t + mpmath.mpf(c.numerator) / c.denominator
            acc += pv * mpmath.exp(k * t)
        return acc


def _coerce(x):
    if isinstance(x, ExpPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return ExpPoly({0: (Fraction(x),)})
    raise TypeError("cannot coerce %r to ExpPoly" % (x,))


ZERO = ExpPoly()
ONE = ExpPoly({0: (Fraction(1),)})
T = ExpPoly({0: (Fraction(0), Fraction(1))})


# ---- parsing -------------------------------------------------------------
#
# Grammar (see docs/expoly_grammar.md):
#   expr    = [ sign ] term { sign term }
#   term    = factor { ["*"] factor }          (juxtaposition multiplies)
#   factor  = atom [ "^" exponent ]
#   atom    = RATIONAL | "t" | "(" expr ")" | "E" "^" eatom | "exp" "(" expr ")"
#   eatom   = "(" expr ")" | "t" | RATIONAL    (must reduce to k*t, integer k >= 0)
#   exponent= RATIONAL                         (nonnegative integer)

_TOKEN_CHARS = set("+-*^()")


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _TOKEN_CHARS:
            tokens.append((ch, ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            if j < n and text[j] == "/":
                k = j + 1
                m = k
                while m < n and text[m].isdigit():
                    m += 1
                if m == k:
                    raise ParseError("expected denominator after '/'", j)
                den = int(text[k:m])
                if den == 0:
                    raise ParseError("zero denominator", k)
                tokens.append(("num", Fraction(num, den), i))
                i = m
            else:
                tokens.append(("num", Fraction(num), i))
                i = j
        elif ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            word = text[i:j]
            if word not in ("t", "E", "e", "exp"):
                raise ParseError("unknown symbol %r" % word, i)
            tokens.append((word, word, i))
            i = j
        else:
            raise ParseError("unexpected character %r" % ch, i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %r, found %r" % (kind, tok[0]), tok[2])
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("trailing input", tok[2])
        return value

    def expr(self):
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        value = self.term().scale(sign)
        while self.peek()[0] in ("+", "-"):
            sign = 1
            while self.peek()[0] in ("+", "-"):
                if self.take()[0] == "-":
                    sign = -sign
            value = value + self.term().scale(sign)
        return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "*":
                self.take()
                value = value * self.factor()
            elif tok[0] in ("num", "t", "(", "E", "e", "exp"):
                value = value * self.factor()
            else:
                return value

    def factor(self):
        tok = self.peek()
        if tok[0] in ("E", "e"):
            return self.exp_atom()
        value = self.atom()
        if self.peek()[0] == "^":
            caret = self.take()
            etok = self.take()
            if etok[0] != "num" or etok[1].denominator != 1 or etok[1] < 0:
                raise ParseError("polynomial exponent must be a nonnegative integer", caret[2])
            value = value ** int(etok[1])
        return value

    def atom(self):
        tok = self.take()
        if tok[0] == "num":
            return ExpPoly({0: (tok[1],)})
        if tok[0] == "t":
            return T
        if tok[0] == "(":
            value = self.expr()
            self.take(")")
            return value
        if tok[0] == "exp":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return self._exp_of(inner, tok[2])
        raise ParseError("unexpected token %r" % (tok[0],), tok[2])

    def exp_atom(self):
        base = self.take()  # E or e
        self.take("^")
        tok = self.peek()
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
        elif tok[0] == "t":
            self.take()
            inner = T
        else:
            raise ParseError("expected exponent of the form k*t after %s^" % base[1], tok[2])
        return self._exp_of(inner, base[2])

    @staticmethod
    def _exp_of(inner, pos):
        terms = inner.terms
        if not terms:
            return ONE  # exp(0)
        if set(terms) != {0}:
            raise ParseError("exponent of E must be linear in t", pos)
        p = terms[0]
        if len(p) != 2 or p[0] != 0:
            raise ParseError("exponent of E must be k*t with constant term 0", pos)
        k = p[1]
        if k.denominator != 1 or k < 0:
            raise ParseError("exponential degree must be a nonnegative integer, got %s" % k, pos)
        return ExpPoly({int(k): (Fraction(1),)})


def parse_expoly(text):
    """Parse an exponential polynomial from text; exact, no rounding."""
    return _Parser(text).parse()


def _render_poly(p):
    parts = []
    for j in range(len(p) - 1, -1, -1):
        c = p[j]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if j == 0:
            body = str(c)
        else:
            tpow = "t" if j == 1 else "t^%d" % j
            body = tpow if c == 1 else "%s*%s" % (c, tpow)
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += " %s %s" % (sign, body)
    return out


def render(f):
    """Canonical text form; parse_expoly(render(f)) == f."""
    if not f:
        return "0"
    chunks = []
    for k in sorted(f.terms, reverse=True):
        p = f.terms[k]
        body = "(%s)" % _render_poly(p)
        if k == 0:
            chunks.append(body)
        else:
            chunks.append("%s*E^(%d*t)" % (body, k))
    return " + ".join(chunks)
