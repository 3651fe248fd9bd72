"""Exact rational-function arithmetic in the variable s = q^(1/2).

A QScalar is a reduced fraction of integer Laurent polynomials in s.
The numerator carries an integer exponent offset; the denominator is an
ordinary polynomial with nonzero constant term whose lowest coefficient
is positive.  Two QScalars are equal iff their canonical components match.

FramedScalar extends the field by Laurent monomials in the three framing
variables a_1, a_2, a_3.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient tuples, low degree first)


def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    if len(a) == 1:
        c = a[0]
        return tuple(c * x for x in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * x for x in a)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _content(a):
    g = 0
    for x in a:
        g = _igcd(g, x)
        if g == 1:
            return 1
    return g


def _primitive(a):
    g = _content(a)
    if g <= 1:
        return a
    return tuple(x // g for x in a)


def _pdiv_exact(a, b):
    """Exact polynomial division a / b; raises if the division is inexact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    rem = [Fraction(x) for x in a]
    db = len(b) - 1
    lead = Fraction(b[-1])
    quo = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i] / lead
        quo[i - db] = c
        if c:
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    out = []
    for c in quo:
        if c.denominator != 1:
            raise ArithmeticError("inexact polynomial division")
        out.append(int(c))
    return _trim(out)


def _pgcd(a, b):
    """Primitive gcd of integer polynomials (positive leading coefficient)."""
    a = _primitive(_trim(a))
    b = _primitive(_trim(b))
    if not a:
        g = b
    elif not b:
        g = a
    else:
        while b:
            if len(a) < len(b):
                a, b = b, a
            # pseudo-remainder of a by b
            d = len(a) - len(b)
            lead = b[-1]
            r = [x * (lead ** (d + 1)) for x in a]
            for i in range(len(r) - 1, len(b) - 2, -1):
                c, m = divmod(r[i], lead)
                # r is divisible by lead at each step by construction
                assert m == 0
                if c:
                    for j in range(len(b)):
                        r[i - len(b) + 1 + j] -= c * b[j]
                r[i] = 0
            a, b = b, _primitive(_trim(r))
        g = a
    if g and g[-1] < 0:
        g = _pneg(g)
    return g


def _peval(a, s0):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * s0 + c
    return acc


# ---------------------------------------------------------------------------


class QScalar:
    """Canonical rational function in s = q^(1/2) over the integers."""

    __slots__ = ("num", "off", "den", "_hash")

    def __init__(self, num, off, den, _canonical=False):
        if _canonical:
            self.num = num
            self.off = off
            self.den = den
            self._hash = None
            return
        c = canonicalize(num, den, off)
        self.num = c.num
        self.off = c.off
        self.den = c.den
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_int(n):
        return QScalar((n,) if n else (), 0, (1,), _canonical=True)

    @staticmethod
    def from_fraction(f):
        f = Fraction(f)
        return QScalar(
            (f.numerator,) if f.numerator else (), 0, (f.denominator,),
            _canonical=True)

    @staticmethod
    def s_power(n):
        """s^n as a QScalar."""
        return QScalar((1,), n, (1,), _canonical=True)

    @staticmethod
    def q_power(n):
        """q^n = s^(2n); n may be a half-integer times 2 via s_power."""
        return QScalar((1,), 2 * n, (1,), _canonical=True)

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == (1,) and self.off == 0 and self.den == (1,)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            off = min(self.off, other.off)
            a = _shift(self.num, self.off - off)
            b = _shift(other.num, other.off - off)
            return canonicalize(_padd(a, b), self.den, off)
        num = _padd(
            _shift(_pmul(self.num, other.den), self.off - min(self.off, other.off)),
            _shift(_pmul(other.num, self.den), other.off - min(self.off, other.off)))
        return canonicalize(num, _pmul(self.den, other.den),
                            min(self.off, other.off))

    def __neg__(self):
        return QScalar(_pneg(self.num), self.off, self.den, _canonical=True)

    def __sub__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        # cross-reduce so the product is reduced without a big gcd
        g1 = _pgcd(self.num, other.den)
        g2 = _pgcd(other.num, self.den)
        n1 = self.num if g1 == (1,) else _pdiv_exact(self.num, g1)
        d2 = other.den if g1 == (1,) else _pdiv_exact(other.den, g1)
        n2 = other.num if g2 == (1,) else _pdiv_exact(other.num, g2)
        d1 = self.den if g2 == (1,) else _pdiv_exact(self.den, g2)
        return canonicalize(_pmul(n1, n2), _pmul(d1, d2),
                            self.off + other.off)

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("division by the zero scalar")
        return canonicalize(self.den, self.num, -self.off)

    def __truediv__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QScalar):
            return NotImplemented
        return (self.num == other.num and self.off == other.off
                and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.off, self.den))
        return self._hash

    def __repr__(self):
        return "QScalar(%s)" % self.text()

    def text(self):
        """Normalized P(s)/Q(s) display string."""
        def poly(c, off=0):
            if not c:
                return "0"
            parts = []
            for i, x in enumerate(c):
                if not x:
                    continue
                e = i + off
                if e == 0:
                    parts.append(str(x))
                else:
                    mon = "s" if e == 1 else "s^%d" % e
                    if x == 1:
                        parts.append(mon)
                    elif x == -1:
                        parts.append("-" + mon)
                    else:
                        parts.append("%d*%s" % (x, mon))
            return " + ".join(parts).replace("+ -", "- ")
        if self.den == (1,):
            return poly(self.num, self.off)
        return "(%s)/(%s)" % (poly(self.num, self.off), poly(self.den))

    # -- operations of the module ---------------------------------------------

    def substitute_q_inverse(self):
        """Replace s by 1/s and re-canonicalize; an involution."""
        n = len(self.num)
        d = len(self.den)
        num = tuple(reversed(self.num))
        den = tuple(reversed(self.den))
        # x(1/s) = s^{-(off + n - 1)} rev(num) / (s^{-(d-1)} rev(den))
        return canonicalize(num, den, -(self.off + n - 1) + (d - 1))

    def evaluate(self, s0):
        """Evaluate at an exact rational point s0; used as a test oracle."""
        s0 = Fraction(s0)
        den = _peval(self.den, s0)
        if den == 0:
            raise ZeroDivisionError("pole at s0")
        if s0 == 0 and self.off < 0:
            raise ZeroDivisionError("pole at s0")
        return _peval(self.num, s0) * s0 ** self.off / den

    # -- serialization ---------------------------------------------------------

    def to_json(self):
        def enc(c):
            return [x if abs(x) < 2 ** 53 else str(x) for x in c]
        return {"offset": self.off, "num": enc(self.num), "den": enc(self.den)}

    @staticmethod
    def from_json(obj):
        def dec(cs):
            return tuple(int(x) for x in cs)
        return canonicalize(dec(obj["num"]), dec(obj["den"]), obj["offset"])


def _shift(c, k):
    """Multiply coefficient tuple by s^k (k >= 0)."""
    if k == 0 or not c:
        return c
    return (0,) * k + tuple(c)


def canonicalize(num, den, num_offset=0, den_offset=0):
    """Unique canonical representative of (num * s^num_offset) / (den * s^den_offset)."""
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return QScalar((), 0, (1,), _canonical=True)
    off = num_offset - den_offset
    # strip powers of s from both ends into the offset
    k = 0
    while num[k] == 0:
        k += 1
    if k:
        num = num[k:]
        off += k
    k = 0
    while den[k] == 0:
        k += 1
    if k:
        den = den[k:]
        off -= k
    g = _pgcd(num, den)
    if g != (1,):
        num = _pdiv_exact(num, g)
        den = _pdiv_exact(den, g)
    cn, cd = _content(num), _content(den)
    c = _igcd(cn, cd)
    if c > 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    if den[0] < 0:
        num = _pneg(num)
        den = _pneg(den)
    return QScalar(num, off, den, _canonical=True)


ZERO = QScalar.from_int(0)
ONE = QScalar.from_int(1)
S = QScalar.s_power(1)
Q = QScalar.s_power(2)
# z = q^{1/2} - q^{-1/2} = s - 1/s
Z_VAR = QScalar((-1, 0, 1), -1, (1,), _canonical=True)


def q_half_power(k):
    """q^(k/2) = s^k for integer k."""
    return QScalar.s_power(k)


# ---------------------------------------------------------------------------


class FramedScalar:
    """Finite QScalar-linear combination of monomials a1^e1 a2^e2 a3^e3."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, v in terms.items():
                if not v.is_zero():
                    t[k] = v
        self.terms = t

    @staticmethod
    def from_qscalar(x, exps=(0, 0, 0)):
        if x.is_zero():
            return FramedScalar()
        f = FramedScalar()
        f.terms[tuple(exps)] = x
        return f

    @staticmethod
    def a_power(k, e=1):
        """The monomial a_k^e, components numbered 1..3."""
        exps = [0, 0, 0]
        exps[k - 1] = e
        return FramedScalar.from_qscalar(ONE, tuple(exps))

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        t = dict(self.terms)
        for k, v in other.terms.items():
            w = t.get(k)
            if w is None:
                t[k] = v
            else:
                w = w + v
                if w.is_zero():
                    del t[k]
                else:
                    t[k] = w
        f = FramedScalar()
        f.terms = t
        return f

    def __neg__(self):
        f = FramedScalar()
        f.terms = {k: -v for k, v in self.terms.items()}
        return f

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QScalar):
            if other.is_zero():
                return FramedScalar()
            f = FramedScalar()
            f.terms = {k: v * other for k, v in self.terms.items()}
            return f
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])
                v = v1 * v2
                w = out.get(k)
                if w is None:
                    out[k] = v
                else:
                    w = w + v
                    if w.is_zero():
                        del out[k]
                    else:
                        out[k] = w
        f = FramedScalar()
        f.terms = {k: v for k, v in out.items() if not v.is_zero()}
        return f

    def __eq__(self, other):
        if not isinstance(other, FramedScalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def split_by_degree(self, axis):
        """Group terms by the exponent of a_{axis} (axis in 1..3)."""
        out = {}
        i = axis - 1
        for k, v in self.terms.items():
            d = k[i]
            rest = list(k)
            rest[i] = 0
            f = out.setdefault(d, FramedScalar())
            f.terms[tuple(rest)] = f.terms.get(tuple(rest), ZERO) + v
        for f in out.values():
            f.terms = {k: v for k, v in f.terms.items() if not v.is_zero()}
        return {d: f for d, f in out.items() if not f.is_zero()}

    def as_qscalar(self):
        """The a-free value; raises if any framing variable is present."""
        if not self.terms:
            return ZERO
        if list(self.terms) != [(0, 0, 0)]:
            raise ValueError("framed scalar is not a-free")
        return self.terms[(0, 0, 0)]

    def __repr__(self):
        if not self.terms:
            return "FramedScalar(0)"
        parts = []
        for k in sorted(self.terms):
            mon = "*".join("a%d^%d" % (i + 1, e)
                           for i, e in enumerate(k) if e)
            v = self.terms[k].text()
            parts.append("(%s)%s" % (v, "*" + mon if mon else ""))
        return "FramedScalar(%s)" % " + ".join(parts)


F_ZERO = FramedScalar()
F_ONE = FramedScalar.from_qscalar(ONE)
