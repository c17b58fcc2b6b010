"""Exact arithmetic in K_d = Frac(k[x^(Q^d)]) with its Hahn valuation.

A generalized polynomial is a dict ``{exponent tuple: nonzero scalar}``.  A
:class:`ValElt` is a fraction ``num/den`` of two such polynomials.  The
denominator is always normalized to have lowest term exactly ``1*x^0``; that
makes ``val`` and ``sign`` read off the numerator directly and makes the
residue maps a plain filter on exponent prefixes.  Numerator and denominator
are not guaranteed coprime (the group ring has no useful gcd once exponent
denominators may be refined), so equality is decided by cross-multiplication
and the hash uses only representation-independent data.
"""
from __future__ import annotations

import operator
import random
import re
from fractions import Fraction
from functools import total_ordering

from gmpy2 import mpq

from .scalars import (
    RATIONALS,
    RatFunc,
    exponent,
    format_scalar,
    gen,
    scalar_sign,
    sdiv,
)

_add = operator.add


@total_ordering
class _Infinity:
    """Value of zero; larger than every group element."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("inf")

    def __repr__(self):
        return "inf"


INFINITY = _Infinity()


# ------------------------------------------------------- polynomial helpers

def _p_add(p: dict, q: dict, sign: int = 1) -> dict:
    out = dict(p)
    for e, c in q.items():
        if sign < 0:
            c = -c
        old = out.get(e)
        if old is None:
            out[e] = c
        else:
            s = old + c
            if s == 0:
                del out[e]
            else:
                out[e] = s
    return out


def _p_mul(p: dict, q: dict) -> dict:
    if len(q) == 1 and len(p) > 1:
        p, q = q, p
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(map(_add, e1, e2))
            old = out.get(e)
            out[e] = c1 * c2 if old is None else old + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def _p_shift_scale(p: dict, shift: tuple, scale) -> dict:
    """Return ``p * scale * x^shift``."""
    if any(shift):
        return {tuple(map(_add, e, shift)): c * scale for e, c in p.items()}
    return {e: c * scale for e, c in p.items()}


def _p_divexact(p: dict, q: dict, budget: int):
    """Quotient ``p/q`` if it is a generalized polynomial, else ``None``.

    Long division from the lowest term.  An exact quotient has all its
    exponents between ``min p - min q`` and ``max p - max q``; crossing the
    upper bound proves inexactness.  ``budget`` caps the number of steps,
    so a ``None`` may also mean "gave up".
    """
    lq = min(q)
    cq = q[lq]
    upper = tuple(map(operator.sub, max(p), max(q)))
    r = dict(p)
    quot = {}
    for _ in range(budget):
        if not r:
            return quot
        e = min(r)
        qe = tuple(map(operator.sub, e, lq))
        if qe > upper:
            return None
        c = sdiv(r[e], cq)
        quot[qe] = c
        r = _p_add(r, _p_shift_scale(q, qe, c), -1)
    return quot if not r else None


_ONE_CACHE: dict = {}


def _one_poly(d: int) -> dict:
    p = _ONE_CACHE.get(d)
    if p is None:
        p = _ONE_CACHE[d] = {(0,) * d: 1}
    return p


_REDUCE_MAX = 4


def _reduce_budget(p: dict, q: dict) -> int:
    return 4 + len(p) + 2 * len(q)


# ---------------------------------------------------------------- ValElt

class ValElt:
    """An element of K_d, stored as ``num/den``.

    Instances are immutable; build them with :meth:`make`, the classmethod
    constructors, or arithmetic.
    """

    __slots__ = ("num", "den", "dim")

    def __init__(self, num: dict, den: dict, dim: int):
        self.num = num
        self.den = den
        self.dim = dim

    # -- construction
    @classmethod
    def make(cls, num: dict, den: dict, dim: int, reduce: bool = True) -> "ValElt":
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return cls({}, _one_poly(dim), dim)
        lo = min(den)
        lc = den[lo]
        if any(lo) or lc != 1:
            shift = tuple(-x for x in lo)
            inv = sdiv(1, lc)
            num = _p_shift_scale(num, shift, inv)
            den = _p_shift_scale(den, shift, inv)
        if reduce and len(den) > 1 and len(num) <= _REDUCE_MAX and len(den) <= _REDUCE_MAX:
            q = _p_divexact(num, den, _reduce_budget(num, den))
            if q is not None:
                return cls(q, _one_poly(dim), dim)
            if len(num) > 1:
                q = _p_divexact(den, num, _reduce_budget(den, num))
                if q is not None:
                    return cls.make(_one_poly(dim), q, dim)
        return cls(num, den, dim)

    @classmethod
    def zero(cls, d: int) -> "ValElt":
        return cls({}, _one_poly(d), d)

    @classmethod
    def one(cls, d: int) -> "ValElt":
        return cls(_one_poly(d), _one_poly(d), d)

    @classmethod
    def constant(cls, c, d: int) -> "ValElt":
        if c == 0:
            return cls.zero(d)
        return cls({(0,) * d: c}, _one_poly(d), d)

    @classmethod
    def monomial(cls, exp, c=1) -> "ValElt":
        exp = tuple(exponent(x) for x in exp)
        d = len(exp)
        if c == 0:
            return cls.zero(d)
        return cls({exp: c}, _one_poly(d), d)

    @classmethod
    def from_terms(cls, terms: dict, d: int) -> "ValElt":
        num = {tuple(exponent(x) for x in e): c for e, c in terms.items() if c != 0}
        for e in num:
            if len(e) != d:
                raise ValueError(f"exponent {e} does not have dimension {d}")
        return cls.make(num, _one_poly(d), d)

    # -- arithmetic
    def _coerce(self, other) -> "ValElt":
        if isinstance(other, ValElt):
            if other.dim != self.dim:
                raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
            return other
        if isinstance(other, RATIONALS + (RatFunc,)):
            return ValElt.constant(other, self.dim)
        raise TypeError(f"cannot combine ValElt with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return ValElt.make(_p_add(self.num, other.num), self.den, self.dim)
        num = _p_add(_p_mul(self.num, other.den), _p_mul(other.num, self.den))
        return ValElt.make(num, _p_mul(self.den, other.den), self.dim)

    __radd__ = __add__

    def __neg__(self):
        return ValElt({e: -c for e, c in self.num.items()}, self.den, self.dim)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.num or not other.num:
            return ValElt.zero(self.dim)
        return ValElt.make(_p_mul(self.num, other.num), _p_mul(self.den, other.den), self.dim)

    __rmul__ = __mul__

    def inverse(self) -> "ValElt":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in K_d")
        return ValElt.make(self.den, self.num, self.dim)

    def __truediv__(self, other):
        other = self._coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by zero in K_d")
        return ValElt.make(_p_mul(self.num, other.den), _p_mul(self.den, other.num), self.dim)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ValElt.one(self.dim)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, RATIONALS + (RatFunc,)):
            other = ValElt.constant(other, self.dim)
        if not isinstance(other, ValElt):
            return NotImplemented
        if other.dim != self.dim:
            return False
        if self.den == other.den:
            return self.num == other.num
        return _p_mul(self.num, other.den) == _p_mul(other.num, self.den)

    def __hash__(self):
        if not self.num:
            return hash((self.dim, None))
        lo = min(self.num)
        return hash((self.dim, lo, self.num[lo]))

    def is_zero(self) -> bool:
        return not self.num

    # -- valuation and order
    def val(self):
        """Hahn valuation: lex-minimal exponent, or INFINITY for zero."""
        if not self.num:
            return INFINITY
        return min(self.num)

    def val_prefix(self, e: int):
        v = self.val()
        return v if v is INFINITY else v[:e]

    def leading_coefficient(self):
        return self.num[min(self.num)] if self.num else 0

    def sign(self) -> int:
        if not self.num:
            return 0
        return scalar_sign(self.num[min(self.num)])

    def __lt__(self, other):
        return (self._coerce(other) - self).sign() > 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def in_ring(self) -> bool:
        """Membership in the valuation ring V_d."""
        return not self.num or min(self.num) >= (0,) * self.dim

    def is_unit(self) -> bool:
        """Unit of V_d, i.e. value exactly 0."""
        return bool(self.num) and not any(min(self.num))

    def in_prime(self, e: int) -> bool:
        """Membership in the prime p_e = {first e value coordinates > 0}."""
        if not self.num:
            return True
        return min(self.num)[:e] > (0,) * e

    # -- residues and sections
    def residue(self, e: int) -> "ValElt":
        """Image in V_d / p_e, identified with V_(d-e) by dropping e coordinates."""
        d = self.dim
        if not 0 <= e <= d:
            raise ValueError(f"residue depth {e} out of range for dimension {d}")
        if e == 0:
            return self
        if not self.num:
            return ValElt.zero(d - e)
        pre = min(self.num)[:e]
        z = (0,) * e
        if pre < z:
            raise ValueError("element lies outside the local ring of p_%d" % e)
        if pre > z:
            return ValElt.zero(d - e)
        num = {x[e:]: c for x, c in self.num.items() if x[:e] == z}
        den = {x[e:]: c for x, c in self.den.items() if x[:e] == z}
        return ValElt.make(num, den, d - e, reduce=False)

    def section(self, e: int) -> "ValElt":
        """Canonical lift to K_(d+e): prepend e zero coordinates to every exponent."""
        if e == 0:
            return self
        z = (0,) * e
        num = {z + x: c for x, c in self.num.items()}
        den = {z + x: c for x, c in self.den.items()}
        return ValElt(num, den, self.dim + e)

    def pad_trailing(self, e: int) -> "ValElt":
        """Embed Q^d as the leading coordinates of Q^(d+e)."""
        if e == 0:
            return self
        z = (0,) * e
        num = {x + z: c for x, c in self.num.items()}
        den = {x + z: c for x, c in self.den.items()}
        return ValElt(num, den, self.dim + e)

    def to_scalar(self):
        """The scalar represented by a dimension-0 element."""
        if self.dim != 0:
            raise ValueError("only dimension-0 elements are scalars")
        if not self.num:
            return 0
        return sdiv(self.num[()], self.den[()])

    def map_coefficients(self, f) -> "ValElt":
        num = {e: f(c) for e, c in self.num.items()}
        den = {e: f(c) for e, c in self.den.items()}
        return ValElt.make({e: c for e, c in num.items() if c != 0}, den, self.dim)

    def __repr__(self):
        return f"ValElt({format_valelt(self)!r}, dim={self.dim})"

    def __str__(self):
        return format_valelt(self)


def val(a: ValElt):
    return a.val()


def sign(a: ValElt) -> int:
    return a.sign()


def residue(a: ValElt, e: int) -> ValElt:
    return a.residue(e)


def section(a: ValElt, e: int) -> ValElt:
    return a.section(e)


def divides(a: ValElt, b: ValElt):
    """Divisibility in V_d: returns ``(True, q)`` with ``a*q == b`` or ``(False, None)``."""
    if not (a.in_ring() and b.in_ring()):
        raise ValueError("divides is defined on the valuation ring only")
    if b.is_zero():
        return True, ValElt.zero(b.dim)
    if a.is_zero():
        return False, None
    if a.val() <= b.val():
        return True, b / a
    return False, None


# ------------------------------------------------------------- formatting

def _fmt_exp(e: tuple) -> str:
    return "(" + ",".join(str(x) for x in e) + ")"


def _fmt_coeff(c) -> str:
    s = format_scalar(c)
    if isinstance(c, RatFunc):
        return f"({s})"
    return s


def format_poly(p: dict, d: int) -> str:
    if not p:
        return "0"
    parts = []
    for e in sorted(p):
        c = p[e]
        if not any(e):
            parts.append(_fmt_coeff(c))
            continue
        mono = "x^" + _fmt_exp(e)
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{_fmt_coeff(c)}*{mono}")
    out = parts[0]
    for s in parts[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


def format_valelt(a: ValElt) -> str:
    n = format_poly(a.num, a.dim)
    if a.den == _one_poly(a.dim):
        return n
    return f"({n})/({format_poly(a.den, a.dim)})"


# ---------------------------------------------------------------- parsing

class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|(t\d+)|(x)|([-+*/^(),]))")


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at column {pos + 1}")
        num, tvar, xvar, sym = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif tvar is not None:
            toks.append(("t", int(tvar[1:])))
        elif xvar is not None:
            toks.append(("x", None))
        else:
            toks.append((sym, None))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return toks


class _Parser:
    def __init__(self, text: str, d: int):
        self.toks = _tokenize(text)
        self.i = 0
        self.d = d

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise ParseError("unexpected end of input")
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}")
        self.i += 1
        return tok

    def parse(self) -> ValElt:
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at token {self.i + 1}")
        return v

    def expr(self) -> ValElt:
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self) -> ValElt:
        v = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            w = self.factor()
            if op == "*":
                v = v * w
            else:
                if w.is_zero():
                    raise ParseError("division by zero")
                v = v / w
        return v

    def factor(self) -> ValElt:
        if self.peek() in ("+", "-"):
            op = self.take()[0]
            v = self.factor()
            return -v if op == "-" else v
        v = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            k = self.take("num")[1]
            v = v ** (-k if neg else k)
        return v

    def rational(self):
        neg = False
        if self.peek() in ("+", "-"):
            neg = self.take()[0] == "-"
        p = self.take("num")[1]
        q = 1
        if self.peek() == "/":
            self.take()
            q = self.take("num")[1]
            if q == 0:
                raise ParseError("zero denominator in exponent")
        r = exponent(Fraction(p, q))
        return -r if neg else r

    def atom(self) -> ValElt:
        kind = self.peek()
        if kind == "num":
            return ValElt.constant(self.take()[1], self.d)
        if kind == "t":
            return ValElt.constant(gen(self.take()[1]), self.d)
        if kind == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        if kind == "x":
            self.take()
            if self.peek() != "^":
                exp = (1,)
            else:
                self.take()
                if self.peek() == "(":
                    self.take()
                    exp = [self.rational()]
                    while self.peek() == ",":
                        self.take()
                        exp.append(self.rational())
                    self.take(")")
                    exp = tuple(exp)
                else:
                    exp = (self.rational(),)
            if len(exp) != self.d:
                raise ParseError(f"exponent {exp} does not have dimension {self.d}")
            return ValElt.monomial(exp)
        raise ParseError(f"unexpected token {kind!r}")


def parse_valelt(text: str, d: int) -> ValElt:
    """Parse the element syntax, e.g. ``"(x^(0,1) - 2*x^(1,-3))/(1 + x^(1/2,0))"``."""
    return _Parser(text, d).parse()


# --------------------------------------------------------------- sampling

EXPONENT_POOL = tuple(exponent(x) for x in (0, 0, 1, 2, 3, "1/2", "1/3", "3/2", -1, -2, "-1/2"))
_PREFIX_HEADS = tuple(exponent(x) for x in (1, 2, "1/2", "1/3"))


def random_exponent(rng: random.Random, d: int, nonneg: bool = False) -> tuple:
    e = tuple(rng.choice(EXPONENT_POOL) for _ in range(d))
    if nonneg and e < (0,) * d:
        e = tuple(-x for x in e)
    return e


def random_positive_prefix(rng: random.Random, d: int, e: int) -> tuple:
    """An exponent whose first ``e`` coordinates are lex-positive."""
    k = rng.randrange(e)
    head = [0] * k + [rng.choice(_PREFIX_HEADS)]
    tail = [rng.choice(EXPONENT_POOL) for _ in range(d - k - 1)]
    return tuple(head + tail)


def random_coeff(rng: random.Random, gens: int = 0):
    c = rng.choice((1, 1, 2, 3, -1, -2, 5, mpq(1, 2), mpq(-2, 3)))
    if gens and rng.random() < 0.3:
        c = c * gen(rng.randint(1, gens)) + rng.randint(-3, 3)
    return c


def random_poly(rng: random.Random, d: int, terms: int, nonneg: bool = False, gens: int = 0) -> dict:
    p: dict = {}
    for _ in range(terms):
        e = random_exponent(rng, d, nonneg)
        p[e] = p.get(e, 0) + random_coeff(rng, gens)
    return {e: c for e, c in p.items() if c != 0}


def random_unit_poly(rng: random.Random, d: int, terms: int, gens: int = 0) -> dict:
    """A polynomial with value exactly 0 (a unit of V_d)."""
    p = {(0,) * d: random_coeff(rng, gens)}
    for _ in range(terms - 1):
        e = random_exponent(rng, d, nonneg=True)
        if any(e):
            p[e] = p.get(e, 0) + random_coeff(rng, gens)
    return {e: c for e, c in p.items() if c != 0}


def random_valelt(rng: random.Random, d: int, *, in_ring: bool = False, max_terms: int = 3,
                  fraction_prob: float = 0.35, gens: int = 0, nonzero: bool = False) -> ValElt:
    """A random element of K_d (of V_d when ``in_ring``)."""
    while True:
        num = random_poly(rng, d, rng.randint(1, max_terms), nonneg=in_ring, gens=gens)
        if rng.random() < fraction_prob and d > 0:
            if in_ring:
                den = random_unit_poly(rng, d, rng.randint(2, max(2, max_terms)), gens)
            else:
                den = random_poly(rng, d, rng.randint(1, max_terms), gens=gens)
        else:
            den = _one_poly(d)
        if not den:
            continue
        a = ValElt.make(num, den, d)
        if nonzero and a.is_zero():
            continue
        return a


def random_in_prime(rng: random.Random, d: int, e: int, max_terms: int = 2,
                    fraction_prob: float = 0.35) -> ValElt:
    """A random element of the prime p_e of V_d (1 <= e <= d)."""
    base = random_valelt(rng, d, in_ring=True, max_terms=max_terms, nonzero=True,
                         fraction_prob=fraction_prob)
    return base * ValElt.monomial(random_positive_prefix(rng, d, e))
