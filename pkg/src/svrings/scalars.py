"""Ordered value groups and ordered coefficient fields.

Group elements of Q^d are plain tuples of rationals (``int`` or ``Fraction``);
Python's tuple comparison already is the lexicographic order, so the helpers
below only add dimension checking and the few group operations we need.

Scalars live in the tower Q < Q(t1) < Q(t1, t2) < ..., where each ``t_j`` is
positive and infinitely large over the previous field.  Level-0 scalars are
``int`` or ``Fraction``; higher levels are :class:`RatFunc` instances kept in a
canonical form (coprime numerator and monic denominator, collapsed to the
lowest level that can hold the value), so ``==`` and ``hash`` are structural.
"""
from __future__ import annotations

import operator
from fractions import Fraction
from typing import Union

from gmpy2 import mpq

Rational = Union[int, Fraction]
MPQ = type(mpq())
RATIONALS = (int, Fraction, MPQ)
GroupElement = tuple


def group_element(*coords) -> tuple:
    """Build a group element, parsing strings such as ``"1/2"``."""
    return tuple(exponent(c) for c in coords)


def exponent(c):
    """Normalize one exponent coordinate: ``int`` when integral, else ``mpq``.

    Exponent tuples are hashed constantly (they are dictionary keys of every
    polynomial), and gmpy2's rationals hash far faster than ``Fraction`` while
    hashing and comparing equal to the same ``int``/``Fraction`` values.
    """
    if isinstance(c, bool):
        raise TypeError(f"not a rational: {c!r}")
    if isinstance(c, int):
        return c
    if isinstance(c, str):
        c = Fraction(c)
    if isinstance(c, (Fraction, MPQ)):
        q = mpq(c)
        return int(q.numerator) if q.denominator == 1 else q
    raise TypeError(f"not a rational: {c!r}")


_rational = exponent


def _check_dims(a: tuple, b: tuple) -> None:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def lex_cmp(a: tuple, b: tuple) -> int:
    """Return -1, 0 or 1 according to the lexicographic order."""
    _check_dims(a, b)
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    return 0


def gadd(a: tuple, b: tuple) -> tuple:
    _check_dims(a, b)
    return tuple(map(operator.add, a, b))


def gsub(a: tuple, b: tuple) -> tuple:
    _check_dims(a, b)
    return tuple(map(operator.sub, a, b))


def gneg(a: tuple) -> tuple:
    return tuple(-x for x in a)


def gscale(a: tuple, k) -> tuple:
    return tuple(exponent(mpq(x) * mpq(k)) for x in a)


def gdiv(a: tuple, n: int) -> tuple:
    """Divide by a nonzero integer; total because Q^d is divisible."""
    if n == 0:
        raise ZeroDivisionError("division of a group element by 0")
    return tuple(exponent(mpq(x) / n) for x in a)


def pad_prefix(a: tuple, e: int) -> tuple:
    if e < 0:
        raise ValueError("pad length must be >= 0")
    return (0,) * e + tuple(a)


def zero(d: int) -> tuple:
    return (0,) * d


# ---------------------------------------------------------------- scalars

def level(a) -> int:
    return a.level if isinstance(a, RatFunc) else 0


def scalar_sign(a) -> int:
    """Sign of a scalar: -1, 0 or 1.

    A nonzero rational function in the top generator has the sign of its
    numerator's leading coefficient, since the denominator is monic and the
    generator exceeds every element of the coefficient field.
    """
    if isinstance(a, RatFunc):
        return scalar_sign(a.num[-1])
    if a > 0:
        return 1
    if a < 0:
        return -1
    return 0


def sdiv(a, b):
    """Exact field division of scalars (never produces a float)."""
    if isinstance(a, RATIONALS) and isinstance(b, RATIONALS):
        q = mpq(a) / mpq(b)
        return int(q) if q.denominator == 1 else q
    return a / b


def _is_zero(a) -> bool:
    return not isinstance(a, RatFunc) and a == 0


# Univariate polynomials over the field below the current level are tuples of
# coefficients, lowest degree first, with no trailing zeros.

def _ptrim(p: list) -> tuple:
    while p and _is_zero(p[-1]):
        p.pop()
    return tuple(p)


def _padd(p: tuple, q: tuple) -> tuple:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return _ptrim(out)


def _pneg(p: tuple) -> tuple:
    return tuple(-c for c in p)


def _pmul(p: tuple, q: tuple) -> tuple:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if _is_zero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return _ptrim(out)


def _pscale(p: tuple, c) -> tuple:
    return _ptrim([a * c for a in p])


def _pdivmod(p: tuple, q: tuple) -> tuple[tuple, tuple]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    lq = q[-1]
    quot = [0] * max(len(p) - len(q) + 1, 0)
    while len(r) >= len(q) and r:
        c = sdiv(r[-1], lq)
        k = len(r) - len(q)
        quot[k] = c
        for i, b in enumerate(q):
            r[k + i] = r[k + i] - c * b
        r.pop()
        r = list(_ptrim(r))
    return _ptrim(quot), _ptrim(r)


def _pmonic(p: tuple) -> tuple:
    lc = p[-1]
    return tuple(sdiv(c, lc) for c in p)


def _pgcd(p: tuple, q: tuple) -> tuple:
    while q:
        p, q = q, _pdivmod(p, q)[1]
    return _pmonic(p) if p else p


class RatFunc:
    """A rational function in the generator ``t<level>``.

    Coefficients are scalars of strictly lower level.  Instances are only
    created through :meth:`make`, which reduces and collapses constants.
    """

    __slots__ = ("level", "num", "den", "_hash")

    def __init__(self, lvl: int, num: tuple, den: tuple):
        self.level = lvl
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def make(cls, lvl: int, num: tuple, den: tuple):
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            return 0
        if len(den) == 1:
            # constant denominator: nothing to cancel
            if not (isinstance(den[0], int) and den[0] == 1):
                num = tuple(sdiv(c, den[0]) for c in num)
                den = (1,)
            return num[0] if len(num) == 1 else cls(lvl, num, den)
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        lc = den[-1]
        if not (isinstance(lc, int) and lc == 1):
            num = tuple(sdiv(c, lc) for c in num)
            den = tuple(sdiv(c, lc) for c in den)
        if len(den) == 1 and len(num) == 1:
            return num[0]
        return cls(lvl, num, den)

    # coercion: view any scalar of level <= self.level as a fraction in t_level
    def _parts(self, other, lvl: int) -> tuple[tuple, tuple]:
        if isinstance(other, RatFunc) and other.level == lvl:
            return other.num, other.den
        return (other,), (1,)

    def _binary(self, other, op):
        if not isinstance(other, (RatFunc,) + RATIONALS):
            return NotImplemented
        lvl = max(self.level, level(other))
        if lvl == self.level:
            an, ad = self.num, self.den
        else:
            an, ad = (self,), (1,)
        bn, bd = self._parts(other, lvl)
        return op(lvl, an, ad, bn, bd)

    @staticmethod
    def _add(lvl, an, ad, bn, bd):
        if ad == bd:
            return RatFunc.make(lvl, _padd(an, bn), ad)
        return RatFunc.make(lvl, _padd(_pmul(an, bd), _pmul(bn, ad)), _pmul(ad, bd))

    @staticmethod
    def _mul(lvl, an, ad, bn, bd):
        return RatFunc.make(lvl, _pmul(an, bn), _pmul(ad, bd))

    @staticmethod
    def _div(lvl, an, ad, bn, bd):
        if not bn:
            raise ZeroDivisionError("scalar division by zero")
        return RatFunc.make(lvl, _pmul(an, bd), _pmul(ad, bn))

    def __add__(self, other):
        return self._binary(other, RatFunc._add)

    __radd__ = __add__

    def __mul__(self, other):
        return self._binary(other, RatFunc._mul)

    __rmul__ = __mul__

    def __neg__(self):
        return RatFunc(self.level, _pneg(self.num), self.den)

    def __sub__(self, other):
        if not isinstance(other, (RatFunc,) + RATIONALS):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __truediv__(self, other):
        return self._binary(other, RatFunc._div)

    def __rtruediv__(self, other):
        # only reached for lower-level operands (int, Fraction)
        if not isinstance(other, RATIONALS):
            return NotImplemented
        return RatFunc._div(self.level, (other,), (1,), self.num, self.den)

    def __pow__(self, k: int):
        if k < 0:
            return 1 / (self ** -k)
        out = 1
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.level == other.level and self.num == other.num and self.den == other.den
        if isinstance(other, RATIONALS):
            return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.level, self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RatFunc({format_scalar(self)})"

    def __str__(self):
        return format_scalar(self)


def gen(j: int) -> RatFunc:
    """The generator ``t_j`` (j >= 1)."""
    if j < 1:
        raise ValueError("generators are numbered from 1")
    return RatFunc(j, (0, 1), (1,))


def _format_poly(p: tuple, var: str) -> str:
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if _is_zero(c):
            continue
        cs = format_scalar(c)
        if isinstance(c, RatFunc) or (not isinstance(c, int) and i > 0):
            cs = f"({cs})"
        if i == 0:
            parts.append(cs)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
    s = " + ".join(parts)
    return s.replace("+ -", "- ")


def format_scalar(a) -> str:
    if isinstance(a, RatFunc):
        var = f"t{a.level}"
        n = _format_poly(a.num, var)
        if a.den == (1,):
            return n
        return f"({n})/({_format_poly(a.den, var)})"
    return str(a)
