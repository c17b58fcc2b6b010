"""Randomized law suites for the Hahn kernel.

Each suite draws elements as raw quotients ``P/Q`` of random polynomials so
that the expected value and sign come from the raw data (``v(P) - v(Q)`` and
the product of the two leading signs), independently of the normal form
stored inside :class:`ValElt`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .checks import CheckResult
from .hahn import ValElt, divides, random_poly, random_unit_poly
from .scalars import scalar_sign


@dataclass
class KernelLawConfig:
    dim: int = 1
    triples: int = 10_000
    seed: int = 0
    max_terms: int = 3


@dataclass(frozen=True)
class RawQuotient:
    num: dict
    den: dict

    def element(self, d: int) -> ValElt:
        return ValElt.make(dict(self.num), dict(self.den), d)

    def expected_val(self):
        return tuple(a - b for a, b in zip(min(self.num), min(self.den)))

    def expected_sign(self) -> int:
        return scalar_sign(self.num[min(self.num)]) * scalar_sign(self.den[min(self.den)])


def random_quotient(rng: random.Random, d: int, max_terms: int = 3) -> RawQuotient:
    while True:
        num = random_poly(rng, d, rng.randint(1, max_terms))
        den = random_poly(rng, d, rng.randint(1, 2)) if rng.random() < 0.4 else {(0,) * d: 1}
        if num and den:
            return RawQuotient(num, den)


def kernel_law_check(config: Optional[KernelLawConfig] = None) -> list:
    """Field, valuation and order laws on random triples in ``K_d``."""
    cfg = config or KernelLawConfig()
    rng = random.Random(cfg.seed)
    d = cfg.dim
    zero = ValElt.zero(d)
    one = ValElt.one(d)
    fails: dict = {}

    def fail(name, witness):
        fails.setdefault(name, witness)

    for _ in range(cfg.triples):
        ra, rb, rc = (random_quotient(rng, d, cfg.max_terms) for _ in range(3))
        a, b, c = ra.element(d), rb.element(d), rc.element(d)
        if a.val() != ra.expected_val() or a.sign() != ra.expected_sign():
            fail("raw-data", ra)
        if (a + b) + c != a + (b + c) or a * (b + c) != a * b + a * c:
            fail("field", (a, b, c))
        if a * a.inverse() != one or a - a != zero:
            fail("field", (a,))
        if (a * b).val() != tuple(x + y for x, y in zip(a.val(), b.val())):
            fail("val-mult", (a, b))
        s = a + b
        if not s.is_zero() and s.val() < min(a.val(), b.val()):
            fail("val-ultrametric", (a, b))
        if (a * b).sign() != a.sign() * b.sign() or (-a).sign() != -a.sign():
            fail("sign-law", (a, b))
        # order compatibility: 0 < x < y implies v(y) <= v(x)
        x, y = (a if a.sign() > 0 else -a), (b if b.sign() > 0 else -b)
        if y < x:
            x, y = y, x
        if x < y and not (y.val() <= x.val()):
            fail("order-compat", (x, y))
        # exactly one of x < y, x == y, y < x
        if (x < y) + (x == y) + (y < x) != 1:
            fail("order-total", (x, y))
    names = [
        ("raw-data", "value and sign from the raw quotient"),
        ("field", "field axioms"),
        ("val-mult", "v(ab) = v(a) + v(b)"),
        ("val-ultrametric", "v(a+b) >= min"),
        ("sign-law", "a > 0 iff its leading coefficient is"),
        ("order-compat", "0 < a < b forces v(b) <= v(a)"),
        ("order-total", "total order"),
    ]
    return [CheckResult(f"K{d}-{n}", tag, n not in fails,
                        f"{cfg.triples} triples" if n not in fails else "counterexample found",
                        fails.get(n), count=cfg.triples)
            for n, tag in names]


def valuation_ring_law_check(dim: int, samples: int = 10_000, seed: int = 0) -> list:
    """``a`` or ``1/a`` lies in ``V_d``, and ``divides`` matches cross-multiplication."""
    rng = random.Random(seed)
    d = dim
    dichotomy_bad = divides_bad = None
    for _ in range(samples):
        ra = random_quotient(rng, d)
        a = ra.element(d)
        if not (a.in_ring() or a.inverse().in_ring()):
            dichotomy_bad = dichotomy_bad or a
        # cross-multiplication oracle on raw data: P1/Q1 divides P2/Q2 in V_d
        # iff v(P2 Q1) >= v(P1 Q2); leading exponents add under products.
        P1, Q1 = random_poly(rng, d, rng.randint(1, 3), nonneg=True), random_unit_poly(rng, d, rng.randint(1, 2))
        P2, Q2 = random_poly(rng, d, rng.randint(1, 3), nonneg=True), random_unit_poly(rng, d, rng.randint(1, 2))
        if rng.random() < 0.05:
            P2 = {}
        p, q = ValElt.make(dict(P1), dict(Q1), d), ValElt.make(dict(P2), dict(Q2), d)
        ok, quo = divides(p, q)
        if not P2:
            expected = True
        elif not P1:
            expected = False
        else:
            lhs = tuple(x + y for x, y in zip(min(P2), min(Q1)))
            rhs = tuple(x + y for x, y in zip(min(P1), min(Q2)))
            expected = lhs >= rhs
        if ok != expected or (ok and p * quo != q) or (ok and not quo.in_ring()):
            divides_bad = divides_bad or (p, q)
    return [
        CheckResult(f"V{d}-dichotomy", "a or 1/a in the valuation ring", dichotomy_bad is None,
                    f"{samples} elements", dichotomy_bad, samples),
        CheckResult(f"V{d}-divides", "divisibility by cross-multiplication", divides_bad is None,
                    f"{samples} pairs", divides_bad, samples),
    ]

