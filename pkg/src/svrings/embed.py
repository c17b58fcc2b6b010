"""Valued-field extension steps at computable scale.

Sources are polynomials ``sum a_i z^i`` over K_d, stored as coefficient
lists, where z is either an element h with a fresh value (``case1``) or an
element b of value 0 whose residue is transcendental (``case2``).  Each step
comes with a map into some K_(d') and an independent description of the
source valuation and order; the audits compare the two.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .checks import CheckResult
from .hahn import INFINITY, ValElt, random_coeff, random_exponent, random_valelt
from .scalars import gadd, gen, scalar_sign


# ------------------------------------------------------- source polynomials

def poly_trim(p: Sequence[ValElt]) -> list:
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def poly_add(p: Sequence[ValElt], q: Sequence[ValElt]) -> list:
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else None
        b = q[i] if i < len(q) else None
        out.append(a + b if a is not None and b is not None else (a if b is None else b))
    return poly_trim(out)


def poly_mul(p: Sequence[ValElt], q: Sequence[ValElt]) -> list:
    if not p or not q:
        return []
    d = p[0].dim
    out = [ValElt.zero(d) for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return poly_trim(out)


def random_source_poly(rng: random.Random, d: int, degree: int, gens: int = 0) -> list:
    """Coefficients a_0..a_degree, all nonzero (the steps assume a_i != 0)."""
    return [random_valelt(rng, d, max_terms=2, nonzero=True, gens=gens, fraction_prob=0.2)
            for _ in range(degree + 1)]


# ------------------------------------------------------------ embeddings

@dataclass
class Extension:
    """A map from a source domain into some K_(d'), with the source's own order data.

    ``source_val`` and ``source_sign`` are computed from the source
    description alone, never from the image.
    """

    name: str
    apply: Callable
    source_val: Callable
    source_sign: Callable
    target_dim: int


def case1_extension(d: int, flip: bool = False) -> Extension:
    """K_d(h) with v(h) a new last coordinate, sent into K_(d+1) by h -> x^delta.

    With ``flip`` the map sends h to -x^delta instead: still a valued-field
    embedding, but it reverses the sign of h and so must fail the order audit.
    """
    delta = (0,) * d + (1,)
    hx = ValElt.monomial(delta, -1 if flip else 1)

    def apply(p):
        out = ValElt.zero(d + 1)
        power = ValElt.one(d + 1)
        for a in p:
            out = out + a.pad_trailing(1) * power
            power = power * hx
        return out

    def terms(p):
        return [(a.val() + (i,), i) for i, a in enumerate(p) if not a.is_zero()]

    def source_val(p):
        t = terms(p)
        return min(t)[0] if t else INFINITY

    def source_sign(p):
        # h is positive, so the term of least value decides the sign
        t = terms(p)
        if not t:
            return 0
        return p[min(t)[1]].sign()

    return Extension("case1-flipped" if flip else "case1", apply, source_val, source_sign, d + 1)


def case2_extension(m: int, d: int) -> Extension:
    """K_d(b) with b of value 0 and residue t_(m+1), sent into K_d by b -> t_(m+1)."""
    t = gen(m + 1)

    def apply(p):
        out = ValElt.zero(d)
        power = ValElt.one(d)
        for a in p:
            out = out + a * power
            power = power * t
        return out

    def source_val(p):
        vals = [a.val() for a in p if not a.is_zero()]
        return min(vals) if vals else INFINITY

    def source_sign(p):
        # among coefficients of least value the top power of b dominates,
        # b being infinitely large over the coefficient field
        v = source_val(p)
        if v is INFINITY:
            return 0
        top = max(i for i, a in enumerate(p) if not a.is_zero() and a.val() == v)
        return p[top].sign()

    return Extension("case2", apply, source_val, source_sign, d)


def compose_case1_case2(m: int, d: int) -> Extension:
    """Adjoin h (fresh value) and then b (residue-transcendental) over K_d(h).

    Source elements are lists over j of lists over i: ``sum_j (sum_i a_ij h^i) b^j``.
    """
    e1 = case1_extension(d)
    e2 = case2_extension(m, d + 1)

    def apply(pp):
        return e2.apply([e1.apply(p) for p in pp])

    def source_val(pp):
        vals = [e1.source_val(p) for p in pp if poly_trim(p)]
        return min(vals) if vals else INFINITY

    def source_sign(pp):
        v = source_val(pp)
        if v is INFINITY:
            return 0
        top = max(j for j, p in enumerate(pp) if poly_trim(p) and e1.source_val(p) == v)
        return e1.source_sign(pp[top])

    return Extension("case1+case2", apply, source_val, source_sign, d + 1)


# ----------------------------------------------------------------- audits

def monomial_group_check(d: int, trials: int = 1000, seed: int = 0) -> CheckResult:
    """The monomials x^gamma form a group mapped isomorphically onto Q^d by v."""
    tag = "monomial group"
    rng = random.Random(seed)
    one = ValElt.one(d)
    if ValElt.monomial((0,) * d) != one:
        return CheckResult("monomial-group", tag, False, "x^0 != 1")
    for _ in range(trials):
        g, h = random_exponent(rng, d), random_exponent(rng, d)
        xg, xh = ValElt.monomial(g), ValElt.monomial(h)
        if xg.val() != g:
            return CheckResult("monomial-group", tag, False, "v(x^g) != g", g)
        if xg * xh != ValElt.monomial(gadd(g, h)):
            return CheckResult("monomial-group", tag, False, "exponent law fails", (g, h))
        if xg * ValElt.monomial(tuple(-c for c in g)) != one:
            return CheckResult("monomial-group", tag, False, "no inverse", g)
        if (xg == xh) != (g == h):
            return CheckResult("monomial-group", tag, False, "not injective", (g, h))
        if xg.sign() != 1:
            return CheckResult("monomial-group", tag, False, "monomial not positive", g)
        if xg.is_unit() and xg != one:
            return CheckResult("monomial-group", tag, False, "nontrivial monomial of value 0", g)
    return CheckResult("monomial-group", tag, True, f"d={d}, {trials} pairs", count=trials)


def coefficient_field_check(m: int, d: int, trials: int = 1000, seed: int = 0) -> CheckResult:
    """Constants form a field mapped identically onto the residue field."""
    tag = "coefficient field"
    rng = random.Random(seed)
    for _ in range(trials):
        c1, c2 = random_coeff(rng, m), random_coeff(rng, m)
        k1, k2 = ValElt.constant(c1, d), ValElt.constant(c2, d)
        lam = lambda a: a.residue(d).to_scalar()
        if lam(k1) != c1:
            return CheckResult("coefficient-field", tag, False, "residue of a constant differs", c1)
        if lam(k1 * k2) != c1 * c2 or lam(k1 + k2) != c1 + c2:
            return CheckResult("coefficient-field", tag, False, "residue not a homomorphism", (c1, c2))
        if k1.in_prime(d) != (c1 == 0):
            return CheckResult("coefficient-field", tag, False, "nonzero constant in the maximal ideal", c1)
        if d and m:
            noisy = k1 + ValElt.monomial((1,) + (0,) * (d - 1), c2)
            if lam(noisy) != c1:
                return CheckResult("coefficient-field", tag, False, "residue sees the x part", c1)
    return CheckResult("coefficient-field", tag, True, f"m={m}, d={d}", count=trials)


def valuation_law_check(ext: Extension, polys: Sequence, law: Callable, name: str, tag: str) -> CheckResult:
    """``v(image) == law(source)`` for every sample."""
    for p in polys:
        img = ext.apply(p)
        want = law(p)
        got = img.val()
        if got != want:
            return CheckResult(name, tag, False, f"v(image)={got} but law gives {want}", p)
    return CheckResult(name, tag, True, f"{len(polys)} polynomials", count=len(polys))


def homomorphism_check(ext: Extension, polys: Sequence, mul: Callable, add: Callable,
                       name: str, rng: random.Random) -> CheckResult:
    tag = "ring embedding"
    for p in polys:
        q = rng.choice(polys)
        fp, fq = ext.apply(p), ext.apply(q)
        if ext.apply(add(p, q)) != fp + fq:
            return CheckResult(name, tag, False, "sum not preserved", (p, q))
        if ext.apply(mul(p, q)) != fp * fq:
            return CheckResult(name, tag, False, "product not preserved", (p, q))
        if fp.is_zero():
            return CheckResult(name, tag, False, "nonzero source element maps to 0", p)
        if fp.sign() != ext.source_sign(p):
            return CheckResult(name, tag, False, "sign not preserved", p)
    return CheckResult(name, tag, True, f"{len(polys)} products", count=len(polys))


def order_preservation_audit(ext: Extension, samples: Sequence) -> CheckResult:
    """For positive r, the residue of ``image(r) / x^v(r)`` must be a positive scalar."""
    tag = "order preservation"
    checked = 0
    for r in samples:
        s = ext.source_sign(r)
        if s == 0:
            continue
        if s < 0:
            r = negate(r)
        g = ValElt.monomial(ext.source_val(r))
        ratio = ext.apply(r) / g
        if not ratio.is_unit():
            return CheckResult("order-audit", tag, False, "image has the wrong value", r)
        lam = ratio.residue(ratio.dim).to_scalar()
        checked += 1
        if scalar_sign(lam) <= 0:
            return CheckResult("order-audit", tag, False, f"residue {lam} is not positive", r)
    return CheckResult("order-audit", tag, True, f"{checked} positive elements", count=checked)


def negate(r):
    if isinstance(r, ValElt):
        return -r
    return [negate(a) for a in r]


@dataclass
class EmbedConfig:
    dim: int = 1
    generators: int = 0
    samples: int = 1000
    max_degree: int = 4
    seed: int = 0


def case1_extend(config: Optional[EmbedConfig] = None) -> list:
    """Valuation law, homomorphism and order audits for the fresh-value step."""
    cfg = config or EmbedConfig()
    rng = random.Random(cfg.seed)
    d = cfg.dim
    ext = case1_extension(d)
    polys = [random_source_poly(rng, d, rng.randint(0, cfg.max_degree), cfg.generators)
             for _ in range(cfg.samples)]

    def law(p):  # min over i of v(a_i) + i*delta, read in K_(d+1)
        return min(a.val() + (i,) for i, a in enumerate(p))

    hx = ext.apply([ValElt.zero(d), ValElt.one(d)])
    results = [
        CheckResult("case1-generator", "fresh value", hx.val() == (0,) * d + (1,), f"v(h)={hx.val()}"),
        valuation_law_check(ext, polys, law, "case1-law", "value of a polynomial in h"),
        homomorphism_check(ext, polys[: max(1, cfg.samples // 5)], poly_mul, poly_add, "case1-hom", rng),
        order_preservation_audit(ext, polys),
    ]
    flipped = order_preservation_audit(case1_extension(d, flip=True), [[ValElt.zero(d), ValElt.one(d)]] + polys)
    results.append(CheckResult("case1-flip-detected", "order preservation", not flipped.passed,
                               flipped.detail, flipped.witness))
    return results


def case2_extend(config: Optional[EmbedConfig] = None) -> list:
    """Gauss valuation law, residue and order audits for the residue-transcendental step."""
    cfg = config or EmbedConfig()
    rng = random.Random(cfg.seed)
    d, m = cfg.dim, cfg.generators
    ext = case2_extension(m, d)
    polys = [random_source_poly(rng, d, rng.randint(0, cfg.max_degree), m) for _ in range(cfg.samples)]

    def law(p):
        return min(a.val() for a in p)

    b = ext.apply([ValElt.zero(d), ValElt.one(d)])
    ok_b = b.is_unit() and b.residue(d).to_scalar() == gen(m + 1)
    results = [
        CheckResult("case2-generator", "residue transcendental", ok_b, f"residue(b)={b.residue(d)}"),
        valuation_law_check(ext, polys, law, "case2-law", "Gauss valuation"),
        homomorphism_check(ext, polys[: max(1, cfg.samples // 5)], poly_mul, poly_add, "case2-hom", rng),
        order_preservation_audit(ext, polys),
    ]
    return results


def composition_check(config: Optional[EmbedConfig] = None) -> list:
    """Iterate the two steps: both valuation laws compose and order is kept."""
    cfg = config or EmbedConfig()
    rng = random.Random(cfg.seed)
    d, m = cfg.dim, cfg.generators
    ext = compose_case1_case2(m, d)
    samples = []
    for _ in range(cfg.samples):
        outer = rng.randint(0, 2)
        samples.append([random_source_poly(rng, d, rng.randint(0, 2), m) for _ in range(outer + 1)])

    def law(pp):
        return min(a.val() + (i,) for p in pp for i, a in enumerate(p))

    return [
        valuation_law_check(ext, samples, law, "composed-law", "iterated valuation laws"),
        order_preservation_audit(ext, samples),
    ]
