"""Products of valuation rings over a finite discrete space, with the SV witness.

For a, b in the product, points split into U (a strictly divides b), V (b
strictly divides a) and W (each divides the other).  Choosing c pointwise as
the relevant quotient gives ``(a - c b)(b - c a) = 0``, the polynomial form of
the SV property with ``P(T, S) = T - c S``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .checks import CheckResult
from .hahn import ValElt, divides, random_valelt


@dataclass
class Witness:
    c: dict
    U: tuple
    V: tuple
    W: tuple
    identity_holds: bool
    products: dict = field(default_factory=dict)


def sv_witness(X, dims: dict, a: dict, b: dict) -> Witness:
    """Build c with ``(a - c b)(b - c a) = 0`` at every point of ``X``."""
    X = tuple(X)
    for x in X:
        if a[x].dim != dims[x] or b[x].dim != dims[x]:
            raise ValueError(f"stalk at {x} must be K_{dims[x]}")
        if not (a[x].in_ring() and b[x].in_ring()):
            raise ValueError(f"values at {x} must lie in the valuation ring")
    U, V, W, c = [], [], [], {}
    for x in X:
        ab, q_ab = divides(a[x], b[x])  # a | b, q_ab = b/a
        ba, q_ba = divides(b[x], a[x])  # b | a, q_ba = a/b
        if ab and not ba:
            U.append(x)
            c[x] = q_ab
        elif ba and not ab:
            V.append(x)
            c[x] = q_ba
        elif ab and ba:
            W.append(x)
            c[x] = q_ba
        else:  # impossible in a valuation ring; kept so the certificate can say so
            raise AssertionError(f"neither of a, b divides the other at {x}")
    products = {x: (a[x] - c[x] * b[x]) * (b[x] - c[x] * a[x]) for x in X}
    ok = all(p.is_zero() for p in products.values())
    return Witness(c, tuple(U), tuple(V), tuple(W), ok, products)


@dataclass
class BoolProdConfig:
    points: int = 0  # 0 draws |X| from 1..6 per trial
    samples: int = 1000
    seed: int = 0
    max_dim: int = 3


def sv_witness_check(config: Optional[BoolProdConfig] = None) -> CheckResult:
    """Random trials: the partition is exact and the witness identity holds."""
    cfg = config or BoolProdConfig()
    rng = random.Random(cfg.seed)
    tag = "SV witness on a finite product"
    for _ in range(cfg.samples):
        k = cfg.points or rng.randint(1, 6)
        X = tuple(range(1, k + 1))
        dims = {x: rng.randint(1, cfg.max_dim) for x in X}

        def draw(x):
            if rng.random() < 0.1:
                return ValElt.zero(dims[x])
            return random_valelt(rng, dims[x], in_ring=True, max_terms=2)

        a = {x: draw(x) for x in X}
        b = {x: (a[x] if rng.random() < 0.1 else draw(x)) for x in X}
        w = sv_witness(X, dims, a, b)
        parts = w.U + w.V + w.W
        if sorted(parts) != list(X):
            return CheckResult("boolprod", tag, False, "partition is not exact", (a, b))
        if not w.identity_holds:
            return CheckResult("boolprod", tag, False, "(a - cb)(b - ca) != 0", (a, b))
    return CheckResult("boolprod", tag, True, f"{cfg.samples} pairs", count=cfg.samples)
