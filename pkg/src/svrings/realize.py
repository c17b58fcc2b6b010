"""From ring specs to spectrum posets and back.

``spec_poset`` lists every prime of a tree-model ring: on the chain of a leaf
of depth d the primes have levels d (the minimal prime) down to 0 (the maximal
ideal), and the chains of two leaves share exactly the primes of level at most
the level of their join.  ``realize`` inverts this for any finite root.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .analysis import (
    brspec, empirical_brspec, empirical_poset, max_ideal_branching_check,
    prime_witnesses, sum_membership_check,
)
from .checks import CheckLog, CheckResult
from .rootsys import (
    RootPoset, branching_points, is_reduced, poset_iso,
    validate_root_system,
)
from .svring import RingSpec, canonical_orthogonals, in_prime_at, sample_elements


@dataclass(frozen=True)
class PrimePoint:
    """One prime of the ring: the node of the tree it hangs on and its level."""

    id: str
    node: str
    level: int
    leaf: int  # index of a leaf whose chain passes through this prime


def prime_points(spec: RingSpec) -> list:
    """All primes, ordered by ascending level within each tree node."""
    pts = []
    for v in spec.tree.elements:
        hi = spec.levels[v]
        lo = spec.levels[spec.parent[v]] + 1 if v in spec.parent else 0
        leaf = spec.index[spec.below(v)[0]]
        for lvl in range(lo, hi + 1):
            if lvl == hi:
                pid = v
            elif lvl == 0 and v == spec.top:
                pid = spec.max_id
            else:
                pid = f"{v}~{lvl}"
            pts.append(PrimePoint(pid, v, lvl, leaf))
    return pts


def spec_poset(spec: RingSpec) -> RootPoset:
    """The full prime spectrum under inclusion."""
    pts = prime_points(spec)
    tree = spec.tree
    rel = []
    for p in pts:
        for q in pts:
            if p is not q and tree.leq(p.node, q.node) and q.level <= p.level:
                rel.append((p.id, q.id))
    return RootPoset([p.id for p in pts], rel)


def prime_member(spec: RingSpec, point: PrimePoint):
    return lambda a: in_prime_at(spec, a, point.leaf, point.level)


def empirical_spec_poset(spec: RingSpec, extra=()) -> RootPoset:
    """Inclusion order of the primes recomputed from membership on a separating family."""
    pts = prime_points(spec)
    family = list(prime_witnesses(spec)) + list(extra)
    return empirical_poset([p.id for p in pts], [prime_member(spec, p) for p in pts], family)


# --------------------------------------------------------------- realize

class RealizeError(ValueError):
    pass


def realize(P: RootPoset, name: str = "") -> RingSpec:
    """A ring spec whose prime spectrum is order-isomorphic to the finite root ``P``.

    The tree is made of the minimal points and the branching points of P; a
    point q gets level ``|q up| - 1``.  When the top of P is not a branching
    point it becomes the maximal ideal sitting above the tree.
    """
    chk = validate_root_system(P, require_top=True)
    if not chk:
        raise RealizeError(f"not a finite root: {chk.message}")
    top = P.top()
    minima = P.minimal()
    bps = branching_points(P)
    keep = [x for x in P.elements if x in minima or x in bps]
    levels = {x: len(P.up(x)) - 1 for x in keep}
    # leaves first, in the order of P
    order = [x for x in P.elements if x in minima] + [x for x in P.elements if x in bps]
    tree = P.subposet(order)
    tree = RootPoset(order, tree.covers())
    max_id = top if top not in bps else "m"
    if len(minima) == 1:
        return RingSpec(tree, {minima[0]: levels[minima[0]]}, max_id=top, name=name)
    return RingSpec(tree, {x: levels[x] for x in order}, max_id=max_id, name=name)


def round_trip(P: RootPoset) -> Optional[dict]:
    """Isomorphism ``spec_poset(realize(P)) -> P`` or None."""
    return poset_iso(spec_poset(realize(P)), P)


# ---------------------------------------------------------------- phi_P

@dataclass
class PhiResult:
    holds: bool
    iso: Optional[dict]
    facts: CheckLog = field(default_factory=CheckLog)

    def __bool__(self):
        return self.holds


def phi_P_check(spec: RingSpec, P: RootPoset, samples: int = 40, seed: int = 0) -> PhiResult:
    """Does the ring satisfy the sentence describing the branching spectrum ``P``?

    The semantic answer is an order isomorphism between BrSpec of the ring and
    ``P``.  The ingredients of the sentence are also checked on the canonical
    orthogonals: their annihilators are the minimal primes, pairwise sums of
    annihilators are the branching ideals (with verified splittings), and the
    BrSpec rebuilt from these ideals alone agrees with the tree.  When the
    maximal ideal is branching, sampled non-units split into zero divisors.
    """
    facts = CheckLog()
    chk = validate_root_system(P, require_top=True)
    if not chk or not is_reduced(P):
        facts.add(CheckResult("target", "reduced finite root", False, chk.message or "not reduced"))
        return PhiResult(False, None, facts)
    elements = sample_elements(spec, seed, samples)
    es = canonical_orthogonals(spec)
    ann_ok = all(((b * e).is_zero() == b.comps[i].is_zero()) for b in elements for i, e in enumerate(es))
    facts.add(CheckResult("annihilators", "minimal primes are annihilators", ann_ok))
    if spec.rank >= 2:
        facts.add(sum_membership_check(spec, elements))
        emp, _ = empirical_brspec(spec, elements)
        same = poset_iso(emp, brspec(spec)) is not None
        facts.add(CheckResult("brspec-elements", "branching spectrum from orthogonals", same))
        facts.add(max_ideal_branching_check(spec, samples, seed))
    iso = poset_iso(brspec(spec), P)
    holds = iso is not None and facts.passed
    return PhiResult(holds, iso, facts)
