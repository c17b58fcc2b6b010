"""Structural predicates on tree-model rings, checked on exact samples.

Every check here has two sides: a structural answer read off the tree and an
element-level computation (orthogonal families, divisibility witnesses,
explicit splittings) that must agree with it.  Disagreement is a bug in the
model, never a tolerated outcome.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional, Sequence

from .checks import CheckLog, CheckResult
from .hahn import ValElt, divides
from .rootsys import RootPoset, is_reduced, validate_root_system
from .svring import (
    RingSpec, SpecError, TupleElt, canonical_orthogonals, compatibility_violation,
    constant, is_unit, kill_component, lift_from_leaf, lift_from_node,
    one, residue_at, sample, sample_elements, zero,
)


@dataclass
class AnalysisConfig:
    trials: int = 1000
    seed: int = 0
    size: int = 2


@dataclass
class AnalysisReport:
    rank: int
    branching_nodes: tuple
    brspec: RootPoset
    ring_type: str
    check_log: CheckLog = field(default_factory=CheckLog)

    @property
    def passed(self) -> bool:
        return self.check_log.passed


# ------------------------------------------------------------------ rank

def rank_check(spec: RingSpec, trials: int = 1000, seed: int = 0,
               elements: Optional[Sequence[TupleElt]] = None) -> CheckResult:
    """Rank as the size of a maximal orthogonal family, tested on samples.

    The canonical orthogonals must be valid, nonzero and pairwise orthogonal;
    maximality is the sampled clause "no nonzero b kills every e_i".  Along
    the way the annihilator of each e_i is compared with the minimal prime at
    leaf i (b * e_i == 0 exactly when b_i == 0).
    """
    tag = "orthogonal family"
    es = canonical_orthogonals(spec)
    n = spec.rank
    for k, e in enumerate(es):
        if compatibility_violation(spec, e.comps) is not None:
            return CheckResult("rank", tag, False, f"e_{k + 1} is not a ring element", e)
        if e.is_zero():
            return CheckResult("rank", tag, False, f"e_{k + 1} is zero", e)
    for i, j in combinations(range(n), 2):
        if not (es[i] * es[j]).is_zero():
            return CheckResult("rank", tag, False, f"e_{i + 1} e_{j + 1} != 0", (i, j))
    if elements is None:
        elements = sample_elements(spec, seed, trials)
    for b in elements:
        killed = [(b * e).is_zero() for e in es]
        for i in range(n):
            if killed[i] != b.comps[i].is_zero():
                return CheckResult("rank", tag, False,
                                   f"annihilator of e_{i + 1} differs from the minimal prime", b)
        if not b.is_zero() and all(killed):
            return CheckResult("rank", tag, False, "nonzero element kills every e_i", b)
    return CheckResult("rank", tag, True, f"rank={n}", n, count=len(elements))


# -------------------------------------------------------------------- SV

def sv_pair_witness(spec: RingSpec, b: TupleElt, c: TupleElt, i: int):
    """Divisibility between ``b e_i`` and ``c e_i`` with a lifted quotient.

    Returns ``(direction, Q)`` where direction is ``"b|c"`` or ``"c|b"`` and Q
    is a ring element with ``Q*b*e_i == c*e_i`` (resp. the symmetric identity),
    or ``None`` when neither divides.
    """
    bi, ci = b.comps[i], c.comps[i]
    ok, q = divides(bi, ci)
    direction = "b|c"
    if not ok:
        ok, q = divides(ci, bi)
        direction = "c|b"
    if not ok:
        return None
    return direction, lift_from_leaf(spec, i, q)


def sv_check(spec: RingSpec, trials: int = 1000, seed: int = 0,
             pairs: Optional[Sequence[tuple]] = None) -> CheckResult:
    """Sampled SV test: at each leaf, ``b e_i`` and ``c e_i`` are comparable under division.

    The per-leaf quotient is lifted to a whole ring element and the identity
    is re-checked in the ring, so the divisibility is a statement about the
    ring and not only about its factors.
    """
    tag = "SV via divisibility at each leaf"
    es = canonical_orthogonals(spec)
    if pairs is None:
        pool = sample_elements(spec, seed, max(8, trials // 4 + 8))
        rng = random.Random(seed + 1)
        pairs = [(rng.choice(pool), rng.choice(pool)) for _ in range(trials)]
    for b, c in pairs:
        for i in range(spec.rank):
            w = sv_pair_witness(spec, b, c, i)
            if w is None:
                return CheckResult("sv", tag, False, f"incomparable at leaf {spec.leaves[i]}", (b, c, i))
            direction, Q = w
            if compatibility_violation(spec, Q.comps) is not None:
                return CheckResult("sv", tag, False, "quotient does not lift", (b, c, i))
            # multiply by e_i first: the one-hot factor zeroes the other leaves cheaply
            be, ce = b * es[i], c * es[i]
            lhs, rhs = (Q * be, ce) if direction == "b|c" else (Q * ce, be)
            if lhs != rhs:
                return CheckResult("sv", tag, False, "lifted quotient fails in the ring", (b, c, i))
    return CheckResult("sv", tag, True, f"{len(pairs)} pairs", count=len(pairs))


# ------------------------------------------------------- branching ideals

def branching_ideals(spec: RingSpec) -> tuple:
    """Internal tree nodes, i.e. the primes of the form Ann(e_i) + Ann(e_j)."""
    if spec.rank < 2:
        return ()
    return spec.internal


def brspec(spec: RingSpec) -> RootPoset:
    """Minimal primes, branching ideals and the maximal ideal, ordered by inclusion."""
    elems = list(spec.tree.elements)
    covers = list(spec.tree.covers())
    if spec.max_id not in elems:
        elems.append(spec.max_id)
        covers.append((spec.top, spec.max_id))
    return RootPoset(elems, covers)


def in_sum_of_primes(spec: RingSpec, a: TupleElt, i: int, j: int):
    """Decide ``a in Ann(e_i) + Ann(e_j)``; on success return the splitting.

    The criterion is the vanishing of the residue of ``a`` at the join of the
    two leaves.  The splitting is ``a = x + y`` with ``y`` the section lift of
    ``a_i`` (so ``y_j = 0``) and ``x = a - y`` (so ``x_i = 0``).
    """
    if i == j:
        raise ValueError("in_sum_of_primes needs two distinct leaves")
    q = spec.join_of(i, j)
    if not residue_at(spec, a, q).is_zero():
        return False, None
    y = lift_from_leaf(spec, i, a.comps[i])
    x = a - y
    return True, (x, y)


def verify_splitting(spec: RingSpec, a: TupleElt, i: int, j: int, xy) -> bool:
    """Independent arithmetic oracle for a sum-of-primes splitting."""
    x, y = xy
    es = canonical_orthogonals(spec)
    return (x + y == a
            and compatibility_violation(spec, x.comps) is None
            and compatibility_violation(spec, y.comps) is None
            and (x * es[i]).is_zero() and (y * es[j]).is_zero())


def sum_membership_check(spec: RingSpec, elements: Sequence[TupleElt]) -> CheckResult:
    """Every positive sum-of-primes decision comes with a verified splitting."""
    tag = "sum of two minimal primes"
    n = spec.rank
    checked = 0
    for a in elements:
        for i, j in combinations(range(n), 2):
            for u, v in ((i, j), (j, i)):
                ok, xy = in_sum_of_primes(spec, a, u, v)
                if ok:
                    checked += 1
                    if not verify_splitting(spec, a, u, v, xy):
                        return CheckResult("sum-split", tag, False, "splitting fails", (a, u, v))
    return CheckResult("sum-split", tag, True, f"{checked} splittings", count=checked)


def pair_independence_check(spec: RingSpec, elements: Sequence[TupleElt]) -> CheckResult:
    """For one-branching rings the sum of two minimal primes does not depend on the pair."""
    tag = "one branching ideal"
    pairs = list(combinations(range(spec.rank), 2))
    for a in elements:
        answers = {in_sum_of_primes(spec, a, i, j)[0] for i, j in pairs}
        if len(answers) != 1:
            return CheckResult("pair-independence", tag, False, "membership depends on the pair", a)
    return CheckResult("pair-independence", tag, True, f"{len(elements)} elements",
                       count=len(elements))


# --------------------------------------------------- maximal ideal branching

def max_ideal_partition(spec: RingSpec) -> tuple:
    """Leaves under the first child of the top versus all other leaves."""
    first = spec.children[spec.top][0]
    s1 = spec.below(first)
    s2 = tuple(l for l in spec.leaves if l not in s1)
    return s1, s2


def split_non_unit(spec: RingSpec, a: TupleElt):
    """Write a non-unit as a sum of two zero divisors, or return None.

    Only possible structurally when the top of the tree is the maximal ideal;
    the pieces are ``a`` restricted to either side of the leaf partition.
    """
    if not spec.top_is_max or is_unit(a):
        return None
    s1, _ = max_ideal_partition(spec)
    mask = [leaf in s1 for leaf in spec.leaves]
    y = TupleElt(spec, tuple(c if m else ValElt.zero(c.dim) for c, m in zip(a.comps, mask)))
    x = a - y
    return x, y


def zero_divisor_witness(spec: RingSpec, z: TupleElt) -> Optional[TupleElt]:
    """A nonzero canonical orthogonal killed by ``z``, if any."""
    for e in canonical_orthogonals(spec):
        if (z * e).is_zero():
            return e
    return None


def non_units(spec: RingSpec, seed: int, count: int) -> list:
    """Sampled elements pushed into the maximal ideal by removing their top residue."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = sample(spec, rng)
        if rng.random() < 0.3:
            a = kill_component(spec, a, rng.randrange(spec.rank))
        if is_unit(a):
            r = residue_at(spec, a, spec.top)
            if spec.top_is_max:
                a = a - lift_from_node(spec, spec.top, r)
            else:
                a = a - constant(spec, r.residue(r.dim).to_scalar())
        out.append(a)
    return out


def max_ideal_branching_check(spec: RingSpec, trials: int = 1000, seed: int = 0,
                              elements: Optional[Sequence[TupleElt]] = None) -> CheckResult:
    """Maximal ideal branching, checked through splittings of non-units.

    When the top is the maximal ideal every sampled non-unit must split as a
    sum of two zero divisors along the leaf partition.  Otherwise the verdict
    is structural only: showing that no splitting exists for some unit would
    need a search over the whole ring, which is not attempted.
    """
    tag = "maximal ideal branching"
    if spec.rank < 2:
        return CheckResult("max-branching", tag, True, "rank 1: not applicable")
    if not spec.top_is_max:
        return CheckResult("max-branching", tag, True,
                           f"not branching (top {spec.top} at level {spec.levels[spec.top]})",
                           witness=False)
    if elements is None:
        elements = non_units(spec, seed, trials)
    s1, s2 = max_ideal_partition(spec)
    for a in elements:
        parts = split_non_unit(spec, a)
        if parts is None:
            return CheckResult("max-branching", tag, False, "non-unit did not split", a)
        x, y = parts
        if x + y != a:
            return CheckResult("max-branching", tag, False, "pieces do not sum back", a)
        for z in (x, y):
            if compatibility_violation(spec, z.comps) is not None:
                return CheckResult("max-branching", tag, False, "piece is not a ring element", a)
            if zero_divisor_witness(spec, z) is None:
                return CheckResult("max-branching", tag, False, "piece is not a zero divisor", a)
    detail = f"branching; S1={{{','.join(s1)}}} S2={{{','.join(s2)}}}; {len(elements)} non-units"
    return CheckResult("max-branching", tag, True, detail, witness=(s1, s2), count=len(elements))


# ----------------------------------------------------------- classification

TYPE_N1 = "type(n,1)"
TYPE_N2 = "type(n,2)"
OTHER = "other"


def classify_type(spec: RingSpec) -> str:
    if spec.rank < 2:
        raise SpecError("type classification needs rank >= 2")
    if len(spec.internal) != 1:
        return OTHER
    return TYPE_N1 if spec.levels[spec.top] == 0 else TYPE_N2


def type_label(spec: RingSpec) -> str:
    t = classify_type(spec)
    if t == OTHER:
        return OTHER
    return f"({spec.rank},{1 if t == TYPE_N1 else 2})"


def one_branching_cross_check(spec: RingSpec) -> CheckResult:
    """Compare the classification with the sum-of-primes ideals of the e_i.

    The ideals Ann(e_i) + Ann(e_j) are told apart by the separating family of
    :func:`prime_witnesses`; one-branching means they all coincide.
    """
    tag = "one branching ideal"
    n = spec.rank
    family = prime_witnesses(spec)
    profiles = set()
    for i, j in combinations(range(n), 2):
        profiles.add(tuple(in_sum_of_primes(spec, w, i, j)[0] for w in family))
    one_branch = len(profiles) == 1
    expected = classify_type(spec) != OTHER
    ok = one_branch == expected
    verdict = "one" if one_branch else "several"
    return CheckResult("one-branching", tag, ok,
                       f"{len(profiles)} distinct sums of minimal primes, {verdict} as the tree predicts")


# ------------------------------------------------------- prime witnesses

def prime_witness(spec: RingSpec, i: int, lvl: int) -> TupleElt:
    """An element lying in the prime of level ``lvl`` on the chain of leaf i.

    For ``lvl < d_i`` the component at leaf i is the monomial with a single 1
    in coordinate ``d_i - lvl``; other leaves get the section lift.  For the
    minimal prime (``lvl == d_i``) it is the sum of the other e_k.  The family
    over all (i, lvl) separates any two distinct primes of the ring.
    """
    d = spec.depths[i]
    if lvl == d:
        es = canonical_orthogonals(spec)
        out = zero(spec)
        for k, e in enumerate(es):
            if k != i:
                out = out + e
        return out
    exp = [0] * d
    exp[d - lvl - 1] = 1
    return lift_from_leaf(spec, i, ValElt.monomial(exp))


def prime_witnesses(spec: RingSpec) -> list:
    out = []
    for i, d in enumerate(spec.depths):
        for lvl in range(d + 1):
            out.append(prime_witness(spec, i, lvl))
    return out


def empirical_poset(ids: Sequence[str], members: Sequence[Callable], elements: Sequence[TupleElt]) -> RootPoset:
    """Inclusion order between ideals given only by membership predicates.

    ``P <= Q`` is declared unless some element lies in P but not in Q; with a
    separating family this recovers the true inclusion order.
    """
    table = [[bool(m(a)) for a in elements] for m in members]
    rel = []
    for p, rp in zip(ids, table):
        for q, rq in zip(ids, table):
            if p != q and all(y or not x for x, y in zip(rp, rq)):
                rel.append((p, q))
    return RootPoset(list(ids), rel)


def empirical_brspec(spec: RingSpec, extra: Sequence[TupleElt] = ()) -> tuple:
    """BrSpec recomputed from the orthogonal family alone.

    Minimal primes are the annihilators of the e_i, branching ideals are the
    distinct sums Ann(e_i) + Ann(e_j) that are not minimal, and the maximal
    ideal is the set of non-units.  Returns ``(poset, labels)`` where labels
    maps each ideal id to a description.
    """
    es = canonical_orthogonals(spec)
    n = spec.rank
    family = list(prime_witnesses(spec)) + list(extra)
    ids, members, labels = [], [], {}
    seen: dict = {}

    def add(name, pred, label):
        profile = tuple(bool(pred(w)) for w in family)
        if profile in seen:
            return
        seen[profile] = name
        ids.append(name)
        members.append(pred)
        labels[name] = label

    for i in range(n):
        add(f"Ann(e{i + 1})", (lambda a, e=es[i]: (a * e).is_zero()), f"Ann(e{i + 1})")
    for i, j in combinations(range(n), 2):
        add(f"Ann(e{i + 1})+Ann(e{j + 1})",
            (lambda a, i=i, j=j: in_sum_of_primes(spec, a, i, j)[0]),
            f"Ann(e{i + 1})+Ann(e{j + 1})")
    add("max", lambda a: not is_unit(a), "non-units")
    return empirical_poset(ids, members, family), labels


# ------------------------------------------------------------- Goursat

def goursat_verify(spec: RingSpec, trials: int = 1000, seed: int = 0) -> CheckResult:
    """Goursat decomposition of a two-leaf fibre product, checked on samples.

    With H_i the kernel of the projection to leaf i: H_1 and H_2 meet in 0,
    ``a`` lies in H_1 + H_2 exactly when its residue at the top vanishes, and
    the cofactor map ``a mod (H_1 + H_2) -> p_1(a) mod I`` is well defined and
    injective, I-membership being residue vanishing at the top level.
    """
    tag = "Goursat decomposition"
    if spec.rank != 2:
        raise SpecError("goursat_verify needs exactly two leaves")
    rng = random.Random(seed)
    top = spec.top
    c = spec.levels[top]
    d1 = spec.depths[0]
    elements = sample_elements(spec, seed, max(4, trials // 2))

    def h(k, a):  # push a into H_k (zero at leaf k)
        return kill_component(spec, a, k)

    def in_H(k, a):
        return a.comps[k].is_zero()

    def split(a):
        ok, xy = in_sum_of_primes(spec, a, 1, 0)
        if not ok:
            return None
        x, y = xy  # x is zero at leaf 1, y at leaf 0
        return y, x  # (H_1 part, H_2 part): first is zero at leaf 0

    def cofactor(a):
        return a.comps[0].residue(d1 - c)

    for a in elements:
        h1, h2 = h(0, a), h(1, rng.choice(elements))
        if not (in_H(0, h1) and in_H(1, h2)):
            return CheckResult("goursat", tag, False, "kernel sampler broke", a)
        if compatibility_violation(spec, h1.comps) or compatibility_violation(spec, h2.comps):
            return CheckResult("goursat", tag, False, "kernel element invalid", a)
        meet = h1 * h2
        if not (in_H(0, meet) and in_H(1, meet)) or not meet.is_zero():
            return CheckResult("goursat", tag, False, "H_1 and H_2 meet outside 0", (h1, h2))
        s = h1 + h2
        if not residue_at(spec, s, top).is_zero():
            return CheckResult("goursat", tag, False, "sum of kernels has nonzero residue", s)
        parts = split(s)
        if parts is None or parts[0] + parts[1] != s or not in_H(0, parts[0]) or not in_H(1, parts[1]):
            return CheckResult("goursat", tag, False, "sum of kernels did not re-split", s)
        in_sum = residue_at(spec, a, top).is_zero()
        parts = split(a)
        if in_sum != (parts is not None):
            return CheckResult("goursat", tag, False, "membership criterion disagrees", a)
        if parts is not None:
            p1, p2 = parts
            if p1 + p2 != a or not in_H(0, p1) or not in_H(1, p2):
                return CheckResult("goursat", tag, False, "splitting is wrong", a)
            for p in parts:
                if compatibility_violation(spec, p.comps) is not None:
                    return CheckResult("goursat", tag, False, "splitting piece invalid", a)
        else:
            naive = TupleElt(spec, (a.comps[0], ValElt.zero(spec.depths[1])))
            if compatibility_violation(spec, naive.comps) is None:
                return CheckResult("goursat", tag, False, "unit-residue element split anyway", a)
        b_same = a + s
        b_rand = rng.choice(elements)
        for b in (b_same, b_rand):
            same_class = residue_at(spec, a - b, top).is_zero()
            same_cof = (cofactor(a) - cofactor(b)).is_zero()
            if same_class != same_cof:
                return CheckResult("goursat", tag, False, "cofactor map is not a bijection on classes", (a, b))
        if not (cofactor(a) - cofactor(b_same)).is_zero():
            return CheckResult("goursat", tag, False, "cofactor map not well defined", (a, b_same))
    return CheckResult("goursat", tag, True, f"{len(elements)} elements", count=len(elements))


# ---------------------------------------------------------- automorphisms

@dataclass
class LeafAutomorphism:
    accepted: bool
    reason: str = ""
    leaf_map: dict = field(default_factory=dict)
    node_map: dict = field(default_factory=dict)
    spec: Optional[RingSpec] = None

    def __call__(self, a: TupleElt) -> TupleElt:
        if not self.accepted:
            raise ValueError(f"not an automorphism: {self.reason}")
        spec = self.spec
        comps = [None] * spec.rank
        for leaf, c in zip(spec.leaves, a.comps):
            comps[spec.index[self.leaf_map[leaf]]] = c
        return TupleElt(spec, tuple(comps))

    def moved_nodes(self) -> list:
        return [(a, b) for a, b in self.node_map.items() if a != b]


def _as_leaf_map(spec: RingSpec, sigma) -> dict:
    if isinstance(sigma, dict):
        m = {spec.leaves[spec.leaf_index(k)]: spec.leaves[spec.leaf_index(v)] for k, v in sigma.items()}
        for leaf in spec.leaves:
            m.setdefault(leaf, leaf)
        return m
    sigma = list(sigma)
    if sorted(sigma) != list(range(spec.rank)):
        raise ValueError("permutation must list every leaf index once")
    return {spec.leaves[i]: spec.leaves[sigma[i]] for i in range(spec.rank)}


def leaf_automorphism(spec: RingSpec, sigma) -> LeafAutomorphism:
    """Accept a leaf permutation iff it extends to a level-preserving tree automorphism."""
    try:
        m = _as_leaf_map(spec, sigma)
    except (ValueError, SpecError) as exc:
        return LeafAutomorphism(False, str(exc))
    if sorted(m.values()) != sorted(spec.leaves):
        return LeafAutomorphism(False, "not a permutation of the leaves")
    for leaf, img in m.items():
        if spec.levels[leaf] != spec.levels[img]:
            return LeafAutomorphism(False, f"{leaf} and {img} have different depths")
    by_set = {frozenset(spec.below(x)): x for x in spec.tree.elements}
    node_map = {}
    for x in spec.tree.elements:
        image = frozenset(m[l] for l in spec.below(x))
        y = by_set.get(image)
        if y is None:
            return LeafAutomorphism(False, f"image of the leaves under {x} is not the leaf set of a node")
        if spec.levels[x] != spec.levels[y]:
            return LeafAutomorphism(False, f"{x} and {y} have different levels")
        node_map[x] = y
    if spec.max_id not in node_map:
        node_map[spec.max_id] = spec.max_id
    return LeafAutomorphism(True, "", m, node_map, spec)


def automorphism_check(spec: RingSpec, auto: LeafAutomorphism, trials: int = 200,
                       seed: int = 0) -> CheckResult:
    """The accepted permutation is a ring automorphism on samples."""
    tag = "leaf automorphism"
    if not auto.accepted:
        return CheckResult("automorphism", tag, False, auto.reason)
    elems = sample_elements(spec, seed, trials)
    rng = random.Random(seed + 7)
    inverse = {v: k for k, v in auto.leaf_map.items()}
    inv = LeafAutomorphism(True, "", inverse, {}, spec)
    if auto(one(spec)) != one(spec):
        return CheckResult("automorphism", tag, False, "1 not fixed")
    for a in elems:
        b = rng.choice(elems)
        fa, fb = auto(a), auto(b)
        if compatibility_violation(spec, fa.comps) is not None:
            return CheckResult("automorphism", tag, False, "image is not a ring element", a)
        if auto(a + b) != fa + fb or auto(a * b) != fa * fb:
            return CheckResult("automorphism", tag, False, "not a homomorphism", (a, b))
        if inv(fa) != a:
            return CheckResult("automorphism", tag, False, "not invertible", a)
        for x, y in auto.node_map.items():
            if x == spec.max_id:
                continue
            if residue_at(spec, a, x).is_zero() != residue_at(spec, fa, y).is_zero():
                return CheckResult("automorphism", tag, False, f"prime {x} not carried to {y}", a)
    moved = ", ".join(f"{x}->{y}" for x, y in auto.moved_nodes())
    return CheckResult("automorphism", tag, True, f"moves {moved or 'nothing'}", auto.node_map,
                       count=len(elems))


# ------------------------------------------------------------- embeddings

@dataclass
class RingEmbedding:
    source: RingSpec
    target: RingSpec
    component_maps: tuple  # one callable per leaf of the source, indexed like the target

    def __call__(self, a: TupleElt) -> TupleElt:
        return TupleElt(self.target, tuple(f(c) for f, c in zip(self.component_maps, a.comps)))


def homogenize(spec: RingSpec) -> tuple:
    """Pad every leaf to the largest depth, keeping node levels.

    A shallow leaf value is sent through the canonical section (new leading
    zero coordinates), which keeps the residue at every node unchanged and so
    preserves compatibility.
    """
    dmax = max(spec.depths)
    levels = dict(spec.levels)
    for leaf in spec.leaves:
        levels[leaf] = dmax
    target = RingSpec(spec.tree, levels, max_id=spec.max_id, name=(spec.name + "-homog") if spec.name else "")
    maps = tuple((lambda v, k=dmax - d: v.section(k)) for d in spec.depths)
    return target, RingEmbedding(spec, target, maps)


def saturate_to_type_n1(spec: RingSpec) -> tuple:
    """Forget the internal gluing: same leaves under a single top at level 0."""
    if spec.rank < 2:
        raise SpecError("saturation needs rank >= 2")
    top = spec.max_id
    levels = {leaf: spec.levels[leaf] for leaf in spec.leaves}
    levels[top] = 0
    tree = RootPoset(list(spec.leaves) + [top], [(leaf, top) for leaf in spec.leaves])
    target = RingSpec(tree, levels, max_id=top, name=(spec.name + "-sat") if spec.name else "")
    maps = tuple((lambda v: v) for _ in spec.leaves)
    return target, RingEmbedding(spec, target, maps)


def embedding_check(emb: RingEmbedding, trials: int = 200, seed: int = 0, local: bool = False,
                    name: str = "embedding") -> CheckResult:
    """Injective ring homomorphism on samples; optionally local (units detected both ways)."""
    tag = "ring embedding"
    src, tgt = emb.source, emb.target
    elems = sample_elements(src, seed, trials)
    rng = random.Random(seed + 3)
    if emb(one(src)) != one(tgt):
        return CheckResult(name, tag, False, "1 not preserved")
    es_src = canonical_orthogonals(src)
    es_img = [emb(e) for e in es_src]
    for i, j in combinations(range(src.rank), 2):
        if not (es_img[i] * es_img[j]).is_zero():
            return CheckResult(name, tag, False, "orthogonality lost", (i, j))
    for a in elems:
        b = rng.choice(elems)
        fa, fb = emb(a), emb(b)
        if compatibility_violation(tgt, fa.comps) is not None:
            return CheckResult(name, tag, False, "image is not a ring element", a)
        if emb(a + b) != fa + fb or emb(a * b) != fa * fb:
            return CheckResult(name, tag, False, "not a homomorphism", (a, b))
        if fa.is_zero() != a.is_zero():
            return CheckResult(name, tag, False, "not injective", a)
        if local and is_unit(a) != is_unit(fa):
            return CheckResult(name, tag, False, "not local", a)
        for x, y in zip(a.comps, fa.comps):
            if not x.is_zero() and len(y.val()) == len(x.val()) and y.val() != x.val():
                return CheckResult(name, tag, False, "valuation not preserved", a)
    return CheckResult(name, tag, True, f"{len(elems)} elements", count=len(elems))


# ------------------------------------------------------------ full report

def analyze(spec: RingSpec, config: Optional[AnalysisConfig] = None) -> AnalysisReport:
    """Run every structural check that applies to ``spec``."""
    cfg = config or AnalysisConfig()
    log = CheckLog()
    elements = sample_elements(spec, cfg.seed, cfg.trials, cfg.size)
    log.add(rank_check(spec, elements=elements))
    log.add(sv_check(spec, cfg.trials, cfg.seed))
    bp = brspec(spec)
    chk = validate_root_system(bp, require_top=True)
    log.add(CheckResult("brspec-root", "branching spectrum is a reduced root",
                        bool(chk) and is_reduced(bp), chk.message))
    if spec.rank >= 2:
        nb = len(branching_ideals(spec))
        log.add(CheckResult("branching-bound", "at most n-1 branching ideals", nb <= spec.rank - 1,
                            f"{nb} <= {spec.rank - 1}"))
        log.add(sum_membership_check(spec, elements[: max(50, cfg.trials // 10)]))
        emp, _ = empirical_brspec(spec)
        iso = _iso(emp, bp)
        log.add(CheckResult("brspec-elements", "branching spectrum from orthogonals",
                            iso, "matches tree" if iso else "differs from tree"))
        log.add(one_branching_cross_check(spec))
        if classify_type(spec) != OTHER:
            log.add(pair_independence_check(spec, elements))
        log.add(max_ideal_branching_check(spec, cfg.trials, cfg.seed))
        if spec.rank == 2:
            log.add(goursat_verify(spec, cfg.trials, cfg.seed))
        ring_type = type_label(spec)
    else:
        ring_type = OTHER
    return AnalysisReport(spec.rank, branching_ideals(spec), bp, ring_type, log)


def _iso(P: RootPoset, Q: RootPoset) -> bool:
    from .rootsys import poset_iso
    return poset_iso(P, Q) is not None


def summary_line(spec: RingSpec, report: AnalysisReport) -> str:
    parts = [f"rank={report.rank}"]
    sv = next((r for r in report.check_log.results if r.name == "sv"), None)
    if sv is not None:
        parts.append(f"SV={'pass' if sv.passed else 'FAIL'}")
    nb = len(report.branching_nodes)
    br = f"branching={nb}"
    if nb == 1:
        q = report.branching_nodes[0]
        # "m" always names the maximal ideal here, whatever its id in the spec
        br += " (=m)" if q == spec.max_id else f" ({q} below m)"
    parts.append(br)
    parts.append(f"type={report.ring_type}")
    return "; ".join(parts)
