"""Finite-rank local SV-rings presented as compatible tuples over a root tree.

A :class:`RingSpec` is a reduced root tree whose minimal elements (leaves) are
the factors V_(d_i) and whose internal nodes q carry a level c(q): the factors
below q are glued over the common quotient V_(c(q)).  An element is a tuple of
one :class:`~svrings.hahn.ValElt` per leaf whose residues agree at every join.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

from .hahn import ValElt, random_in_prime, random_valelt
from .rootsys import RootPoset, join, validate_root_system


class SpecError(ValueError):
    pass


class ComponentError(ValueError):
    pass


class CompatibilityError(ValueError):
    def __init__(self, pair: tuple, node: str, message: str):
        super().__init__(message)
        self.pair = pair
        self.node = node


class RingSpec:
    """Gluing data of a local SV-ring of finite rank.

    ``levels`` maps every tree node to its level; for a leaf that is the
    depth d_i of its factor.  When the top has level 0 it *is* the maximal
    ideal, otherwise the maximal ideal sits above it under the id ``max_id``.
    """

    def __init__(self, tree: RootPoset, levels: dict, max_id: str = "m", name: str = ""):
        self.tree = tree
        self.levels = dict(levels)
        self.name = name
        chk = validate_root_system(tree, require_top=True)
        if not chk:
            raise SpecError(f"tree is not a finite root: {chk.message}")
        missing = [x for x in tree.elements if x not in self.levels]
        if missing:
            raise SpecError(f"no level given for nodes {missing}")
        extra = [x for x in self.levels if x not in tree.elements]
        if extra:
            raise SpecError(f"levels given for unknown nodes {extra}")
        self.leaves = tuple(tree.minimal())
        self.top = tree.top()
        n = len(self.leaves)
        covers = tree.covers()
        self.parent = {a: b for a, b in covers}
        self.children = {x: [a for a, b in covers if b == x] for x in tree.elements}
        for x in tree.elements:
            lv = self.levels[x]
            if not isinstance(lv, int) or lv < 0:
                raise SpecError(f"level of {x} must be a non-negative integer")
        for leaf in self.leaves:
            # depth 0 is allowed only for the field itself (a single leaf)
            if self.levels[leaf] < 1 and n >= 2:
                raise SpecError(f"leaf {leaf} must have depth >= 1")
        if n == 1:
            if len(tree) != 1:
                raise SpecError("a rank-1 spec is a single leaf")
        else:
            for x in tree.elements:
                if x not in self.leaves and len(self.children[x]) < 2:
                    raise SpecError(f"internal node {x} must have at least two children")
        for a, b in covers:
            if not self.levels[a] > self.levels[b]:
                raise SpecError(f"levels must strictly decrease upward: {a} ({self.levels[a]}) "
                                f"below {b} ({self.levels[b]})")
        self.top_is_max = self.levels[self.top] == 0
        if self.top_is_max:
            self.max_id = self.top
        else:
            if max_id in tree.elements:
                raise SpecError(f"maximal-ideal id {max_id!r} clashes with a tree node")
            self.max_id = max_id
        self.index = {leaf: k for k, leaf in enumerate(self.leaves)}
        self.depths = tuple(self.levels[leaf] for leaf in self.leaves)
        self.internal = tuple(x for x in tree.elements if x not in self.leaves)
        self.leaves_below = {x: tuple(l for l in self.leaves if tree.leq(l, x)) for x in tree.elements}
        self._join = {}
        for i, j in combinations(range(n), 2):
            q = join(tree, self.leaves[i], self.leaves[j])
            self._join[(i, j)] = self._join[(j, i)] = q

    @property
    def rank(self) -> int:
        return len(self.leaves)

    def level(self, node: str) -> int:
        if node == self.max_id:
            return 0
        return self.levels[node]

    def join_of(self, i: int, j: int) -> str:
        return self._join[(i, j)] if i != j else self.leaves[i]

    def nodes(self) -> tuple:
        """Tree nodes plus the maximal ideal when it is not the top."""
        return self.tree.elements if self.top_is_max else self.tree.elements + (self.max_id,)

    def leaf_index(self, leaf: Union[str, int]) -> int:
        if isinstance(leaf, int):
            if not 0 <= leaf < self.rank:
                raise SpecError(f"leaf index {leaf} out of range")
            return leaf
        if leaf not in self.index:
            raise SpecError(f"unknown leaf {leaf!r}")
        return self.index[leaf]

    def below(self, node: str) -> tuple:
        if node == self.max_id:
            return self.leaves
        if node not in self.leaves_below:
            raise SpecError(f"unknown node {node!r}")
        return self.leaves_below[node]

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, RingSpec) and self.tree.elements == other.tree.elements
                and set(self.tree.covers()) == set(other.tree.covers())
                and self.levels == other.levels and self.max_id == other.max_id)

    def __hash__(self):
        return hash((self.tree.elements, tuple(sorted(self.levels.items()))))

    def __repr__(self):
        return f"RingSpec({self.name or ''} leaves={self.leaves}, levels={self.levels})"


def make_spec(covers: Sequence[tuple], levels: dict, max_id: str = "m", name: str = "") -> RingSpec:
    """Convenience constructor from cover pairs and a level map (leaves first in ``levels``)."""
    return RingSpec(RootPoset(list(levels), covers), levels, max_id=max_id, name=name)


# ------------------------------------------------------------- elements

class TupleElt:
    """An element of the ring: one component per leaf, in ``spec.leaves`` order."""

    __slots__ = ("spec", "comps")

    def __init__(self, spec: RingSpec, comps: tuple):
        self.spec = spec
        self.comps = comps

    def _check(self, other):
        if not isinstance(other, TupleElt):
            return NotImplemented
        if other.spec is not self.spec and other.spec != self.spec:
            raise ValueError("elements of different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        return TupleElt(self.spec, tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        other = self._check(other)
        return TupleElt(self.spec, tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __mul__(self, other):
        other = self._check(other)
        return TupleElt(self.spec, tuple(a * b for a, b in zip(self.comps, other.comps)))

    def __neg__(self):
        return TupleElt(self.spec, tuple(-a for a in self.comps))

    def __eq__(self, other):
        if not isinstance(other, TupleElt):
            return NotImplemented
        return self.spec == other.spec and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def __getitem__(self, leaf):
        return self.comps[self.spec.leaf_index(leaf)]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.comps) + ")"


def compatibility_violation(spec: RingSpec, comps: Sequence[ValElt]) -> Optional[tuple]:
    """First leaf pair ``(i, j, node)`` whose residues at their join differ, else None."""
    n = spec.rank
    cache: dict = {}

    def res(k, c):
        r = cache.get((k, c))
        if r is None:
            r = cache[(k, c)] = comps[k].residue(spec.depths[k] - c)
        return r

    for i, j in combinations(range(n), 2):
        q = spec.join_of(i, j)
        c = spec.levels[q]
        if res(i, c) != res(j, c):
            return (i, j, q)
    return None


def make_element(spec: RingSpec, comps) -> TupleElt:
    """Validate components and return the ring element."""
    if isinstance(comps, dict):
        unknown = [k for k in comps if k not in spec.index]
        if unknown:
            raise ComponentError(f"unknown leaves {unknown}")
        comps = [comps.get(leaf, ValElt.zero(d)) for leaf, d in zip(spec.leaves, spec.depths)]
    comps = tuple(comps)
    if len(comps) != spec.rank:
        raise ComponentError(f"expected {spec.rank} components, got {len(comps)}")
    for leaf, d, a in zip(spec.leaves, spec.depths, comps):
        if not isinstance(a, ValElt) or a.dim != d:
            raise ComponentError(f"component at {leaf} must be an element of K_{d}")
        if not a.in_ring():
            raise ComponentError(f"component at {leaf} has negative value {a.val()}")
    bad = compatibility_violation(spec, comps)
    if bad is not None:
        i, j, q = bad
        raise CompatibilityError((spec.leaves[i], spec.leaves[j]), q,
                                 f"residues of {spec.leaves[i]} and {spec.leaves[j]} differ at {q}")
    return TupleElt(spec, comps)


def is_valid(spec: RingSpec, comps) -> bool:
    try:
        make_element(spec, comps)
    except (ComponentError, CompatibilityError):
        return False
    return True


def zero(spec: RingSpec) -> TupleElt:
    return TupleElt(spec, tuple(ValElt.zero(d) for d in spec.depths))


def one(spec: RingSpec) -> TupleElt:
    return TupleElt(spec, tuple(ValElt.one(d) for d in spec.depths))


def constant(spec: RingSpec, c) -> TupleElt:
    return TupleElt(spec, tuple(ValElt.constant(c, d) for d in spec.depths))


def canonical_orthogonals(spec: RingSpec) -> list[TupleElt]:
    """One-hot tuples with ``x^(1,0,...,0)`` at leaf i (``1`` for the field case)."""
    out = []
    for i in range(spec.rank):
        comps = [ValElt.zero(d) for d in spec.depths]
        d = spec.depths[i]
        comps[i] = ValElt.monomial((1,) + (0,) * (d - 1)) if d else ValElt.one(0)
        out.append(TupleElt(spec, tuple(comps)))
    return out


def is_unit(a: TupleElt) -> bool:
    flags = [c.is_unit() for c in a.comps]
    if any(flags) and not all(flags):
        raise AssertionError(f"element mixes unit and non-unit components: {a}")
    return all(flags)


def in_max_ideal(a: TupleElt) -> bool:
    return not is_unit(a)


def project(spec: RingSpec, a: TupleElt, leaf) -> ValElt:
    return a.comps[spec.leaf_index(leaf)]


def residue_at(spec: RingSpec, a: TupleElt, node: str) -> ValElt:
    """Common residue of ``a`` in V_(c(node)); the component itself at a leaf."""
    leaf = spec.below(node)[0]
    i = spec.index[leaf]
    return a.comps[i].residue(spec.depths[i] - spec.level(node))


def in_prime(spec: RingSpec, a: TupleElt, node: str) -> bool:
    """Membership in the prime ideal represented by ``node``."""
    if node == spec.max_id:
        return all(not c.is_unit() for c in a.comps)
    if node not in spec.leaves_below:
        raise SpecError(f"unknown node {node!r}")
    return residue_at(spec, a, node).is_zero()


def in_prime_at(spec: RingSpec, a: TupleElt, leaf, lvl: int) -> bool:
    """Membership in the prime of level ``lvl`` on the chain of ``leaf``."""
    i = spec.leaf_index(leaf)
    return a.comps[i].residue(spec.depths[i] - lvl).is_zero()


def lift_from_leaf(spec: RingSpec, leaf, value: ValElt) -> TupleElt:
    """A ring element with component ``value`` at ``leaf``, completed by sections."""
    i = spec.leaf_index(leaf)
    di = spec.depths[i]
    if value.dim != di:
        raise ComponentError(f"value must live in K_{di}")
    cache: dict = {}
    comps = []
    for j, dj in enumerate(spec.depths):
        if j == i:
            comps.append(value)
            continue
        q = spec.join_of(i, j)
        c = spec.levels[q]
        r = cache.get(q)
        if r is None:
            r = cache[q] = value.residue(di - c)
        comps.append(r.section(dj - c))
    return TupleElt(spec, tuple(comps))


def lift_from_node(spec: RingSpec, node: str, value: ValElt) -> TupleElt:
    """A ring element whose common residue at ``node`` is ``value``."""
    c = spec.level(node)
    if value.dim != c:
        raise ComponentError(f"value must live in K_{c}")
    return TupleElt(spec, tuple(value.section(d - c) for d in spec.depths))


def kill_component(spec: RingSpec, a: TupleElt, leaf) -> TupleElt:
    """``a`` minus the section lift of its own component: zero at ``leaf``."""
    i = spec.leaf_index(leaf)
    return a - lift_from_leaf(spec, i, a.comps[i])


# --------------------------------------------------------------- sampling

@dataclass
class SampleConfig:
    trials: int = 1000
    seed: int = 0
    size: int = 2
    zero_pattern_prob: float = 0.3


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


_SMALL_UNITS = (1, 2, 3, -1, -2, 5)


def _node_value(rng, dim: int, size: int) -> ValElt:
    if size == 0:
        return ValElt.constant(rng.choice(_SMALL_UNITS), dim)
    if rng.random() < 0.25:
        # non-unit cofactor value, so samples reach the maximal ideal
        return ValElt.zero(dim) if dim == 0 else random_in_prime(rng, dim, dim, max_terms=size)
    return random_valelt(rng, dim, in_ring=True, max_terms=size)


def sample(spec: RingSpec, seed=0, size: int = 2) -> TupleElt:
    """Draw a random element top-down: lift the cofactor value, then add kernel noise."""
    rng = _rng(seed)
    values: dict = {}
    top = spec.top
    values[top] = _node_value(rng, spec.levels[top], size)
    order = sorted(spec.tree.elements, key=lambda x: len(spec.tree.up(x)))
    for v in order:
        if v == top:
            continue
        p = spec.parent[v]
        gap = spec.levels[v] - spec.levels[p]
        val = values[p].section(gap)
        if size > 0 and rng.random() < 0.8:
            # kernel noise over the same denominator, so sizes stay bounded down the tree
            noise = random_in_prime(rng, spec.levels[v], gap, max_terms=max(1, size - 1), fraction_prob=0)
            val = val + ValElt.make(noise.num, val.den, val.dim)
        values[v] = val
    return TupleElt(spec, tuple(values[leaf] for leaf in spec.leaves))


def sample_elements(spec: RingSpec, seed=0, count: int = 100, size: int = 2,
                    zero_pattern_prob: float = 0.3) -> list[TupleElt]:
    """A seeded corpus mixing random draws, zero-pattern elements and boundary cases."""
    rng = _rng(seed)
    out = boundary_elements(spec)
    while len(out) < count:
        a = sample(spec, rng, size)
        if spec.rank > 1 and rng.random() < zero_pattern_prob:
            for _ in range(rng.randint(1, spec.rank - 1)):
                a = kill_component(spec, a, rng.randrange(spec.rank))
        out.append(a)
    return out[:count]


def boundary_elements(spec: RingSpec) -> list[TupleElt]:
    es = canonical_orthogonals(spec) if spec.rank >= 1 else []
    out = [zero(spec), one(spec)] + es
    if spec.rank >= 2:
        out.append(es[0] + es[1])
    top_dim = spec.levels[spec.top]
    unit = ValElt.one(top_dim) + (ValElt.monomial((1,) + (0,) * (top_dim - 1)) if top_dim else 0)
    out.append(lift_from_node(spec, spec.top, unit))
    return out
