"""Named ring specs and the generated corpus used by the property suites.

The corpus enumerates every reduced root tree with 2 to 4 leaves together with
every admissible labelling by levels (leaf depths at most 3), up to
isomorphism, and then keeps a deterministic stratified selection so that each
tree shape and each position of the maximal ideal is represented.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Optional

from .rootsys import RootPoset
from .svring import RingSpec, make_spec


# ------------------------------------------------------------ named specs

def fibre_square(d: int = 1, c: int = 0, name: str = "") -> RingSpec:
    """Two leaves of depth d glued over V_c (c = 0 gives V x_k V)."""
    levels = {"p1": d, "p2": d, "q": c}
    return make_spec([("p1", "q"), ("p2", "q")], levels, name=name or f"square-d{d}-c{c}")


def star_spec(n: int, d: int = 1, c: int = 0, name: str = "") -> RingSpec:
    """n leaves of depth d all glued over V_c."""
    leaves = [f"p{i}" for i in range(1, n + 1)]
    levels = {p: d for p in leaves}
    levels["q"] = c
    return make_spec([(p, "q") for p in leaves], levels, name=name or f"star{n}-d{d}-c{c}")


def rank4_two_joins() -> RingSpec:
    """Four depth-2 leaves glued in pairs at level 1, the pairs glued at level 0.

    Spectrum: p1, p2 below q1; p3, p4 below q2; q1, q2 below the maximal ideal
    m.  It has rank 4 and three branching ideals, and swapping the two pairs
    is an automorphism.
    """
    levels = {"p1": 2, "p2": 2, "p3": 2, "p4": 2, "q1": 1, "q2": 1, "m": 0}
    covers = [("p1", "q1"), ("p2", "q1"), ("p3", "q2"), ("p4", "q2"), ("q1", "m"), ("q2", "m")]
    return make_spec(covers, levels, name="rank4-two-joins")


def mixed_depth_square() -> RingSpec:
    """A depth-1 leaf and a depth-2 leaf glued over the residue field."""
    return make_spec([("p1", "q"), ("p2", "q")], {"p1": 1, "p2": 2, "q": 0}, name="mixed-depth")


def bare_valuation_ring(d: int = 2) -> RingSpec:
    return make_spec([], {"p1": d}, max_id="m", name=f"bare-d{d}")


def three_branch_rank4() -> RingSpec:
    """A rank-4 caterpillar with three nested branching ideals."""
    levels = {"p1": 3, "p2": 3, "p3": 3, "p4": 3, "q1": 2, "q2": 1, "q3": 0}
    covers = [("p1", "q1"), ("p2", "q1"), ("q1", "q2"), ("p3", "q2"), ("q2", "q3"), ("p4", "q3")]
    return make_spec(covers, levels, name="rank4-nested")


# ---------------------------------------------------------- enumeration

def _reduced_shapes(max_leaves: int) -> list:
    """Reduced rooted trees (every internal node has >= 2 children) as nested tuples.

    A leaf is ``()``; an internal node is the sorted tuple of its children.
    """
    by_leaves: dict = {1: [()]}
    for n in range(2, max_leaves + 1):
        found = set()

        def partitions(rem, max_part, acc):
            if rem == 0:
                if len(acc) >= 2:
                    yield list(acc)
                return
            for k in range(min(rem, max_part), 0, -1):
                acc.append(k)
                yield from partitions(rem - k, k, acc)
                acc.pop()

        for parts in partitions(n, n, []):
            for combo in product(*(by_leaves[k] for k in parts)):
                found.add(tuple(sorted(combo, key=repr)))
        by_leaves[n] = sorted(found, key=repr)
    return [t for n in range(2, max_leaves + 1) for t in by_leaves[n]]


def _labellings(shape, max_depth: int):
    """All level assignments, yielded as nested ``(level, children)`` tuples."""

    def walk(node, lo):
        if node == ():
            for d in range(max(lo, 1), max_depth + 1):
                yield (d, ())
            return
        for c in range(lo, max_depth):
            for kids in product(*(list(walk(ch, c + 1)) for ch in node)):
                yield (c, tuple(sorted(kids)))

    seen = set()
    for lab in walk(shape, 0):
        if lab not in seen:
            seen.add(lab)
            yield lab


def _to_spec(lab, name: str) -> RingSpec:
    """Turn a nested labelling into a spec with ids p1.. (leaves) and q1.. (joins)."""
    levels: dict = {}
    covers: list = []
    count = {"p": 0, "q": 0}

    def fresh(kind: str) -> str:
        count[kind] += 1
        return f"{kind}{count[kind]}"

    def walk(node) -> str:
        c, kids = node
        if not kids:
            nid = fresh("p")
            levels[nid] = c
            return nid
        below = [walk(k) for k in kids]
        nid = fresh("q")
        levels[nid] = c
        covers.extend((x, nid) for x in below)
        return nid

    top = walk(lab)
    if levels[top] == 0:
        # the top is the maximal ideal; call it m
        covers = [(a, "m" if b == top else b) for a, b in covers]
        levels["m"] = levels.pop(top)
    order = sorted(levels, key=lambda x: (x[0] != "p", len(x), x))
    return RingSpec(RootPoset(order, covers), {x: levels[x] for x in order}, max_id="m", name=name)


def all_specs(max_leaves: int = 4, max_depth: int = 3) -> list:
    """Every tree-model spec in range, up to isomorphism, in a fixed order."""
    out = []
    for shape in _reduced_shapes(max_leaves):
        for lab in _labellings(shape, max_depth):
            out.append(lab)
    return out


def shape_key(spec: RingSpec) -> tuple:
    """(rank, internal node count, top is maximal) used for stratification."""
    return (spec.rank, len(spec.internal), spec.top_is_max)


@dataclass
class CorpusConfig:
    seed: int = 0
    per_stratum: int = 6
    max_leaves: int = 4
    max_depth: int = 3


def generate_corpus(config: Optional[CorpusConfig] = None) -> list:
    """A deterministic stratified selection from :func:`all_specs`."""
    cfg = config or CorpusConfig()
    labs = all_specs(cfg.max_leaves, cfg.max_depth)
    strata: dict = {}
    for k, lab in enumerate(labs):
        spec = _to_spec(lab, f"gen{k:03d}")
        strata.setdefault(shape_key(spec), []).append(spec)
    rng = random.Random(cfg.seed)
    chosen = []
    for key in sorted(strata):
        group = strata[key]
        picks = sorted(rng.sample(range(len(group)), min(cfg.per_stratum, len(group))))
        chosen.extend(group[i] for i in picks)
    return chosen


def named_specs() -> list:
    return [
        fibre_square(1, 0, "square"),
        fibre_square(2, 1, "square-type22"),
        star_spec(3, 1, 0, "star3"),
        star_spec(3, 2, 1, "star3-type32"),
        mixed_depth_square(),
        rank4_two_joins(),
        three_branch_rank4(),
        bare_valuation_ring(2),
    ]
