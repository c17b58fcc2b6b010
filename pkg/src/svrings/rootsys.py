"""Finite posets, root systems and their branching data.

Elements are opaque string ids; only the order carries meaning.  The order is
given by any generating set of pairs ``(lower, upper)``; the reflexive
transitive closure and the Hasse covers are computed once at construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional


class PosetError(ValueError):
    pass


@dataclass(frozen=True)
class RootCheck:
    valid: bool
    kind: str  # "ok", "cycle", "not-chain", "no-top"
    witness: tuple = ()
    message: str = ""

    def __bool__(self):
        return self.valid


class RootPoset:
    """A finite partial order with precomputed up-sets."""

    def __init__(self, elements: Iterable[str], relations: Iterable[tuple] = ()):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise PosetError("duplicate element ids")
        index = set(self.elements)
        rel = set()
        for lo, hi in relations:
            if lo not in index or hi not in index:
                raise PosetError(f"relation ({lo}, {hi}) mentions an unknown element")
            if lo != hi:
                rel.add((lo, hi))
        self._relations = frozenset(rel)
        self.cycle = None
        self._covers = None
        up = {x: {x} for x in self.elements}
        succ = {x: [] for x in self.elements}
        for lo, hi in sorted(rel):
            succ[lo].append(hi)
        for x in self.elements:
            stack = list(succ[x])
            while stack:
                y = stack.pop()
                if y not in up[x]:
                    up[x].add(y)
                    stack.extend(succ[y])
        for x in self.elements:
            for y in up[x]:
                if y != x and x in up[y]:
                    self.cycle = (x, y)
                    break
            if self.cycle:
                break
        self._up = {x: frozenset(s) for x, s in up.items()}
        self._down = {x: frozenset(y for y in self.elements if x in self._up[y]) for x in self.elements}

    # -- basic order queries
    def leq(self, a: str, b: str) -> bool:
        return b in self._up[a]

    def lt(self, a: str, b: str) -> bool:
        return a != b and b in self._up[a]

    def up(self, a: str) -> frozenset:
        return self._up[a]

    def down(self, a: str) -> frozenset:
        return self._down[a]

    def _require_poset(self):
        if self.cycle:
            raise PosetError(f"relation has a cycle through {self.cycle[0]} and {self.cycle[1]}")

    def covers(self) -> list[tuple]:
        """Hasse covering pairs ``(lower, upper)`` in element order."""
        self._require_poset()
        if self._covers is not None:
            return list(self._covers)
        out = []
        for a in self.elements:
            for b in self.elements:
                if self.lt(a, b) and not any(self.lt(a, c) and self.lt(c, b) for c in self.elements):
                    out.append((a, b))
        self._covers = tuple(out)
        return out

    def minimal(self) -> list[str]:
        return [x for x in self.elements if len(self._down[x]) == 1]

    def maximal(self) -> list[str]:
        return [x for x in self.elements if len(self._up[x]) == 1]

    def top(self) -> Optional[str]:
        for x in self.elements:
            if len(self._down[x]) == len(self.elements):
                return x
        return None

    def rank(self) -> int:
        return len(self.minimal())

    def is_chain(self, subset: Iterable[str]) -> bool:
        s = list(subset)
        return all(self.leq(a, b) or self.leq(b, a) for a, b in combinations(s, 2))

    def subposet(self, keep: Iterable[str]) -> "RootPoset":
        keep = set(keep)
        elems = [x for x in self.elements if x in keep]
        rel = [(a, b) for a in elems for b in elems if self.lt(a, b)]
        return RootPoset(elems, rel)

    def relabel(self, mapping: dict) -> "RootPoset":
        return RootPoset([mapping[x] for x in self.elements],
                         [(mapping[a], mapping[b]) for a, b in self.covers()])

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"RootPoset({list(self.elements)}, covers={self.covers() if not self.cycle else 'cyclic'})"


def validate_root_system(P: RootPoset, require_top: bool = False) -> RootCheck:
    """Accept iff every principal up-set is a chain (and, optionally, there is a top)."""
    if P.cycle:
        return RootCheck(False, "cycle", P.cycle, "relation is not antisymmetric")
    for p in P.elements:
        ups = sorted(P.up(p), key=P.elements.index)
        for a, b in combinations(ups, 2):
            if not (P.leq(a, b) or P.leq(b, a)):
                return RootCheck(False, "not-chain", (p, a, b),
                                 f"up-set of {p} contains incomparable {a}, {b}")
    if require_top and P.top() is None:
        return RootCheck(False, "no-top", tuple(P.maximal()), "no unique top element")
    return RootCheck(True, "ok")


def _require_root(P: RootPoset) -> None:
    chk = validate_root_system(P, require_top=True)
    if not chk:
        raise PosetError(f"not a finite root: {chk.message}")


def join(P: RootPoset, a: str, b: str) -> str:
    """Least common upper bound; exists and is unique in a finite root."""
    common = P.up(a) & P.up(b)
    if not common:
        raise PosetError(f"{a} and {b} have no common upper bound")
    least = [c for c in common if all(P.leq(c, x) for x in common)]
    if len(least) != 1:
        raise PosetError(f"{a} and {b} have no least common upper bound")
    return least[0]


def branching_points(P: RootPoset) -> list[str]:
    """Elements that are the join of two elements strictly below them."""
    _require_root(P)
    out = set()
    for a, b in combinations(P.elements, 2):
        if P.leq(a, b) or P.leq(b, a):
            continue
        out.add(join(P, a, b))
    return [x for x in P.elements if x in out]


def branching_root(P: RootPoset) -> RootPoset:
    _require_root(P)
    keep = set(P.minimal()) | {P.top()} | set(branching_points(P))
    return P.subposet(keep)


def is_reduced(P: RootPoset) -> bool:
    return len(branching_root(P)) == len(P)


def poset_iso(P: RootPoset, Q: RootPoset) -> Optional[dict]:
    """Search for an order isomorphism P -> Q; returns the bijection or None."""
    if len(P) != len(Q) or P.cycle or Q.cycle:
        return None

    def sig(R, x):
        return (len(R.up(x)), len(R.down(x)))

    if sorted(sig(P, x) for x in P.elements) != sorted(sig(Q, x) for x in Q.elements):
        return None
    order = sorted(P.elements, key=lambda x: (-len(P.down(x)), P.elements.index(x)))
    cands = {x: [y for y in Q.elements if sig(Q, y) == sig(P, x)] for x in order}
    mapping: dict = {}
    used: set = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for y in cands[x]:
            if y in used:
                continue
            if all(P.leq(x, z) == Q.leq(y, mapping[z]) and P.leq(z, x) == Q.leq(mapping[z], y)
                   for z in mapping):
                mapping[x] = y
                used.add(y)
                if extend(k + 1):
                    return True
                del mapping[x]
                used.discard(y)
        return False

    if extend(0):
        return {x: mapping[x] for x in P.elements}
    return None


def to_dot(P: RootPoset, name: str = "P", labels: Optional[dict] = None) -> str:
    """Hasse diagram in DOT; edges point upward and the top is drawn uppermost."""
    lines = [f"digraph {_dot_id(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for x in P.elements:
        lab = labels.get(x, x) if labels else x
        lines.append(f"  {_dot_id(x)} [label={_dot_id(lab)}];")
    for a, b in P.covers():
        lines.append(f"  {_dot_id(a)} -> {_dot_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_id(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


# ------------------------------------------------------------ named posets

def chain(k: int, prefix: str = "c") -> RootPoset:
    ids = [f"{prefix}{i}" for i in range(k)]
    return RootPoset(ids, list(zip(ids, ids[1:])))


def vee() -> RootPoset:
    return RootPoset(["p1", "p2", "m"], [("p1", "m"), ("p2", "m")])


def star(n: int) -> RootPoset:
    ids = [f"p{i}" for i in range(1, n + 1)]
    return RootPoset(ids + ["m"], [(p, "m") for p in ids])


def two_branch_rank4() -> RootPoset:
    """Rank 4 root with two branching points under a branching top."""
    return RootPoset(
        ["p1", "p2", "p3", "p4", "q1", "q2", "m"],
        [("p1", "q1"), ("p2", "q1"), ("p3", "q2"), ("p4", "q2"), ("q1", "m"), ("q2", "m")],
    )


# ----------------------------------------------------------- enumeration

def _rooted_trees(n: int, _memo={}) -> list[tuple]:
    """Canonical unlabeled rooted trees with n nodes as nested sorted tuples."""
    if n in _memo:
        return _memo[n]
    if n == 1:
        _memo[1] = [()]
        return _memo[1]
    # a tree is a non-increasing sequence of (size, index) child trees summing to n-1
    catalog = [(s, i, t) for s in range(1, n) for i, t in enumerate(_rooted_trees(s))]
    out = []

    def build(remaining, max_key, acc):
        if remaining == 0:
            out.append(tuple(t for _, _, t in acc))
            return
        for s, i, t in catalog:
            if s > remaining or (s, i) > max_key:
                continue
            acc.append((s, i, t))
            build(remaining - s, (s, i), acc)
            acc.pop()

    build(n - 1, (n, 0), [])
    _memo[n] = out
    return out


def _tree_leaves(t: tuple) -> int:
    return 1 if not t else sum(_tree_leaves(c) for c in t)


def tree_to_poset(t: tuple) -> RootPoset:
    """Turn a nested-tuple rooted tree into a root; leaves become minimal elements."""
    elems: list = []
    rel: list = []

    def walk(node, parent):
        k = len(elems)
        nid = f"n{k}"
        elems.append(nid)
        if parent is not None:
            rel.append((nid, parent))
        for c in node:
            walk(c, nid)

    walk(t, None)
    return RootPoset(elems, rel)


def enumerate_roots(max_size: int, max_minima: Optional[int] = None) -> list[RootPoset]:
    """All finite roots up to isomorphism with at most ``max_size`` elements."""
    out = []
    for n in range(1, max_size + 1):
        for t in _rooted_trees(n):
            if max_minima is None or _tree_leaves(t) <= max_minima:
                out.append(tree_to_poset(t))
    return out
