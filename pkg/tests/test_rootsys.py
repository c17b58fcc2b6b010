"""Finite roots: validation, joins, branching points, isomorphism and enumeration."""
from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from svrings.rootsys import (
    PosetError, RootPoset, _rooted_trees, branching_points, branching_root, chain, enumerate_roots,
    is_reduced, join, poset_iso, to_dot, two_branch_rank4, validate_root_system, vee,
)


def canonical(parent: list) -> str:
    """AHU encoding of the rooted tree given by a parent array (root = node 0)."""
    kids = {i: [] for i in range(len(parent))}
    for i, p in enumerate(parent):
        if p is not None:
            kids[p].append(i)

    def enc(v):
        return "(" + "".join(sorted(enc(c) for c in kids[v])) + ")"

    return enc(0)


def brute_force_trees(n: int) -> dict:
    """Unlabeled rooted trees on n nodes, keyed by encoding, with their leaf counts."""
    found = {}
    for ps in product(*(range(i) for i in range(1, n))):
        parent = [None] + list(ps)
        key = canonical(parent)
        if key not in found:
            found[key] = sum(1 for i in range(n) if i not in ps)
    return found


def random_root(draw_parent) -> RootPoset:
    n = len(draw_parent) + 1
    ids = [f"v{i}" for i in range(n)]
    return RootPoset(ids, [(ids[i + 1], ids[p]) for i, p in enumerate(draw_parent)])


parent_arrays = st.integers(0, 7).flatmap(
    lambda n: st.tuples(*(st.integers(0, i) for i in range(n))))

N_POSET = RootPoset(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "d")])


class TestFrozenExamples:
    def test_validation(self):
        assert validate_root_system(chain(3))
        assert not validate_root_system(N_POSET)
        assert validate_root_system(two_branch_rank4(), require_top=True)
        cyc = RootPoset(["a", "b"], [("a", "b"), ("b", "a")])
        assert validate_root_system(cyc).kind == "cycle"

    def test_branching_points(self):
        assert branching_points(chain(4)) == []
        assert branching_points(vee()) == ["m"]
        assert sorted(branching_points(two_branch_rank4())) == ["m", "q1", "q2"]

    def test_branching_root(self):
        br = branching_root(chain(4))
        assert set(br.elements) == {"c0", "c3"} and not is_reduced(chain(4))
        assert is_reduced(vee()) and len(branching_root(vee())) == 3
        assert is_reduced(two_branch_rank4())

    def test_join(self):
        P = two_branch_rank4()
        assert join(P, "p1", "p1") == "p1"
        assert join(vee(), "p1", "p2") == "m"
        assert join(P, "p1", "p3") == "m" and join(P, "p1", "p2") == "q1"
        with pytest.raises(PosetError):
            join(RootPoset(["a", "b"]), "a", "b")

    def test_iso(self):
        P = two_branch_rank4()
        assert poset_iso(P, P) is not None
        assert poset_iso(chain(3), vee()) is None
        swap = {"p1": "p3", "p2": "p4", "p3": "p1", "p4": "p2", "q1": "q2", "q2": "q1", "m": "m"}
        Q = P.relabel(swap)
        iso = poset_iso(P, Q)
        assert iso is not None
        assert all(P.leq(a, b) == Q.leq(iso[a], iso[b]) for a in P.elements for b in P.elements)

    def test_dot(self):
        dot = to_dot(vee(), "V")
        assert dot.count("->") == 2 and '"p1" -> "m"' in dot


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 4), (5, 9), (6, 20), (7, 48)])
    def test_rooted_tree_counts(self, n, count):
        assert len(brute_force_trees(n)) == count
        assert len(_rooted_trees(n)) == count

    def test_enumerator_matches_brute_force_with_minima_bound(self):
        expected = sum(1 for n in range(1, 10) for leaves in brute_force_trees(n).values() if leaves <= 4)
        roots = enumerate_roots(9, 4)
        assert len(roots) == expected == 341
        assert all(validate_root_system(P, require_top=True) for P in roots)
        assert all(len(P.minimal()) <= 4 for P in roots)

    def test_enumerated_roots_pairwise_distinct(self):
        roots = enumerate_roots(6)
        for P, Q in combinations(roots, 2):
            assert poset_iso(P, Q) is None


class TestProperties:
    @given(parent_arrays)
    def test_trees_are_roots(self, parents):
        P = random_root(parents)
        assert validate_root_system(P, require_top=True)
        assert P.top() == "v0"

    @given(parent_arrays)
    def test_branching_root_is_reduced_and_keeps_rank(self, parents):
        P = random_root(parents)
        B = branching_root(P)
        assert is_reduced(B)
        assert sorted(B.minimal()) == sorted(P.minimal())
        for a, b in combinations(P.minimal(), 2):
            assert join(P, a, b) in B.elements

    @given(parent_arrays)
    def test_iso_invariant_under_relabelling(self, parents):
        P = random_root(parents)
        Q = P.relabel({x: "w" + x for x in reversed(P.elements)})
        assert poset_iso(P, Q) is not None
