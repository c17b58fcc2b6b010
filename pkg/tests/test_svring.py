"""Tree models: spec validation, elements, primes and samplers."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from svrings.corpus import fibre_square, generate_corpus, rank4_two_joins, star_spec
from svrings.hahn import ValElt, parse_valelt
from svrings.rootsys import RootPoset
from svrings.svring import (
    CompatibilityError, ComponentError, RingSpec, SpecError, TupleElt, canonical_orthogonals,
    compatibility_violation, in_max_ideal, in_prime, is_unit, is_valid, kill_component, lift_from_leaf,
    make_element, make_spec, one, project, residue_at, sample, sample_elements,
)

from conftest import seeds

VV = fibre_square(1, 0, "VxV")
R4 = rank4_two_joins()
CORPUS = generate_corpus()


def P(text, d=1):
    return parse_valelt(text, d)


def elt(spec, *texts):
    return make_element(spec, [P(t, d) for t, d in zip(texts, spec.depths)])


class TestSpecValidation:
    def test_levels_must_decrease(self):
        with pytest.raises(SpecError):
            make_spec([("p1", "q"), ("p2", "q")], {"p1": 1, "p2": 2, "q": 1})

    def test_reduced_tree_required(self):
        with pytest.raises(SpecError):
            make_spec([("p1", "q"), ("q", "r"), ("p2", "r")], {"p1": 2, "p2": 2, "q": 1, "r": 0})

    def test_root_required(self):
        with pytest.raises(SpecError):
            RingSpec(RootPoset(["p1", "p2"]), {"p1": 1, "p2": 1})

    def test_leaf_depth(self):
        with pytest.raises(SpecError):
            make_spec([("p1", "q"), ("p2", "q")], {"p1": 0, "p2": 1, "q": 0})
        field = RingSpec(RootPoset(["x"]), {"x": 0})
        assert field.top_is_max and field.max_id == "x"

    def test_max_id_clash(self):
        with pytest.raises(SpecError):
            make_spec([("p1", "q"), ("p2", "q")], {"p1": 2, "p2": 2, "q": 1}, max_id="p1")


class TestFrozenExamples:
    def test_make_element(self):
        assert is_valid(VV, [P("1 + x"), P("1 + x^2")])
        with pytest.raises(CompatibilityError):
            elt(VV, "1 + x", "x")
        assert is_valid(R4, [P("x^(0,1)", 2), P("x^(0,1)", 2), ValElt.zero(2), ValElt.zero(2)])
        with pytest.raises(ComponentError):
            elt(VV, "x^-1", "x")

    def test_arithmetic(self):
        a = elt(VV, "1 + x", "1 + x^2")
        b = elt(VV, "1 - x", "1 - x^2")
        assert a * b == elt(VV, "1 - x^2", "1 - x^4")
        assert a + elt(VV, "0", "0") == a
        e1, e2 = canonical_orthogonals(VV)
        assert (e1 * e2).is_zero()

    def test_orthogonals(self):
        e1, e2 = canonical_orthogonals(VV)
        assert e1 == elt(VV, "x", "0") and e2 == elt(VV, "0", "x")
        assert len(canonical_orthogonals(star_spec(3))) == 3
        for e in canonical_orthogonals(R4):
            assert compatibility_violation(R4, e.comps) is None
            assert sum(not c.is_zero() for c in e.comps) == 1
            nz = next(c for c in e.comps if not c.is_zero())
            assert nz == ValElt.monomial((1, 0))

    def test_units(self):
        assert is_unit(elt(VV, "1 + x", "1 - x"))
        assert in_max_ideal(elt(VV, "x", "x^2"))
        e1 = canonical_orthogonals(VV)[0]
        assert in_max_ideal(e1) and (e1 * canonical_orthogonals(VV)[1]).is_zero()

    def test_primes(self):
        assert in_prime(VV, elt(VV, "0", "x"), "p1")
        assert in_prime(VV, elt(VV, "x", "x"), "q")
        a = make_element(R4, [P("x^(0,1)", 2), P("x^(0,1)", 2), ValElt.zero(2), ValElt.zero(2)])
        assert not in_prime(R4, a, "q1")
        assert in_prime(R4, a, "m")

    def test_projection_and_residue(self):
        a = elt(VV, "1 + x", "1 + x^2")
        assert project(VV, a, 1) == P("1 + x^2") and project(VV, a, "p2") == P("1 + x^2")
        assert residue_at(VV, a, "q").to_scalar() == 1
        assert residue_at(R4, canonical_orthogonals(R4)[0], "q1").is_zero()

    def test_sample_size_zero_is_constant(self):
        a = sample(R4, 5, size=0)
        c = a.comps[0].residue(2).to_scalar()
        assert a == TupleElt(R4, tuple(ValElt.constant(c, 2) for _ in range(4)))

    def test_seed_determinism(self):
        assert sample(R4, 11) == sample(R4, 11)
        assert sample_elements(R4, 3, 30) == sample_elements(R4, 3, 30)


class TestProperties:
    @given(seeds, st.sampled_from(CORPUS))
    def test_samples_are_ring_elements(self, seed, spec):
        for a in sample_elements(spec, seed, 6):
            assert compatibility_violation(spec, a.comps) is None
            assert all(c.in_ring() for c in a.comps)

    @given(seeds, st.sampled_from(CORPUS))
    def test_closed_under_ring_operations(self, seed, spec):
        a, b = sample_elements(spec, seed, 8)[-2:]
        for c in (a + b, a * b, a - b):
            assert compatibility_violation(spec, c.comps) is None

    @given(seeds, st.sampled_from(CORPUS), st.data())
    def test_lift_and_kill(self, seed, spec, data):
        i = data.draw(st.integers(0, spec.rank - 1))
        a = sample(spec, seed)
        lifted = lift_from_leaf(spec, i, a.comps[i])
        assert compatibility_violation(spec, lifted.comps) is None
        assert lifted.comps[i] == a.comps[i]
        killed = kill_component(spec, a, i)
        assert killed.comps[i].is_zero()
        assert compatibility_violation(spec, killed.comps) is None

    @given(seeds, st.sampled_from(CORPUS))
    def test_units_are_all_or_nothing(self, seed, spec):
        for a in sample_elements(spec, seed, 6):
            is_unit(a)  # raises when components disagree

    def test_one_is_unit(self):
        for spec in CORPUS[:10]:
            assert is_unit(one(spec))
