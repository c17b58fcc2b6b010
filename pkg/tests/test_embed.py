"""One-step extensions of Hahn fields: valuation laws and order audits."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from svrings.embed import (
    EmbedConfig, case1_extend, case1_extension, case2_extend, case2_extension, coefficient_field_check,
    composition_check, monomial_group_check, order_preservation_audit, poly_add, poly_mul,
    random_source_poly,
)
from svrings.hahn import ValElt, parse_valelt
from svrings.scalars import gen

from conftest import rng_from, seeds


def P(text, d=1):
    return parse_valelt(text, d)


class TestFrozenExamples:
    def test_monomial_value(self):
        assert ValElt.monomial((1, -2)).val() == (1, -2)

    def test_residue_of_constants(self):
        assert ValElt.constant(Fraction(5, 3), 1).residue(1).to_scalar() == Fraction(5, 3)
        assert P("t1 + x").residue(1).to_scalar() == gen(1)

    def test_case1_law(self):
        ext = case1_extension(1)
        p = [P("x"), P("1")]           # a_0 + a_1 h with v(a_0) = (1), v(a_1) = (0)
        assert ext.apply(p).val() == (0, 1) == ext.source_val(p)

    def test_case2_law(self):
        ext = case2_extension(0, 1)
        p = [P("x^2"), P("x")]          # a_0 + a_1 b with v(a_0) = (2), v(a_1) = (1)
        assert ext.apply(p).val() == (1,) == ext.source_val(p)

    def test_order_audit_examples(self):
        ext = case2_extension(0, 1)
        assert order_preservation_audit(ext, [[P("2*x^(1/2) + x")], [P("1")]])

    def test_flipped_map_is_caught(self):
        flipped = case1_extension(1, flip=True)
        res = order_preservation_audit(flipped, [[ValElt.zero(1), ValElt.one(1)]])
        assert not res and "-1" in res.detail


class TestAudits:
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_monomial_group(self, d):
        assert monomial_group_check(d, trials=200)

    @pytest.mark.parametrize("m,d", [(0, 1), (1, 1), (2, 2)])
    def test_coefficient_field(self, m, d):
        assert coefficient_field_check(m, d, trials=150)

    @pytest.mark.parametrize("d", [1, 2])
    def test_case1_runner(self, d):
        results = case1_extend(EmbedConfig(dim=d, samples=150, seed=d))
        assert all(results), [r.line() for r in results]
        assert results[-1].name == "case1-flip-detected"

    @pytest.mark.parametrize("d", [1, 2])
    def test_case2_runner(self, d):
        assert all(case2_extend(EmbedConfig(dim=d, samples=150, seed=d)))

    def test_with_a_transcendental_coefficient(self):
        cfg = EmbedConfig(dim=1, generators=1, samples=25)
        assert all(case1_extend(cfg)) and all(case2_extend(cfg))

    def test_composition(self):
        assert all(composition_check(EmbedConfig(dim=1, samples=80)))


class TestProperties:
    @given(seeds, st.integers(1, 2))
    @settings(max_examples=30)
    def test_case1_is_a_homomorphism(self, seed, d):
        rng = rng_from(seed)
        ext = case1_extension(d)
        p, q = (random_source_poly(rng, d, rng.randint(0, 3)) for _ in range(2))
        assert ext.apply(poly_add(p, q)) == ext.apply(p) + ext.apply(q)
        assert ext.apply(poly_mul(p, q)) == ext.apply(p) * ext.apply(q)

    @given(seeds, st.integers(1, 2))
    @settings(max_examples=30)
    def test_case2_sign_matches_source(self, seed, d):
        rng = rng_from(seed)
        ext = case2_extension(0, d)
        p = random_source_poly(rng, d, rng.randint(0, 3))
        assert ext.apply(p).sign() == ext.source_sign(p)
