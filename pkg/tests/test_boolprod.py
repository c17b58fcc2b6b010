"""SV witness on finite products of valuation rings."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from svrings.boolprod import BoolProdConfig, sv_witness, sv_witness_check
from svrings.hahn import ValElt, parse_valelt, random_valelt

from conftest import rng_from, seeds


def P(t):
    return parse_valelt(t, 1)


def test_two_point_example():
    X = (1, 2)
    a, b = {1: P("x"), 2: P("1")}, {1: P("1"), 2: P("x")}
    w = sv_witness(X, {1: 1, 2: 1}, a, b)
    assert w.c == {1: P("x"), 2: P("x")}
    assert w.V == (1,) and w.U == (2,) and w.W == ()
    assert w.identity_holds
    # the two factors vanish on complementary points
    assert (a[1] - w.c[1] * b[1]).is_zero() and (b[2] - w.c[2] * a[2]).is_zero()


def test_equal_inputs():
    a = {1: P("1 + x"), 2: P("x^2")}
    w = sv_witness((1, 2), {1: 1, 2: 1}, a, dict(a))
    assert w.W == (1, 2) and all(c == ValElt.one(1) for c in w.c.values())


def test_zero_input():
    a = {1: ValElt.zero(1), 2: ValElt.zero(1)}
    b = {1: P("x"), 2: ValElt.zero(1)}
    w = sv_witness((1, 2), {1: 1, 2: 1}, a, b)
    assert w.c[1].is_zero() and w.identity_holds


def test_rejects_non_ring_values():
    with pytest.raises(ValueError):
        sv_witness((1,), {1: 1}, {1: P("x^-1")}, {1: P("1")})


@given(seeds, st.integers(1, 6))
@settings(max_examples=40)
def test_random_products(seed, k):
    rng = rng_from(seed)
    X = tuple(range(k))
    dims = {x: rng.randint(1, 3) for x in X}
    a = {x: random_valelt(rng, dims[x], in_ring=True) for x in X}
    b = {x: random_valelt(rng, dims[x], in_ring=True) for x in X}
    w = sv_witness(X, dims, a, b)
    assert sorted(w.U + w.V + w.W) == list(X)
    assert w.identity_holds


def test_runner():
    assert sv_witness_check(BoolProdConfig(samples=200, seed=3))
