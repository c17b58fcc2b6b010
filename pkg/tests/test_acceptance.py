"""Acceptance criteria, one test each, with the time budgets they must meet.

Each test records a one-line verdict; the lines are printed together in the
terminal summary (and by ``python tests/test_acceptance.py``).
"""
from __future__ import annotations

import tempfile
import time
from pathlib import Path

import pytest

from svrings.analysis import (
    OTHER, TYPE_N1, TYPE_N2, automorphism_check, branching_ideals, brspec, classify_type, goursat_verify,
    leaf_automorphism, max_ideal_branching_check, pair_independence_check, rank_check, sv_check,
)
from svrings.boolprod import BoolProdConfig, sv_witness_check
from svrings.corpus import generate_corpus, rank4_two_joins
from svrings.embed import (
    EmbedConfig, case1_extend, case2_extend, coefficient_field_check, monomial_group_check,
)
from svrings.golden import transcripts, write_corpus
from svrings.laws import KernelLawConfig, kernel_law_check, valuation_ring_law_check
from svrings.realize import phi_P_check, realize, round_trip
from svrings.rootsys import RootPoset, branching_root, enumerate_roots, poset_iso
from svrings.svring import sample_elements

try:
    from conftest import ACCEPTANCE_LINES, REPO
except ImportError:  # run as a script
    ACCEPTANCE_LINES, REPO = {}, Path(__file__).resolve().parents[1]

_CORPUS = None


def corpus():
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = generate_corpus()
    return _CORPUS


def record(number: int, title: str, passed: bool, detail: str, seconds: float, budget=None) -> None:
    within = budget is None or seconds < budget
    ok = passed and within
    limit = f" < {budget:g} s" if budget is not None else ""
    ACCEPTANCE_LINES[number] = (f"criterion {number:02d} [{title}]: {'pass' if ok else 'FAIL'} "
                                f"({detail}; {seconds:.1f} s{limit})")
    assert passed, detail
    assert within, f"took {seconds:.1f} s, budget {budget} s"


def failing(results) -> str:
    bad = [r.line() for r in results if not r]
    return "; ".join(bad[:3])


# 1 ---------------------------------------------------------------------
def test_01_hahn_kernel_laws():
    t = time.perf_counter()
    results = []
    for d in (1, 2, 3):
        results += kernel_law_check(KernelLawConfig(dim=d, triples=10_000, seed=d))
    dt = time.perf_counter() - t
    ok = all(results)
    record(1, "Hahn kernel laws", ok, failing(results) if not ok else
           f"{len(results)} laws x 10^4 triples for d=1,2,3", dt, budget=30)


# 2 ---------------------------------------------------------------------
def test_02_valuation_ring_law():
    t = time.perf_counter()
    results = []
    for d in (1, 2, 3):
        results += valuation_ring_law_check(d, samples=10_000, seed=10 + d)
    ok = all(results)
    record(2, "valuation ring law and divides", ok, failing(results) if not ok else
           "a or 1/a in V_d and divides oracle, 10^4 each for d=1,2,3", time.perf_counter() - t)


# 3 ---------------------------------------------------------------------
def test_03_sv_property_on_corpus():
    specs = corpus()
    ranks = {s.rank for s in specs}
    kinds = {classify_type(s) for s in specs}
    multi = sum(len(branching_ideals(s)) >= 2 for s in specs)
    shape_ok = (len(specs) >= 50 and ranks == {2, 3, 4} and max(max(s.depths) for s in specs) <= 3
                and {TYPE_N1, TYPE_N2, OTHER} <= kinds and multi > 0)
    t = time.perf_counter()
    bad = [s.name for s in specs if not sv_check(s, trials=1000, seed=0)]
    dt = time.perf_counter() - t
    record(3, "SV property", shape_ok and not bad,
           f"{len(specs)} specs, n in {sorted(ranks)}, {multi} multi-branching, 10^3 pairs each, "
           f"{len(bad)} counterexamples", dt, budget=120)


# 4 ---------------------------------------------------------------------
def test_04_rank_and_annihilators():
    t = time.perf_counter()
    bad = [s.name for s in corpus() if not rank_check(s, trials=300, seed=4)]
    record(4, "rank and annihilators", not bad,
           f"{len(corpus())} specs, 300 samples each, failures {bad or 'none'}", time.perf_counter() - t)


# 5 ---------------------------------------------------------------------
def test_05_branching_bound():
    t = time.perf_counter()
    over = [s.name for s in corpus() if len(branching_ideals(s)) > s.rank - 1]
    one = [s for s in corpus() if classify_type(s) != OTHER]
    dep = [s.name for s in one if not pair_independence_check(s, sample_elements(s, 5, 1000))]
    record(5, "branching bound", not over and not dep and len(one) > 0,
           f"bound holds on {len(corpus()) - len(over)}/{len(corpus())}; pair independence on "
           f"{len(one) - len(dep)}/{len(one)} one-branching specs, 10^3 samples", time.perf_counter() - t)


# 6 ---------------------------------------------------------------------
def test_06_max_ideal_branching():
    t = time.perf_counter()
    specs = [s for s in corpus() if s.top_is_max]
    bad = [s.name for s in specs if not max_ideal_branching_check(s, trials=1000, seed=6)]
    record(6, "maximal ideal branching", not bad and len(specs) > 0,
           f"{len(specs)} specs, 10^3 non-units each split into two zero divisors", time.perf_counter() - t)


# 7 ---------------------------------------------------------------------
def test_07_goursat():
    t = time.perf_counter()
    specs = [s for s in corpus() if s.rank == 2]
    bad = [s.name for s in specs if not goursat_verify(s, trials=1000, seed=7)]
    record(7, "Goursat decomposition", not bad and len(specs) > 0,
           f"{len(specs)} two-leaf specs", time.perf_counter() - t)


# 8 ---------------------------------------------------------------------
def test_08_rank4_two_joins():
    # the 7-element diagram, built by hand: p1,p2 < q1; p3,p4 < q2; q1,q2 < m
    diagram = RootPoset(["a", "b", "c", "d", "u", "v", "top"],
                        [("a", "u"), ("b", "u"), ("c", "v"), ("d", "v"), ("u", "top"), ("v", "top")])
    t = time.perf_counter()
    spec = rank4_two_joins()
    rank = rank_check(spec, trials=200, seed=8)
    nb = len(branching_ideals(spec))
    iso = poset_iso(brspec(spec), diagram) is not None
    auto = leaf_automorphism(spec, {"p1": "p3", "p2": "p4", "p3": "p1", "p4": "p2"})
    amc = automorphism_check(spec, auto, trials=200, seed=8)
    swaps = {("q1", "q2"), ("q2", "q1")} <= set(auto.moved_nodes())
    dt = time.perf_counter() - t
    ok = bool(rank) and rank.witness == 4 and nb == 3 and iso and bool(amc) and swaps
    record(8, "rank-4 ring with three branching ideals", ok,
           f"rank={rank.witness}, branching={nb}, BrSpec iso={iso}, half swap {amc.detail}", dt, budget=5)


# 9 ---------------------------------------------------------------------
def test_09_realization_round_trip():
    t = time.perf_counter()
    roots = enumerate_roots(9, 4)
    bad = [P for P in roots
           if round_trip(P) is None or not phi_P_check(realize(P), branching_root(P), samples=20)]
    dt = time.perf_counter() - t
    record(9, "realization round trip", not bad and len(roots) == 341,
           f"{len(roots)} roots (<= 9 elements, <= 4 minima), {len(bad)} failures", dt, budget=120)


# 10 --------------------------------------------------------------------
def test_10_extension_audits():
    t = time.perf_counter()
    results = [monomial_group_check(d) for d in (1, 2, 3)]
    results += [coefficient_field_check(m, d) for m, d in ((0, 1), (1, 2), (2, 2))]
    for d in (1, 2):
        results += case1_extend(EmbedConfig(dim=d, samples=1000, max_degree=4, seed=d))
        results += case2_extend(EmbedConfig(dim=d, samples=1000, max_degree=4, seed=d))
    flip = [r for r in results if r.name == "case1-flip-detected"]
    ok = all(results) and len(flip) == 2
    record(10, "extension audits", ok, failing(results) if not ok else
           f"{len(results)} checks; case1/case2 laws on 10^3 polynomials for d=1,2; flipped map caught",
           time.perf_counter() - t)


# 11 --------------------------------------------------------------------
def test_11_boolean_product_witness():
    t = time.perf_counter()
    res = sv_witness_check(BoolProdConfig(points=0, samples=1000, seed=11))
    record(11, "finite product witness", bool(res), res.detail + ", |X| <= 6", time.perf_counter() - t)


# 12 --------------------------------------------------------------------
def test_12_cli_determinism_and_golden():
    t = time.perf_counter()
    with tempfile.TemporaryDirectory() as tmp:
        fresh = sorted(write_corpus(Path(tmp) / "corpus"))
        shipped_same = all(
            (REPO / p.relative_to(tmp)).read_bytes() == p.read_bytes() for p in fresh)
    first, second = transcripts(REPO), transcripts(REPO)
    golden = {p.stem: p.read_text() for p in (REPO / "tests" / "golden").glob("*.txt")}
    ok = shipped_same and first == second and first == golden
    detail = (f"{len(first)} transcripts identical across two runs and equal to tests/golden; "
              f"corpus files regenerate byte for byte" if ok else
              f"corpus same={shipped_same}, runs same={first == second}, golden same={first == golden}")
    record(12, "CLI determinism and golden files", ok, detail, time.perf_counter() - t)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
