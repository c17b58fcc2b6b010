"""The shipped corpus of spec files and the golden CLI transcripts built from it.

``write_corpus`` lays out ``corpus/`` (ring specs, poset specs and a few
deliberately broken files); ``golden_cases`` lists the CLI invocations whose
transcripts live in ``tests/golden/``.  A transcript records the exit code,
stdout and stderr of one in-process run, with paths relative to the repo root.
"""
from __future__ import annotations

import contextlib
import io
import os
from dataclasses import dataclass
from pathlib import Path

from .cli import main
from .corpus import generate_corpus, named_specs
from .rootsys import RootPoset, chain, star, two_branch_rank4, vee
from .specfiles import format_posetspec, format_ringspec

GOLDEN_TRIALS = 50

BROKEN_FILES = {
    # syntax problems: exit 2
    "bad-header.ring": "ringspec 2\nleaf p1 depth=1\n",
    "bad-depth.ring": "ringspec 1\nleaf p1 depth=two\n",
    "bad-keyword.ring": "ringspec 1\nleaf p1 depth=1\nleaf p2 depth=1\nnode q level=0\nglue p1 q\n",
    "undeclared.ring": "ringspec 1\nleaf p1 depth=1\nleaf p2 depth=1\ncover p1 q\ncover p2 q\n",
    # well formed, but no valid ring: exit 1
    "levels-up.ring": "ringspec 1\nleaf p1 depth=1\nleaf p2 depth=2\nnode q level=1\ncover p1 q\ncover p2 q\n",
    "unreduced.ring": "ringspec 1\nleaf p1 depth=2\nleaf p2 depth=2\nnode q level=1\nnode r level=0\n"
                      "cover p1 q\ncover q r\ncover p2 r\ncover p2 q\n",
    "two-tops.ring": "ringspec 1\nleaf p1 depth=1\nleaf p2 depth=1\n",
}


def named_posets() -> dict:
    """Poset files: roots of several shapes plus one poset that is not a root."""
    diamond = RootPoset(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    broom = RootPoset(["p1", "p2", "q", "r", "m"], [("p1", "q"), ("p2", "q"), ("q", "r"), ("r", "m")])
    return {
        "point": RootPoset(["x"]),
        "chain3": chain(3),
        "vee": vee(),
        "star3": star(3),
        "broom": broom,
        "two-branch-rank4": two_branch_rank4(),
        "not-a-root": diamond,
    }


def write_corpus(root: Path) -> list:
    """Write every corpus file under ``root`` and return the paths, sorted."""
    rings = root / "rings"
    posets = root / "posets"
    broken = root / "broken"
    for d in (rings, posets, broken):
        d.mkdir(parents=True, exist_ok=True)
    written = []
    for spec in named_specs() + generate_corpus():
        p = rings / f"{spec.name}.ring"
        p.write_text(format_ringspec(spec))
        written.append(p)
    for name, P in named_posets().items():
        p = posets / f"{name}.poset"
        p.write_text(format_posetspec(P))
        written.append(p)
    for name, text in BROKEN_FILES.items():
        p = broken / name
        p.write_text(text)
        written.append(p)
    return sorted(written)


@dataclass(frozen=True)
class GoldenCase:
    name: str
    argv: tuple


def golden_cases(repo: Path) -> list:
    """CLI invocations covered by golden transcripts, in a fixed order."""
    corpus = repo / "corpus"
    cases = []
    for p in sorted((corpus / "rings").glob("*.ring")):
        rel = p.relative_to(repo).as_posix()
        cases.append(GoldenCase(f"check-{p.stem}", ("ring", "check", rel, "--trials", str(GOLDEN_TRIALS))))
        cases.append(GoldenCase(f"brspec-{p.stem}", ("ring", "brspec", rel)))
    for p in sorted((corpus / "posets").glob("*.poset")):
        cases.append(GoldenCase(f"realize-{p.stem}", ("realize", p.relative_to(repo).as_posix())))
    for p in sorted((corpus / "broken").glob("*.ring")):
        cases.append(GoldenCase(f"broken-{p.stem}", ("ring", "check", p.relative_to(repo).as_posix())))
    cases += [
        GoldenCase("embed-case1-d1", ("embed", "case1", "--dim", "1", "--samples", "200")),
        GoldenCase("embed-case2-d1", ("embed", "case2", "--dim", "1", "--samples", "200")),
        GoldenCase("boolprod-k2", ("boolprod", "--points", "2", "--samples", "200")),
    ]
    return cases


def run_case(case: GoldenCase, repo: Path) -> str:
    """Transcript of one in-process CLI run from the repo root."""
    out, err = io.StringIO(), io.StringIO()
    cwd = os.getcwd()
    os.chdir(repo)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(list(case.argv))
    finally:
        os.chdir(cwd)
    return (f"$ svrings {' '.join(case.argv)}\nexit {code}\n--- stdout\n{out.getvalue()}"
            f"--- stderr\n{err.getvalue()}")


def transcripts(repo: Path) -> dict:
    return {case.name: run_case(case, repo) for case in golden_cases(repo)}
