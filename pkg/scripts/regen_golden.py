"""Rewrite corpus/ and tests/golden/ from the current code.

Run from anywhere:  python scripts/regen_golden.py
Review the diff before committing; the golden test compares byte for byte.
"""
from __future__ import annotations

import argparse
import shutil
from pathlib import Path

from svrings.golden import transcripts, write_corpus

REPO = Path(__file__).resolve().parents[1]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--keep", action="store_true", help="do not wipe the old files first")
    args = ap.parse_args()
    corpus, golden = REPO / "corpus", REPO / "tests" / "golden"
    if not args.keep:
        for d in (corpus, golden):
            if d.exists():
                shutil.rmtree(d)
    files = write_corpus(corpus)
    golden.mkdir(parents=True, exist_ok=True)
    ts = transcripts(REPO)
    for name, text in ts.items():
        (golden / f"{name}.txt").write_text(text)
    print(f"{len(files)} corpus files, {len(ts)} golden transcripts")


if __name__ == "__main__":
    main()
