"""Analyse every ring in the generated corpus and print one summary line each.

    python scripts/run_corpus.py [--trials 200] [--seed 0] [--per-stratum 6]

Ends with a tally by type and by number of branching ideals; the exit code
is 1 if any ring fails a check.
"""
from __future__ import annotations

import argparse
import sys
import time
from collections import Counter

from svrings.analysis import AnalysisConfig, analyze, summary_line
from svrings.corpus import CorpusConfig, generate_corpus, named_specs


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--per-stratum", type=int, default=6)
    args = ap.parse_args()

    specs = named_specs() + generate_corpus(CorpusConfig(seed=args.seed, per_stratum=args.per_stratum))
    by_type, by_branching, failed = Counter(), Counter(), []
    t0 = time.perf_counter()
    for spec in specs:
        report = analyze(spec, AnalysisConfig(trials=args.trials, seed=args.seed))
        print(f"{spec.name:>16}  {summary_line(spec, report)}")
        by_type[report.ring_type] += 1
        by_branching[len(report.branching_nodes)] += 1
        if not report.passed:
            failed.append(spec.name)
            for r in report.check_log.results:
                if not r:
                    print(f"{'':>16}  {r.line()}")
    print(f"\n{len(specs)} rings in {time.perf_counter() - t0:.1f} s")
    print("by type:      " + ", ".join(f"{k}: {v}" for k, v in sorted(by_type.items())))
    print("by branching: " + ", ".join(f"{k}: {v}" for k, v in sorted(by_branching.items())))
    print(f"failures:     {', '.join(failed) or 'none'}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
