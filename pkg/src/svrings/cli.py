"""Command-line front end.

Exit codes: 0 when every check passes; 1 when a structural check fails, a
ring spec describes no valid ring, or a poset is not a finite root; 2 when an
input file cannot be read or parsed.
All randomness comes from ``--seed`` (default 0), so reports are reproducible
byte for byte.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .analysis import AnalysisConfig, analyze, brspec, summary_line
from .boolprod import BoolProdConfig, sv_witness_check
from .embed import EmbedConfig, case1_extend, case2_extend
from .realize import RealizeError, realize, round_trip
from .rootsys import is_reduced, to_dot, validate_root_system
from .specfiles import SpecFileError, SpecInvariantError, format_ringspec, load_posetspec, load_ringspec

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


class _InputError(Exception):
    pass


class _InvariantError(Exception):
    pass


def _load(loader, path: str):
    try:
        return loader(path)
    except SpecInvariantError as exc:
        raise _InvariantError(f"invalid spec: {exc}") from None
    except SpecFileError as exc:
        raise _InputError(f"parse error: {exc}") from None
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None


def ring_check_report(spec, trials: int, seed: int) -> tuple:
    """The text of a ``ring check`` report and whether every check passed."""
    report = analyze(spec, AnalysisConfig(trials=trials, seed=seed))
    lines = [f"spec {spec.name or '(unnamed)'}: leaves={len(spec.leaves)}, depths={list(spec.depths)}"]
    lines += report.check_log.lines()
    lines.append(summary_line(spec, report))
    return "\n".join(lines) + "\n", report.passed


def _cmd_ring_check(args) -> int:
    spec = _load(load_ringspec, args.file)
    text, ok = ring_check_report(spec, args.trials, args.seed)
    sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_ring_brspec(args) -> int:
    spec = _load(load_ringspec, args.file)
    P = brspec(spec)
    dot = to_dot(P, name=spec.name or "BrSpec")
    if args.dot:
        Path(args.dot).write_text(dot)
        print(f"wrote {args.dot}: {len(P)} nodes, {len(P.covers())} edges")
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def _cmd_realize(args) -> int:
    P = _load(load_posetspec, args.file)
    chk = validate_root_system(P, require_top=True)
    if not chk:
        print(f"not a finite root: {chk.message}")
        return EXIT_FAIL
    try:
        spec = realize(P, name=args.name or Path(args.file).stem)
    except RealizeError as exc:
        print(f"cannot realize: {exc}")
        return EXIT_FAIL
    text = format_ringspec(spec)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    iso = round_trip(P)
    if iso is None:
        print("round trip: FAIL (spectrum of the realized ring is not isomorphic to the input)")
        return EXIT_FAIL
    shape = "reduced" if is_reduced(P) else "not reduced"
    print(f"round trip: pass (primes={len(P)}, leaves={len(spec.leaves)}, input {shape})")
    return EXIT_OK


def _cmd_embed(args) -> int:
    cfg = EmbedConfig(dim=args.dim, generators=args.generators, samples=args.samples, seed=args.seed)
    results = case1_extend(cfg) if args.case == "case1" else case2_extend(cfg)
    for r in results:
        print(r.line())
    return EXIT_OK if all(results) else EXIT_FAIL


def _cmd_boolprod(args) -> int:
    res = sv_witness_check(BoolProdConfig(points=args.points, samples=args.samples, seed=args.seed))
    print(res.line())
    return EXIT_OK if res else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="svrings", description="Exact checks on local SV-rings of finite rank.")
    sub = ap.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="analyse a ring spec file")
    rsub = ring.add_subparsers(dest="ring_command", required=True)
    chk = rsub.add_parser("check", help="run the structural checks and print a report")
    chk.add_argument("file")
    chk.add_argument("--trials", type=int, default=200)
    chk.add_argument("--seed", type=int, default=0)
    chk.set_defaults(func=_cmd_ring_check)
    br = rsub.add_parser("brspec", help="write the branching spectrum as DOT")
    br.add_argument("file")
    br.add_argument("--dot", help="output path (stdout when omitted)")
    br.set_defaults(func=_cmd_ring_brspec)

    rl = sub.add_parser("realize", help="build a ring spec whose spectrum is a given finite root")
    rl.add_argument("file")
    rl.add_argument("-o", "--output")
    rl.add_argument("--name", default="")
    rl.set_defaults(func=_cmd_realize)

    em = sub.add_parser("embed", help="audit the two one-step extensions of a Hahn field")
    em.add_argument("case", choices=["case1", "case2"])
    em.add_argument("--dim", type=int, default=1)
    em.add_argument("--generators", type=int, default=0)
    em.add_argument("--samples", type=int, default=1000)
    em.add_argument("--seed", type=int, default=0)
    em.set_defaults(func=_cmd_embed)

    bp = sub.add_parser("boolprod", help="SV witness on a finite product of valuation rings")
    bp.add_argument("--points", type=int, default=0, help="|X|; 0 draws it from 1..6")
    bp.add_argument("--samples", type=int, default=1000)
    bp.add_argument("--seed", type=int, default=0)
    bp.set_defaults(func=_cmd_boolprod)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(exc, file=sys.stderr)
        return EXIT_PARSE
    except _InvariantError as exc:
        print(exc, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
