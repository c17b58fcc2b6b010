"""Plain-text formats for ring specs and finite posets.

Ring spec (``.ring``)::

    ringspec 1
    name rank4-two-joins          # optional
    leaf p1 depth=2               # one line per leaf, in leaf order
    node q1 level=1               # one line per gluing node
    cover p1 q1                   # p1 sits directly below q1
    maximal m                     # optional id of the maximal ideal

Poset spec (``.poset``)::

    poset 1
    elements p1 p2 m
    cover p1 m
    cover p2 m

Blank lines and anything after ``#`` are ignored.  Every problem is reported
as a :class:`SpecFileError` carrying the 1-based line number; a file that is
well formed but describes no valid ring (levels not decreasing upward, a
cycle, an internal node with one child) raises the subclass
:class:`SpecInvariantError` instead.
"""
from __future__ import annotations

import re
from pathlib import Path
from typing import Union

from .rootsys import PosetError, RootPoset
from .svring import RingSpec, SpecError

_ID = re.compile(r"^[A-Za-z_][A-Za-z0-9_~.\-]*$")


class SpecFileError(ValueError):
    def __init__(self, line: int, message: str, source: str = ""):
        self.line = line
        self.message = message
        self.source = source
        where = f"{source}:" if source else "line "
        super().__init__(f"{where}{line}: {message}")


class SpecInvariantError(SpecFileError):
    """The file parses, but the gluing data violates a structural invariant."""


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _ident(tok: str, no: int, src: str) -> str:
    if not _ID.match(tok):
        raise SpecFileError(no, f"bad identifier {tok!r}", src)
    return tok


def _keyed_int(tok: str, key: str, no: int, src: str) -> int:
    prefix = key + "="
    if not tok.startswith(prefix):
        raise SpecFileError(no, f"expected {prefix}<int>, got {tok!r}", src)
    try:
        val = int(tok[len(prefix):])
    except ValueError:
        raise SpecFileError(no, f"{key} must be an integer, got {tok[len(prefix):]!r}", src) from None
    if val < 0:
        raise SpecFileError(no, f"{key} must be non-negative", src)
    return val


def _header(items: list, kind: str, src: str) -> list:
    if not items:
        raise SpecFileError(1, f"empty file, expected '{kind} 1'", src)
    no, toks = items[0]
    if toks[0] != kind:
        raise SpecFileError(no, f"expected header '{kind} 1', got {' '.join(toks)!r}", src)
    if toks[1:] != ["1"]:
        raise SpecFileError(no, f"unsupported {kind} version {' '.join(toks[1:]) or '(none)'}", src)
    return items[1:]


# ------------------------------------------------------------------ rings

def parse_ringspec(text: str, source: str = "") -> RingSpec:
    items = _header(list(_lines(text)), "ringspec", source)
    name, max_id = "", None
    leaves: dict = {}
    nodes: dict = {}
    covers: list = []
    first_line: dict = {}
    for no, toks in items:
        kw, args = toks[0], toks[1:]
        if kw == "name":
            if len(args) != 1:
                raise SpecFileError(no, "name takes one token", source)
            name = args[0]
        elif kw in ("leaf", "node"):
            if len(args) != 2:
                raise SpecFileError(no, f"usage: {kw} <id> {'depth' if kw == 'leaf' else 'level'}=<int>", source)
            x = _ident(args[0], no, source)
            if x in first_line:
                raise SpecFileError(no, f"duplicate id {x} (first on line {first_line[x]})", source)
            first_line[x] = no
            if kw == "leaf":
                leaves[x] = _keyed_int(args[1], "depth", no, source)
            else:
                nodes[x] = _keyed_int(args[1], "level", no, source)
        elif kw == "cover":
            if len(args) != 2:
                raise SpecFileError(no, "usage: cover <lower> <upper>", source)
            a, b = (_ident(t, no, source) for t in args)
            covers.append((no, a, b))
        elif kw == "maximal":
            if len(args) != 1:
                raise SpecFileError(no, "usage: maximal <id>", source)
            max_id = _ident(args[0], no, source)
        else:
            raise SpecFileError(no, f"unknown keyword {kw!r}", source)
    if not leaves:
        raise SpecFileError(len(text.splitlines()) or 1, "no leaves declared", source)
    known = set(leaves) | set(nodes)
    for no, a, b in covers:
        for x in (a, b):
            if x not in known:
                raise SpecFileError(no, f"cover mentions undeclared id {x}", source)
        if b in leaves:
            raise SpecFileError(no, f"leaf {b} cannot sit above {a}", source)
    levels = {**leaves, **nodes}
    for no, a, b in covers:
        if levels[a] <= levels[b]:
            raise SpecInvariantError(no, f"levels must strictly decrease upward: {a}={levels[a]}, "
                                         f"{b}={levels[b]}", source)
    tree_line = covers[0][0] if covers else items[0][0] if items else 1
    try:
        tree = RootPoset(list(levels), [(a, b) for _, a, b in covers])
        spec = RingSpec(tree, levels, max_id=max_id or "m", name=name)
    except (PosetError, SpecError) as exc:
        raise SpecInvariantError(tree_line, str(exc), source) from None
    if set(spec.leaves) != set(leaves):
        stray = sorted(set(spec.leaves) - set(leaves))
        raise SpecInvariantError(tree_line, f"nodes {stray} have nothing below them", source)
    if max_id is not None and spec.levels[spec.top] == 0 and max_id != spec.top:
        raise SpecInvariantError(tree_line, f"top {spec.top} has level 0 so it is the maximal ideal", source)
    return spec


def format_ringspec(spec: RingSpec) -> str:
    out = ["ringspec 1"]
    if spec.name:
        out.append(f"name {spec.name}")
    for x in spec.leaves:
        out.append(f"leaf {x} depth={spec.levels[x]}")
    for x in spec.tree.elements:
        if x not in spec.leaves:
            out.append(f"node {x} level={spec.levels[x]}")
    for a, b in spec.tree.covers():
        out.append(f"cover {a} {b}")
    if spec.max_id != spec.top:
        out.append(f"maximal {spec.max_id}")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------- posets

def parse_posetspec(text: str, source: str = "") -> RootPoset:
    items = _header(list(_lines(text)), "poset", source)
    elements: list = []
    seen: dict = {}
    rel: list = []
    for no, toks in items:
        kw, args = toks[0], toks[1:]
        if kw == "elements":
            for t in args:
                x = _ident(t, no, source)
                if x in seen:
                    raise SpecFileError(no, f"duplicate element {x}", source)
                seen[x] = no
                elements.append(x)
        elif kw == "cover":
            if len(args) != 2:
                raise SpecFileError(no, "usage: cover <lower> <upper>", source)
            for x in args:
                if x not in seen:
                    raise SpecFileError(no, f"cover mentions undeclared element {x}", source)
            rel.append((no, args[0], args[1]))
        else:
            raise SpecFileError(no, f"unknown keyword {kw!r}", source)
    if not elements:
        raise SpecFileError(items[0][0] if items else 1, "no elements declared", source)
    try:
        return RootPoset(elements, [(a, b) for _, a, b in rel])
    except PosetError as exc:
        raise SpecFileError(rel[0][0] if rel else 1, str(exc), source) from None


def format_posetspec(P: RootPoset) -> str:
    out = ["poset 1", "elements " + " ".join(P.elements)]
    out.extend(f"cover {a} {b}" for a, b in P.covers())
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------- io

def load_ringspec(path: Union[str, Path]) -> RingSpec:
    p = Path(path)
    return parse_ringspec(p.read_text(), source=str(p))


def load_posetspec(path: Union[str, Path]) -> RootPoset:
    p = Path(path)
    return parse_posetspec(p.read_text(), source=str(p))
