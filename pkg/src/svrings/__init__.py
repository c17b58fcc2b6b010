"""Exact tree models of local SV-rings of finite rank and their structure checks."""
from .scalars import RatFunc, gen, lex_cmp, pad_prefix, scalar_sign
from .hahn import INFINITY, ValElt, divides, parse_valelt, residue, section
from .rootsys import RootPoset, branching_points, branching_root, join, poset_iso, validate_root_system
from .svring import RingSpec, TupleElt, make_element, make_spec, sample

__all__ = [
    "RatFunc", "gen", "lex_cmp", "pad_prefix", "scalar_sign",
    "INFINITY", "ValElt", "divides", "parse_valelt", "residue", "section",
    "RootPoset", "branching_points", "branching_root", "join", "poset_iso", "validate_root_system",
    "RingSpec", "TupleElt", "make_element", "make_spec", "sample",
]
