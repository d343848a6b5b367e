"""Controlled Latvian for ontology authoring.

Typical use::

    from lvcnl import load_sample_lexicon, parse_text, emit_auto, linearize_lv

    lex = load_sample_lexicon()
    result = parse_text("Ikviens profesors ir pasniedzējs.", lex)
    emit_auto(result.statement)   # ('manchester', 'Class: Professor SubClassOf: Teacher')
"""

from .drs import (
    DRS,
    Copula,
    Disjoint,
    Domain,
    Generalization,
    Named,
    Not,
    PropertyAtom,
    Query,
    Range,
    Referent,
    Rule,
    Some,
    Thing,
    ThingAnd,
    Union,
    classify,
    dump,
    equal_drs,
    normalize,
    same_statement,
    statement_to_drs,
)
from .errors import CNLError
from .generate import linearize_ace, linearize_lv, plan_np
from .lexicon import Lexicon, inflect, load_lexicon, load_sample_lexicon, lookup, validate
from .morphology import generate_paradigm
from .owl import emit_auto, emit_manchester, emit_sparql, emit_swrl, import_manchester
from .parser import analyze, parse, parse_text, resolve_anaphors, tokenize

__version__ = "0.1.0"
