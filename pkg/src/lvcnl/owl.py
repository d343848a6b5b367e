"""Manchester syntax, SWRL and SPARQL ASK output; Manchester subset input."""

import re

from .drs import Disjoint, Domain, Generalization, Named, Not, Query, Range, Rule, Some, ThingAnd, Union
from .errors import ManchesterSyntaxError, NotExpressible, UnsupportedConstruct

MANCHESTER = "manchester"
SWRL = "swrl"
SPARQL = "sparql"


def _expr(e):
    if isinstance(e, Named):
        return e.name
    if isinstance(e, Union):
        return " or ".join(_expr(m) for m in e.members)
    if isinstance(e, Some):
        prop = f"inverse ({e.prop})" if e.inverse else e.prop
        return f"{prop} some {e.filler}"
    if isinstance(e, Not):
        return f"not ({_expr(e.inner)})"
    if isinstance(e, ThingAnd):
        return f"owl:Thing and ({_expr(e.restriction)})"
    raise NotExpressible(f"no Manchester rendering for {e!r}")


def emit_manchester(statement):
    s = statement
    if isinstance(s, Generalization):
        return f"Class: {_expr(s.sub)} SubClassOf: {_expr(s.sup)}"
    if isinstance(s, Disjoint):
        return f"DisjointClasses: {s.a}, {s.b}"
    if isinstance(s, Domain):
        return f"ObjectProperty: {s.prop} Domain: {s.cls}"
    if isinstance(s, Range):
        return f"ObjectProperty: {s.prop} Range: {s.cls}"
    raise NotExpressible(f"{type(s).__name__} statements have no Manchester form")


def emit_swrl(statement):
    """Class atoms sorted by class name, then property atoms by property name."""
    if not isinstance(statement, Rule):
        raise NotExpressible(f"{type(statement).__name__} is not a rule")
    refs = {r.id for r in statement.referents}
    for atom in statement.body + (statement.head,):
        if atom.subj not in refs or atom.obj not in refs:
            raise NotExpressible(f"atom {atom.prop} uses an undeclared variable")
    body_vars = {r.id for r in statement.referents}
    if not {statement.head.subj, statement.head.obj} <= body_vars:
        raise NotExpressible("head variable missing from the body")
    classes = sorted((r.cls, r.id) for r in statement.referents)
    props = sorted((a.prop, a.subj, a.obj) for a in statement.body)
    body = [f"{c}(?x{i})" for c, i in classes] + [f"{p}(?x{s}, ?x{o})" for p, s, o in props]
    head = statement.head
    return f"{', '.join(body)} → {head.prop}(?x{head.subj}, ?x{head.obj})"


def emit_sparql(statement):
    """``ASK WHERE {...}`` in discourse order with one trailing NOT EXISTS block.

    The query subject is typed first; after each positive atom come the type
    triples of referents it introduced.  Negated atoms go to NOT EXISTS, but
    the referents they introduce are still typed in the positive part.
    """
    if not isinstance(statement, Query):
        raise NotExpressible(f"{type(statement).__name__} is not a query")
    classes = {r.id: r.cls for r in statement.referents}
    if any(c is None for c in classes.values()):
        raise NotExpressible("untyped query variable")
    typed = []
    parts = []

    def type_triple(rid):
        if rid not in typed:
            typed.append(rid)
            parts.append(f"?x{rid} rdf:type {classes[rid]}")

    if statement.referents:
        type_triple(statement.referents[0].id)
    for atom in statement.atoms:
        if atom.positive:
            parts.append(f"?x{atom.subj} {atom.prop} ?x{atom.obj}")
        for rid in (atom.subj, atom.obj):
            type_triple(rid)
    for r in statement.referents:
        type_triple(r.id)
    negative = statement.negative
    if negative:
        inner = ". ".join(f"?x{a.subj} {a.prop} ?x{a.obj}" for a in negative)
        parts.append(f"NOT EXISTS {{{inner}}}")
        if not {v for a in negative for v in (a.subj, a.obj)} <= set(typed):
            raise NotExpressible("NOT EXISTS uses a variable unbound in the positive part")
    return f"ASK WHERE {{{'. '.join(parts)}}}"


def emit_auto(statement):
    """(formalism tag, text) in the first formalism that can express ``statement``."""
    if isinstance(statement, Rule):
        return SWRL, emit_swrl(statement)
    if isinstance(statement, Query):
        return SPARQL, emit_sparql(statement)
    return MANCHESTER, emit_manchester(statement)


def emit(statement, formalism):
    if formalism == "auto":
        return emit_auto(statement)[1]
    return {MANCHESTER: emit_manchester, SWRL: emit_swrl, SPARQL: emit_sparql}[formalism](statement)


# --------------------------------------------------------------------------
# Manchester import

_TOKEN_RE = re.compile(r"\s*(?:(\(|\)|,)|([A-Za-z_][\w:.-]*:?))")
_UNSUPPORTED = {"min", "max", "exactly", "only", "value", "that", "and", "Self", "EquivalentTo:",
                "Individual:", "Types:", "Facts:", "SubPropertyOf:", "Characteristics:", "InverseOf:",
                "DataProperty:", "EquivalentClasses:", "SameAs:", "DifferentFrom:", "SubClassOf:", "Class:",
                "DisjointWith:", "DisjointUnionOf:", "HasKey:"}


def _lex(line, lineno):
    tokens = []
    pos = 0
    text = line.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip()[:1].isdigit():
                raise UnsupportedConstruct("cardinality restrictions are not supported", lineno)
            raise ManchesterSyntaxError(f"unexpected character {text[pos:].strip()[:1]!r}", lineno)
        tokens.append(m.group(1) or m.group(2))
        pos = m.end()
    return tokens


class _Reader:
    def __init__(self, tokens, lineno):
        self.toks = tokens
        self.i = 0
        self.line = lineno

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None:
            raise ManchesterSyntaxError(f"unexpected end of line, expected {expected or 'more input'}", self.line)
        if expected is not None and tok != expected:
            self.fail(f"expected {expected!r}, found {tok!r}")
        self.i += 1
        return tok

    def fail(self, message):
        tok = self.peek()
        if tok in ("min", "max", "exactly"):
            raise UnsupportedConstruct("cardinality restrictions are not supported", self.line)
        if tok in _UNSUPPORTED:
            raise UnsupportedConstruct(f"{tok!r} is outside the supported subset", self.line)
        raise ManchesterSyntaxError(message, self.line)

    def name(self):
        tok = self.peek()
        if tok is None or tok in ("(", ")", ",") or tok in _UNSUPPORTED or tok in ("some", "or", "not", "inverse"):
            self.fail(f"expected a name, found {tok!r}")
        return self.take()

    def done(self):
        if self.peek() is not None:
            self.fail(f"unexpected {self.peek()!r}")

    def restriction(self):
        if self.peek() == "inverse":
            self.take()
            self.take("(")
            prop = self.name()
            self.take(")")
            inverse = True
        else:
            prop = self.name()
            inverse = False
        if self.peek() != "some":
            self.fail(f"expected 'some', found {self.peek()!r}")
        self.take()
        return Some(prop, self.name(), inverse)

    def superclass(self):
        tok = self.peek()
        if tok == "not":
            self.take()
            self.take("(")
            inner = self.restriction()
            self.take(")")
            return Not(inner)
        if tok == "inverse" or (self.i + 1 < len(self.toks) and self.toks[self.i + 1] == "some"):
            return self.restriction()
        names = [self.name()]
        while self.peek() == "or":
            self.take()
            names.append(self.name())
        if len(names) == 1:
            return Named(names[0])
        return Union(tuple(Named(n) for n in names))


def _axiom(tokens, lineno):
    r = _Reader(tokens, lineno)
    head = r.take()
    if head == "Class:":
        if r.peek() == "owl:Thing":
            r.take()
            r.take("and")
            r.take("(")
            sub = ThingAnd(r.restriction())
            r.take(")")
        else:
            sub = Named(r.name())
        r.take("SubClassOf:")
        sup = r.superclass()
        r.done()
        if isinstance(sub, ThingAnd) and not isinstance(sup, (Named, Union)):
            raise UnsupportedConstruct("anonymous subclass with a restricted superclass", lineno)
        return Generalization(sub, sup)
    if head == "DisjointClasses:":
        a = r.name()
        r.take(",")
        b = r.name()
        if r.peek() == ",":
            raise UnsupportedConstruct("only pairwise disjointness is supported", lineno)
        r.done()
        return Disjoint(a, b)
    if head == "ObjectProperty:":
        prop = r.name()
        kind = r.take()
        if kind not in ("Domain:", "Range:"):
            r.i -= 1
            r.fail(f"expected Domain: or Range:, found {kind!r}")
        cls = r.name()
        r.done()
        return (Domain if kind == "Domain:" else Range)(prop, cls)
    r.i = 0
    r.fail(f"unknown axiom frame {head!r}")


def import_manchester(text):
    """Statements from the emitted Manchester subset, one axiom per line."""
    statements = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        statements.append(_axiom(_lex(stripped, lineno), lineno))
    return statements


def import_manchester_line(line, lineno=1):
    return _axiom(_lex(line.strip(), lineno), lineno)
