"""Discourse representation structures and the statements classified from them."""

from dataclasses import dataclass, replace
from enum import Enum

from .errors import UnclassifiableDRS

UNIVERSAL = "universal"
EXISTENTIAL = "existential"
QUERY = "query"
QUANTIFIERS = (UNIVERSAL, EXISTENTIAL, QUERY)

DECLARATIVE = "declarative"
INTERROGATIVE = "interrogative"


@dataclass(frozen=True)
class Referent:
    id: int
    quant: str
    cls: str = None  # None is owl:Thing

    @property
    def is_thing(self):
        return self.cls is None


@dataclass(frozen=True)
class PropertyAtom:
    prop: str
    subj: int
    obj: int
    positive: bool = True

    def __post_init__(self):
        if self.subj == self.obj:
            raise ValueError(f"{self.prop}: subject and object must differ (x{self.subj})")

    def renamed(self, mapping):
        return replace(self, subj=mapping[self.subj], obj=mapping[self.obj])


@dataclass(frozen=True)
class Copula:
    """``subject ir A [vai B ...]`` or, when negative, ``subject nav A``."""

    subject: int
    classes: tuple
    positive: bool = True


@dataclass(frozen=True)
class DRS:
    mood: str
    referents: tuple
    atoms: tuple = ()
    head: PropertyAtom = None
    copula: Copula = None

    def __post_init__(self):
        ids = [r.id for r in self.referents]
        if sorted(ids) != list(range(1, len(ids) + 1)):
            raise ValueError(f"referent ids must be dense from 1, got {ids}")
        known = set(ids)
        for atom in self.all_atoms():
            if atom.subj not in known or atom.obj not in known:
                raise ValueError(f"atom {atom} references an undeclared referent")
        if self.copula is not None and self.copula.subject not in known:
            raise ValueError("copula subject is undeclared")
        if self.mood == INTERROGATIVE and any(r.quant == UNIVERSAL for r in self.referents):
            raise ValueError("interrogative DRS cannot have universal referents")
        if self.head is not None and self.copula is not None:
            raise ValueError("a DRS has either a verbal head or a copula, not both")

    def referent(self, rid):
        for r in self.referents:
            if r.id == rid:
                return r
        raise KeyError(rid)

    def all_atoms(self):
        return ((self.head,) if self.head is not None else ()) + tuple(self.atoms)


# --------------------------------------------------------------------------
# class expressions and statements


@dataclass(frozen=True)
class Named:
    name: str


class _ThingType:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Thing"

    def __reduce__(self):
        return (_ThingType, ())


Thing = _ThingType()


@dataclass(frozen=True)
class Some:
    prop: str
    filler: str
    inverse: bool = False


@dataclass(frozen=True)
class Not:
    inner: Some

    def __post_init__(self):
        if not isinstance(self.inner, Some):
            raise ValueError("only existential restrictions can be negated")


@dataclass(frozen=True)
class Union:
    members: tuple

    def __post_init__(self):
        if len(self.members) < 2:
            raise ValueError("a union needs at least two members")


@dataclass(frozen=True)
class ThingAnd:
    restriction: Some


@dataclass(frozen=True)
class Generalization:
    sub: object
    sup: object

    def __post_init__(self):
        if not isinstance(self.sub, (Named, ThingAnd)):
            raise ValueError("subclass must be a named class or owl:Thing and (...)")
        if isinstance(self.sub, ThingAnd) and not isinstance(self.sup, (Named, Union)):
            raise ValueError("an anonymous subclass needs a named or union superclass")


@dataclass(frozen=True)
class Disjoint:
    a: str
    b: str


@dataclass(frozen=True)
class Domain:
    prop: str
    cls: str


@dataclass(frozen=True)
class Range:
    prop: str
    cls: str


@dataclass(frozen=True)
class Rule:
    referents: tuple
    body: tuple
    head: PropertyAtom

    def __post_init__(self):
        if not self.head.positive or any(not a.positive for a in self.body):
            raise ValueError("rules contain positive atoms only")


@dataclass(frozen=True)
class Query:
    """Every referent of a query carries the ``query`` quantifier."""

    referents: tuple
    atoms: tuple

    @property
    def positive(self):
        return tuple(a for a in self.atoms if a.positive)

    @property
    def negative(self):
        return tuple(a for a in self.atoms if not a.positive)


class StatementKind(str, Enum):
    GENERALIZATION = "generalization"
    DISJOINT = "disjoint"
    DOMAIN = "domain"
    RANGE = "range"
    RULE = "rule"
    QUERY = "query"


# --------------------------------------------------------------------------
# operations


def normalize(drs):
    """Renumber referents by first occurrence and sort them by the new ids.

    Occurrence order is: copula subject, head arguments, then the remaining
    atoms in discourse order; referents never mentioned keep their relative
    order at the end.
    """
    order = []

    def see(rid):
        if rid not in order:
            order.append(rid)

    if drs.copula is not None:
        see(drs.copula.subject)
    for atom in drs.all_atoms():
        see(atom.subj)
        see(atom.obj)
    for r in drs.referents:
        see(r.id)
    mapping = {old: new for new, old in enumerate(order, 1)}
    referents = tuple(sorted((replace(r, id=mapping[r.id]) for r in drs.referents), key=lambda r: r.id))
    return DRS(
        drs.mood,
        referents,
        tuple(a.renamed(mapping) for a in drs.atoms),
        drs.head.renamed(mapping) if drs.head is not None else None,
        replace(drs.copula, subject=mapping[drs.copula.subject]) if drs.copula is not None else None,
    )


def equal_drs(a, b):
    return normalize(a) == normalize(b)


def classify(drs):
    """Map a well-formed DRS to the statement it expresses."""
    if drs.mood == INTERROGATIVE:
        if drs.head is not None or drs.copula is not None:
            raise UnclassifiableDRS("a query has neither a head atom nor a copula")
        return Query(drs.referents, drs.atoms)

    if drs.copula is not None:
        return _classify_copular(drs)
    if drs.head is not None:
        return _classify_verbal(drs)
    raise UnclassifiableDRS("declarative DRS without a main predicate")


def _classify_copular(drs):
    cop = drs.copula
    subject = drs.referent(cop.subject)
    if subject.quant != UNIVERSAL:
        raise UnclassifiableDRS("copular subject is not universally quantified")
    if not subject.is_thing:
        if drs.atoms or len(drs.referents) != 1:
            raise UnclassifiableDRS("named copular subject with extra conditions")
        if not cop.positive:
            if len(cop.classes) != 1:
                raise UnclassifiableDRS("negated copula over a disjunction")
            return Disjoint(subject.cls, cop.classes[0])
        return Generalization(Named(subject.cls), _sup(cop.classes))

    if not cop.positive or len(drs.atoms) != 1 or len(drs.referents) != 2:
        raise UnclassifiableDRS("owl:Thing subject needs exactly one restricting clause")
    atom = drs.atoms[0]
    if not atom.positive or subject.id not in (atom.subj, atom.obj):
        raise UnclassifiableDRS("restricting clause does not mention the subject")
    other = drs.referent(atom.obj if atom.subj == subject.id else atom.subj)
    inverse = atom.obj == subject.id
    if other.quant != EXISTENTIAL:
        raise UnclassifiableDRS("restricting argument is not existential")
    if other.is_thing:
        if len(cop.classes) != 1:
            raise UnclassifiableDRS("domain/range with a disjunctive class")
        return (Range if inverse else Domain)(atom.prop, cop.classes[0])
    return Generalization(ThingAnd(Some(atom.prop, other.cls, inverse)), _sup(cop.classes))


def _sup(classes):
    if len(classes) == 1:
        return Named(classes[0])
    return Union(tuple(Named(c) for c in classes))


def _classify_verbal(drs):
    head = drs.head
    subj, obj = drs.referent(head.subj), drs.referent(head.obj)
    if subj.is_thing or obj.is_thing:
        raise UnclassifiableDRS("verbal clause over owl:Thing")
    if subj.quant == UNIVERSAL and obj.quant == UNIVERSAL:
        if not head.positive or any(not a.positive for a in drs.atoms):
            raise UnclassifiableDRS("negation inside a rule")
        if any(r.is_thing for r in drs.referents):
            raise UnclassifiableDRS("untyped variable in a rule")
        return Rule(drs.referents, drs.atoms, head)
    if drs.atoms or len(drs.referents) != 2:
        raise UnclassifiableDRS("restriction with extra conditions")
    if subj.quant == UNIVERSAL and obj.quant == EXISTENTIAL:
        some = Some(head.prop, obj.cls, False)
        sub = subj
    elif obj.quant == UNIVERSAL and subj.quant == EXISTENTIAL:
        some = Some(head.prop, subj.cls, True)
        sub = obj
    else:
        raise UnclassifiableDRS("verbal clause without a universal argument")
    return Generalization(Named(sub.cls), some if head.positive else Not(some))


def statement_to_drs(statement):
    """Inverse of :func:`classify`."""
    s = statement
    if isinstance(s, Generalization):
        if isinstance(s.sub, Named):
            if isinstance(s.sup, (Named, Union)):
                return DRS(DECLARATIVE, (Referent(1, UNIVERSAL, s.sub.name),),
                           copula=Copula(1, _class_names(s.sup)))
            positive = not isinstance(s.sup, Not)
            some = s.sup.inner if isinstance(s.sup, Not) else s.sup
            if not isinstance(some, Some):
                raise ValueError(f"unsupported superclass {s.sup!r}")
            refs = (Referent(1, UNIVERSAL, s.sub.name), Referent(2, EXISTENTIAL, some.filler))
            head = PropertyAtom(some.prop, 2, 1, positive) if some.inverse else PropertyAtom(some.prop, 1, 2, positive)
            return DRS(DECLARATIVE, refs, head=head)
        some = s.sub.restriction
        refs = (Referent(1, UNIVERSAL), Referent(2, EXISTENTIAL, some.filler))
        atom = PropertyAtom(some.prop, 2, 1) if some.inverse else PropertyAtom(some.prop, 1, 2)
        return DRS(DECLARATIVE, refs, (atom,), copula=Copula(1, _class_names(s.sup)))
    if isinstance(s, Disjoint):
        return DRS(DECLARATIVE, (Referent(1, UNIVERSAL, s.a),), copula=Copula(1, (s.b,), positive=False))
    if isinstance(s, (Domain, Range)):
        refs = (Referent(1, UNIVERSAL), Referent(2, EXISTENTIAL))
        atom = PropertyAtom(s.prop, 1, 2) if isinstance(s, Domain) else PropertyAtom(s.prop, 2, 1)
        return DRS(DECLARATIVE, refs, (atom,), copula=Copula(1, (s.cls,)))
    if isinstance(s, Rule):
        return DRS(DECLARATIVE, s.referents, s.body, head=s.head)
    if isinstance(s, Query):
        return DRS(INTERROGATIVE, s.referents, s.atoms)
    raise TypeError(f"not a statement: {s!r}")


def _class_names(expr):
    if isinstance(expr, Named):
        return (expr.name,)
    return tuple(m.name for m in expr.members)


def same_statement(a, b):
    """Statement equality up to referent numbering."""
    return equal_drs(statement_to_drs(a), statement_to_drs(b))


def statement_kind(statement):
    return {
        Generalization: StatementKind.GENERALIZATION,
        Disjoint: StatementKind.DISJOINT,
        Domain: StatementKind.DOMAIN,
        Range: StatementKind.RANGE,
        Rule: StatementKind.RULE,
        Query: StatementKind.QUERY,
    }[type(statement)]


def dump(drs):
    """Debug text: one referent per line, then one condition per line."""
    d = normalize(drs)
    lines = [f"x{r.id} : {r.cls or 'Thing'} [{r.quant}]" for r in d.referents]
    if d.copula is not None:
        sign = "+" if d.copula.positive else "-"
        lines.append(f"is_a(x{d.copula.subject}, {' | '.join(d.copula.classes)}) [{sign}]")
    for atom in d.all_atoms():
        line = f"{atom.prop}(x{atom.subj}, x{atom.obj}) [{'+' if atom.positive else '-'}]"
        if atom is d.head:
            line += " head"
        lines.append(line)
    return "\n".join(lines)
