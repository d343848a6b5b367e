"""Canonical controlled Latvian and ACE linearization of statements.

There is exactly one surface per statement and number: first synonyms,
``kas``/``ko`` for nominative/accusative relatives and the ``kurš`` series
for locatives, participles with an explicit auxiliary, ``šis`` on every
anaphor, ``tas``/``kaut kas`` for the universal and unrestricted classes.
"""

from dataclasses import dataclass

from .drs import Disjoint, Domain, Generalization, Named, Not, PropertyAtom, Query, Range, Rule, ThingAnd, Union
from .errors import Ambiguous, NotLinearizable, UnknownTerm
from .function_words import function_form
from .parser import analyze, tokenize

# NP kinds understood by plan_np
UNIVERSAL = "universal"
NEGATIVE_UNIVERSAL = "negative-universal"
EXISTENTIAL = "existential"
ANAPHOR = "anaphor"
THING = "thing"
SOMETHING = "something"

QUERY_SUBJECT = "query-subject"


@dataclass(frozen=True)
class NPPlan:
    determiner: str
    term: str
    case: str
    number: str
    insert_rel_clause: bool = False

    @property
    def text(self):
        return " ".join(w for w in (self.determiner, self.term) if w)


def plan_np(lexicon, cls, kind, case, number="SG", role=None, has_rel=False, negative=False):
    """Choose determiner and form for one NP.

    ``cls`` is ignored for ``thing`` and ``something``, which are pronouns.
    """
    if kind == THING:
        return NPPlan(function_form("tas", "NOM", number, "masc"), None, case, number, has_rel)
    if kind == SOMETHING:
        return NPPlan(function_form("kaut kas", case), None, case, "SG", has_rel)
    term = _term(lexicon, cls)
    surface = term.realizations[0].get((case, number))
    if surface is None:
        raise NotLinearizable(f"{cls} lacks the {case}.{number} form")
    gender = term.gender
    det = None
    if kind == UNIVERSAL:
        det = function_form("ikviens" if number == "SG" else "visi", case, number, gender)
    elif kind == NEGATIVE_UNIVERSAL:
        det = function_form("neviens", case, number, gender) if number == "SG" else None
    elif kind == ANAPHOR:
        det = function_form("šis", case, number, gender)
    elif kind == EXISTENTIAL:
        if number == "SG":
            if role == QUERY_SUBJECT:
                det = function_form("kāds", case, number, gender)
            elif not has_rel:
                det = function_form("neviens" if negative else "kāds", case, number, gender)
    else:
        raise ValueError(f"unknown NP kind {kind!r}")
    return NPPlan(det, surface, case, number, has_rel)


def _term(lexicon, cls):
    try:
        return lexicon.term(cls)
    except UnknownTerm as exc:
        raise NotLinearizable(exc.message) from None


def _prop(lexicon, pid):
    try:
        return lexicon.prop(pid)
    except UnknownTerm as exc:
        raise NotLinearizable(exc.message) from None


def _slots(prop, subj, obj):
    """(nominative, complement) referents for atom ``prop(subj, obj)``."""
    if prop.kind == "verb" or prop.direction == "subject-domain":
        return subj, obj
    return obj, subj


def _gender(lexicon, cls):
    return "masc" if cls is None else _term(lexicon, cls).gender


def _verb_group(prop, positive, gender, number):
    if prop.kind == "verb":
        return (prop.verbs if positive else prop.neg_verbs)[0]
    if prop.kind == "locative":
        participle = prop.participle(gender, number)
        if participle is None:
            raise NotLinearizable(f"{prop.property_id} lacks a {gender} {number} participle")
        return ("ir " if positive else "nav ") + participle
    raise NotLinearizable(f"role property {prop.property_id} cannot head a clause here")


def _sentence(words, end="."):
    text = " ".join(words).replace(" ,", ",") + end
    return text[0].upper() + text[1:]


# --------------------------------------------------------------------------
# Latvian


class _LV:
    def __init__(self, lexicon, number):
        self.lex = lexicon
        self.num = number

    def nominals(self, classes):
        return " vai ".join(plan_np(self.lex, c, EXISTENTIAL, "NOM", self.num, has_rel=True).text for c in classes)

    def rel_clause(self, rel, atom, other, status, has_rel=False):
        """Words of ``, kas V X`` where ``rel`` = (cls, id) is the antecedent.

        ``status`` of the other argument is ``new``, ``anaphor`` or ``something``.
        """
        prop = _prop(self.lex, atom.prop)
        rel_cls, rel_id = rel
        other_cls, other_id = other
        nom_id, _ = _slots(prop, atom.subj, atom.obj)
        rel_is_nom = rel_id == nom_id
        other_case = prop.complement_case if rel_is_nom else "NOM"
        if rel_is_nom:
            pronoun = "kas"
        elif prop.kind == "verb":
            pronoun = "ko"
        elif prop.kind == "locative":
            pronoun = function_form("kurš", "LOC", self.num, _gender(self.lex, rel_cls))
        else:
            raise NotLinearizable(f"role property {prop.property_id} in a relative clause")

        if status == SOMETHING:
            np_plan = plan_np(self.lex, None, SOMETHING, other_case)
            nom_gender, nom_number = ("masc", self.num) if rel_is_nom else ("masc", "SG")
        else:
            kind = ANAPHOR if status == ANAPHOR else EXISTENTIAL
            np_plan = plan_np(self.lex, other_cls, kind, other_case, self.num, has_rel=has_rel,
                              negative=not atom.positive)
            nom_gender = _gender(self.lex, rel_cls if rel_is_nom else other_cls)
            nom_number = self.num
        vg = _verb_group(prop, atom.positive, nom_gender, nom_number)
        pre_verbal = status == ANAPHOR or (status == SOMETHING and other_case == "NOM")
        if pre_verbal:
            return [",", pronoun, np_plan.text, vg]
        return [",", pronoun, vg, np_plan.text]

    def generalization(self, s):
        if isinstance(s.sub, ThingAnd):
            some = s.sub.restriction
            subj, obj = (2, 1) if some.inverse else (1, 2)
            words = [plan_np(self.lex, None, THING, "NOM", self.num).text]
            words += self.rel_clause((None, 1), PropertyAtom(some.prop, subj, obj), (some.filler, 2), "new")
            words += [",", "ir", self.nominals(_classes(s.sup))]
            return _sentence(words)

        sub = s.sub.name
        if isinstance(s.sup, (Named, Union)):
            words = [plan_np(self.lex, sub, UNIVERSAL, "NOM", self.num).text, "ir", self.nominals(_classes(s.sup))]
            return _sentence(words)

        negative = isinstance(s.sup, Not)
        some = s.sup.inner if negative else s.sup
        prop = _prop(self.lex, some.prop)
        univ_kind = NEGATIVE_UNIVERSAL if negative else UNIVERSAL
        # referent 1 = the universal class, 2 = the filler
        subj, obj = (2, 1) if some.inverse else (1, 2)
        nom_id, _ = _slots(prop, subj, obj)
        univ_is_nom = nom_id == 1
        comp_case = prop.complement_case
        univ = plan_np(self.lex, sub, univ_kind, "NOM" if univ_is_nom else comp_case, self.num)
        exist = plan_np(self.lex, some.filler, EXISTENTIAL, comp_case if univ_is_nom else "NOM", self.num,
                        negative=negative)
        if prop.kind == "role":
            copula = "nav" if negative else "ir"
            role = prop.role_forms[("NOM", self.num)]
            if univ_is_nom:
                return _sentence([univ.text, copula, exist.text, role])
            return _sentence([univ.text, role, copula, exist.text])
        nom_cls = sub if univ_is_nom else some.filler
        vg = _verb_group(prop, not negative, _gender(self.lex, nom_cls), self.num)
        return _sentence([univ.text, vg, exist.text])

    def domain_range(self, s):
        prop = _prop(self.lex, s.prop)
        if prop.kind != "verb":
            raise NotLinearizable(f"domain/range of non-verbal property {s.prop}")
        atom = PropertyAtom(s.prop, 1, 2) if isinstance(s, Domain) else PropertyAtom(s.prop, 2, 1)
        words = [plan_np(self.lex, None, THING, "NOM", self.num).text]
        words += self.rel_clause((None, 1), atom, (None, 2), SOMETHING)
        words += [",", "ir", self.nominals((s.cls,))]
        return _sentence(words)

    def disjoint(self, s):
        return _sentence([plan_np(self.lex, s.a, NEGATIVE_UNIVERSAL, "NOM", self.num).text, "nav",
                          self.nominals((s.b,))])

    def chain(self, referents, main, atoms):
        classes = {r.id: r.cls for r in referents}
        words = []
        for rel_id, atom, other_id, status, has_rel in _chain_plan(classes, main, atoms):
            words += self.rel_clause((classes[rel_id], rel_id), atom, (classes[other_id], other_id), status, has_rel)
        return words

    def rule(self, s):
        classes = {r.id: r.cls for r in s.referents}
        head = s.head
        prop = _prop(self.lex, head.prop)
        nom_id, comp_id = _slots(prop, head.subj, head.obj)
        start = _chain_start(s.body, (comp_id, nom_id))
        first, last = (comp_id, nom_id) if start == nom_id else (nom_id, comp_id)
        case = {nom_id: "NOM", comp_id: prop.complement_case}
        vg = _verb_group(prop, True, _gender(self.lex, classes[nom_id]), self.num)
        words = [plan_np(self.lex, classes[first], UNIVERSAL, case[first], self.num).text, vg,
                 plan_np(self.lex, classes[last], UNIVERSAL, case[last], self.num).text]
        words += self.chain(s.referents, (first, last), s.body)
        return _sentence(words)

    def query(self, s):
        start = _query_start(s)
        classes = {r.id: r.cls for r in s.referents}
        subject = plan_np(self.lex, classes[start], EXISTENTIAL, "NOM", self.num, role=QUERY_SUBJECT)
        words = ["vai", "ir", subject.text] + self.chain(s.referents, (start,), s.atoms)
        return _sentence(words, "?")


def _classes(expr):
    if isinstance(expr, Named):
        return (expr.name,)
    if isinstance(expr, Union):
        return tuple(m.name for m in expr.members)
    raise NotLinearizable(f"unsupported superclass {expr!r}")


def _chain_start(body, candidates):
    if not body:
        return candidates[0]
    first = body[0]
    for c in candidates:
        if c in (first.subj, first.obj):
            return c
    raise NotLinearizable("rule body is not attached to the head")


def _query_start(s):
    ids = [r.id for r in s.referents]
    if not s.atoms:
        if len(ids) != 1:
            raise NotLinearizable("query referents are not connected")
        return ids[0]
    first = s.atoms[0]
    for rid in ids:
        if rid in (first.subj, first.obj):
            return rid
    raise NotLinearizable("query is not connected")


def _chain_plan(classes, main, atoms):
    """Order a body into a chain of relative clauses.

    ``main`` lists the main-clause referents in surface order; the chain
    hangs on the last one.  Each clause attaches to the NP introduced by the
    previous clause; a clause whose other argument is already known uses an
    anaphor and must end the chain, and the anaphor must resolve back to
    the intended referent.
    """
    introduced = [(rid, True) for rid in main]
    current = main[-1]
    plan = []
    for idx, atom in enumerate(atoms):
        if current not in (atom.subj, atom.obj):
            raise NotLinearizable("relative clauses do not form a chain")
        other = atom.obj if atom.subj == current else atom.subj
        if other in {rid for rid, _ in introduced}:
            if idx != len(atoms) - 1:
                raise NotLinearizable("an anaphoric clause must end the chain")
            candidates = [rid for rid, accessible in introduced
                          if accessible and classes[rid] == classes[other] and rid != current]
            if not candidates or candidates[-1] != other:
                raise NotLinearizable(f"anaphor to x{other} would not resolve back to it")
            plan.append((current, atom, other, ANAPHOR, False))
        else:
            plan.append((current, atom, other, "new", idx != len(atoms) - 1))
            introduced.append((other, atom.positive))
            current = other
    if len(introduced) != len(classes):
        raise NotLinearizable("statement has referents outside the clause chain")
    return plan


def linearize_lv(statement, lexicon, number="SG"):
    """The canonical controlled-Latvian sentence for ``statement``.

    Plural feminine nouns share their nominative and accusative forms, so
    a plural clause between two of them can be read in either direction.
    Such plural renderings are refused; the singular is always available.
    """
    number = number.upper()
    text = _linearize(statement, _LV(lexicon, number))
    if number == "PL":
        try:
            analyze(tokenize(text, lexicon), lexicon)
        except Ambiguous:
            raise NotLinearizable("the plural sentence would be ambiguous; use the singular") from None
    return text


def _linearize(s, lv):
    if isinstance(s, Generalization):
        return lv.generalization(s)
    if isinstance(s, Disjoint):
        return lv.disjoint(s)
    if isinstance(s, (Domain, Range)):
        return lv.domain_range(s)
    if isinstance(s, Rule):
        return lv.rule(s)
    if isinstance(s, Query):
        return lv.query(s)
    raise TypeError(f"not a statement: {s!r}")


# --------------------------------------------------------------------------
# ACE


def _article(noun):
    return ("an " if noun[:1].lower() in "aeiou" else "a ") + noun


def _negate_passive(phrase):
    head, _, rest = phrase.partition(" ")
    return f"{head} not {rest}" if head in ("is", "are") else f"not {phrase}"


def _base_form(verb):
    if verb.endswith(("ches", "shes", "sses", "xes", "zes")):
        return verb[:-2]
    return verb[:-1] if verb.endswith("s") else verb


class _ACE:
    def __init__(self, lexicon):
        self.lex = lexicon

    def noun(self, cls):
        term = _term(self.lex, cls)
        if not term.ace_sg:
            raise NotLinearizable(f"{cls} has no ACE surface")
        return term.ace_sg

    def active(self, prop, positive=True):
        if positive:
            return prop.ace_active
        first, _, rest = prop.ace_active.partition(" ")
        return " ".join(w for w in ("does not", _base_form(first), rest) if w)

    def passive(self, prop, positive=True):
        if not prop.ace_passive:
            raise NotLinearizable(f"{prop.property_id} has no ACE passive")
        return prop.ace_passive if positive else _negate_passive(prop.ace_passive)

    def predicate(self, prop, rel_is_subject, positive):
        return self.active(prop, positive) if rel_is_subject else self.passive(prop, positive)

    def nominals(self, classes):
        return " or is ".join(_article(self.noun(c)) for c in classes)

    def generalization(self, s):
        if isinstance(s.sub, ThingAnd):
            some = s.sub.restriction
            prop = _prop(self.lex, some.prop)
            if prop.kind == "role":
                raise NotLinearizable("role property in an anonymous class")
            vp = self.predicate(prop, not some.inverse, True)
            return f"Everything that {vp} {_article(self.noun(some.filler))} is {self.nominals(_classes(s.sup))}."
        sub = self.noun(s.sub.name)
        if isinstance(s.sup, (Named, Union)):
            return f"Every {sub} is {self.nominals(_classes(s.sup))}."
        negative = isinstance(s.sup, Not)
        some = s.sup.inner if negative else s.sup
        prop = _prop(self.lex, some.prop)
        filler = _article(self.noun(some.filler))
        if prop.kind == "role":
            role = prop.ace_active or prop.role_forms[("NOM", "SG")]
            if some.inverse:
                return f"{'No' if negative else 'Every'} {sub} is {_article(role)} of {filler}."
            return f"For every {sub} its {role} is {'not ' if negative else ''}{filler}."
        vp = self.active(prop) if not some.inverse else self.passive(prop)
        return f"{'No' if negative else 'Every'} {sub} {vp} {filler}."

    def domain_range(self, s):
        prop = _prop(self.lex, s.prop)
        if prop.kind == "role":
            raise NotLinearizable("domain/range of a role property")
        vp = self.predicate(prop, isinstance(s, Domain), True)
        return f"Everything that {vp} something is {self.nominals((s.cls,))}."

    def chain(self, referents, main, atoms):
        classes = {r.id: r.cls for r in referents}
        words = []
        for rel_id, atom, other_id, status, _ in _chain_plan(classes, main, atoms):
            prop = _prop(self.lex, atom.prop)
            if prop.kind == "role":
                raise NotLinearizable("role property in a relative clause")
            noun = self.noun(classes[other_id])
            np = f"the {noun}" if status == ANAPHOR else _article(noun)
            words.append(f"that {self.predicate(prop, atom.subj == rel_id, atom.positive)} {np}")
        return words

    def rule(self, s):
        classes = {r.id: r.cls for r in s.referents}
        head = s.head
        prop = _prop(self.lex, head.prop)
        if prop.kind == "role":
            raise NotLinearizable("role property as a rule head")
        start = _chain_start(s.body, (head.obj, head.subj))
        if start == head.subj:
            first, last, vp = head.obj, head.subj, self.passive(prop)
        else:
            first, last, vp = head.subj, head.obj, self.active(prop)
        words = [f"Every {self.noun(classes[first])}", vp, f"every {self.noun(classes[last])}"]
        words += self.chain(s.referents, (first, last), s.body)
        return " ".join(words) + "."

    def query(self, s):
        start = _query_start(s)
        classes = {r.id: r.cls for r in s.referents}
        words = ["Is there", _article(self.noun(classes[start]))] + self.chain(s.referents, (start,), s.atoms)
        return " ".join(words) + "?"


def linearize_ace(statement, lexicon):
    """ACE rendering of ``statement`` (always singular)."""
    ace = _ACE(lexicon)
    s = statement
    if isinstance(s, Generalization):
        return ace.generalization(s)
    if isinstance(s, Disjoint):
        return f"No {ace.noun(s.a)} is {_article(ace.noun(s.b))}."
    if isinstance(s, (Domain, Range)):
        return ace.domain_range(s)
    if isinstance(s, Rule):
        return ace.rule(s)
    if isinstance(s, Query):
        return ace.query(s)
    raise TypeError(f"not a statement: {s!r}")
