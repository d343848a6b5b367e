"""Controlled Latvian to DRS.

The grammar is a set of clause patterns parsed by backtracking recursive
descent.  Every pattern is tried for both grammatical numbers (a sentence
is wholly singular or wholly plural) and all complete readings are kept, so
ambiguity is reported instead of resolved silently.

Given/new information follows word order: inside a relative clause a bare
or demonstrative NP before the verb is an anaphor, an NP after the verb
introduces a new referent.  Explicit indefinites (``kāds``, ``kaut kas``)
are new wherever they stand.
"""

import re
from dataclasses import dataclass, field, replace

from . import function_words as fw
from .drs import (DECLARATIVE, DRS, EXISTENTIAL, INTERROGATIVE, QUERY, UNIVERSAL, Copula, PropertyAtom,
                  Referent, classify, normalize)
from .errors import AgreementViolation, Ambiguous, NoParse, UnclassifiableDRS, UnknownToken, UnresolvedAnaphor

PUNCTUATION = (",", ".", "?")
_WORD_RE = re.compile(r"[^\s,.?]+|[,.?]")


@dataclass(frozen=True)
class Token:
    surface: str
    index: int
    column: int
    analyses: frozenset = frozenset()

    @property
    def is_punct(self):
        return self.surface in PUNCTUATION


def tokenize(text, lexicon):
    """Split on whitespace, detach punctuation and merge multi-word entries.

    Multi-word terms may be written with spaces or underscores; the longest
    sequence known to the lexicon wins.
    """
    raw = [(m.group(), m.start() + 1) for m in _WORD_RE.finditer(text)]
    tokens = []
    i = 0
    while i < len(raw):
        surface, column = raw[i]
        if surface in PUNCTUATION:
            tokens.append(Token(surface, len(tokens), column))
            i += 1
            continue
        for n in range(min(lexicon.max_words, len(raw) - i), 0, -1):
            words = [w for w, _ in raw[i:i + n]]
            if any(w in PUNCTUATION for w in words):
                continue
            if lexicon.known(" ".join(words)):
                analyses = lexicon.lookup(words)
                # function-word phrases ("kaut kas", "vai nu") keep their space
                glue = " " if all(a.kind == "func" for a in analyses) else "_"
                tokens.append(Token(glue.join(words), len(tokens), column, analyses))
                i += n
                break
        else:
            raise UnknownToken(surface, position=len(tokens), column=column)
    return tokens


# --------------------------------------------------------------------------
# proto-DRS and anaphora


@dataclass(frozen=True)
class Anaphor:
    """A pre-verbal definite NP awaiting its antecedent."""

    cls: str
    position: int
    surface: str
    before: int  # referents introduced earlier in the sentence
    exclude: int = None  # the relative clause's own referent


@dataclass(frozen=True)
class ProtoReferent:
    ref: Referent
    accessible: bool = True


@dataclass(frozen=True)
class ProtoAtom:
    prop: str
    subj: object
    obj: object
    positive: bool = True


@dataclass(frozen=True)
class ProtoDRS:
    mood: str
    referents: tuple
    atoms: tuple = ()
    head: ProtoAtom = None
    copula: Copula = None


def resolve_antecedent(anaphor, referents):
    """Most recent earlier referent of the same class, introduced in positive context."""
    for pr in reversed(referents[:anaphor.before]):
        if pr.accessible and pr.ref.cls == anaphor.cls and pr.ref.id != anaphor.exclude:
            return pr.ref.id
    return None


def resolve_anaphors(proto):
    """Bind every :class:`Anaphor` argument and return a plain DRS."""

    def bind(arg):
        if not isinstance(arg, Anaphor):
            return arg
        rid = resolve_antecedent(arg, proto.referents)
        if rid is None:
            raise UnresolvedAnaphor(f"no antecedent for {arg.surface!r}", position=arg.position)
        return rid

    def atom(a):
        return PropertyAtom(a.prop, bind(a.subj), bind(a.obj), a.positive)

    return DRS(
        proto.mood,
        tuple(pr.ref for pr in proto.referents),
        tuple(atom(a) for a in proto.atoms),
        atom(proto.head) if proto.head is not None else None,
        proto.copula,
    )


# --------------------------------------------------------------------------
# parser state


@dataclass(frozen=True)
class NP:
    kind: str  # universal | negative | indefinite | demonstrative | bare | thing | something
    cls: str
    case: str
    number: str
    gender: str
    head: int
    start: int


@dataclass(frozen=True)
class VerbGroup:
    prop: object
    positive: bool
    index: int
    participle: tuple = None  # (gender, number, token index)

    @property
    def comp_case(self):
        return self.prop.complement_case


@dataclass(frozen=True)
class Clause:
    """Where a clause's verb and arguments stand, for word-order checks."""

    verb: int
    args: tuple  # (token index, role, referent id or Anaphor)


@dataclass(frozen=True)
class _State:
    refs: tuple = ()
    atoms: tuple = ()
    head: ProtoAtom = None
    copula: Copula = None
    viol: tuple = ()
    clauses: tuple = ()

    def add_ref(self, quant, cls, accessible=True):
        rid = len(self.refs) + 1
        return replace(self, refs=self.refs + (ProtoReferent(Referent(rid, quant, cls), accessible),)), rid

    def violate(self, *positions):
        return replace(self, viol=self.viol + tuple(positions)) if positions else self


@dataclass
class ParseResult:
    drs: DRS
    statement: object
    number: str
    tokens: list
    clauses: tuple = field(default=())


_UNIV_SG = {"ikviens": "universal", "katrs": "universal"}
_UNIV_PL = {"visi": "universal"}
_NEG = {"neviens": "negative"}
_INDEF = {"kāds": "indefinite"}
_DEM = {"šis": "demonstrative"}


class _Parser:
    def __init__(self, tokens, lexicon, number, relaxed=False):
        self.toks = tokens
        self.lex = lexicon
        self.num = number
        self.relaxed = relaxed
        self.furthest = 0

    # -- token level -------------------------------------------------------

    def tok(self, i):
        self.furthest = max(self.furthest, i)
        return self.toks[i] if i < len(self.toks) else None

    def punct(self, i, ch):
        t = self.tok(i)
        return t is not None and t.surface == ch

    def word(self, i, lemma):
        t = self.tok(i)
        return t is not None and any(a.kind == "func" and a.id == lemma for a in t.analyses)

    @staticmethod
    def _fits(a, case, number, gender):
        return ((case is None or a.case is None or a.case == case)
                and (number is None or a.number is None or a.number == number)
                and (gender is None or a.gender is None or a.gender == gender))

    def func(self, i, lemmas, case=None, number=None, gender=None):
        """Yield (lemma, agrees) for function words at ``i`` among ``lemmas``."""
        t = self.tok(i)
        if t is None:
            return
        seen = {}
        for a in t.analyses:
            if a.kind == "func" and a.id in lemmas:
                seen[a.id] = seen.get(a.id, False) or self._fits(a, case, number, gender)
        for lemma, ok in sorted(seen.items()):
            if ok or self.relaxed:
                yield lemma, ok

    def noun(self, i, case, number):
        """Yield (class id, gender, agrees) for the term at ``i``."""
        t = self.tok(i)
        if t is None:
            return
        found = {}
        for a in t.analyses:
            if a.kind == "term":
                ok = a.case == case and a.number == number
                found[(a.id, a.gender)] = found.get((a.id, a.gender), False) or ok
        for (cls, gender), ok in sorted(found.items()):
            if ok or self.relaxed:
                yield cls, gender, ok

    def role_noun(self, i, case, number):
        t = self.tok(i)
        if t is None:
            return
        props = {}
        for a in t.analyses:
            if a.kind == "role":
                props[a.id] = props.get(a.id, False) or (a.case == case and a.number == number)
        for pid, ok in sorted(props.items()):
            if ok or self.relaxed:
                yield self.lex.prop(pid), ok

    # -- phrases -----------------------------------------------------------

    def np(self, i, cases, dets, bare=True):
        """Yield (end, NP, violations) for ``[det] term`` in any of ``cases``."""
        for case in cases:
            for lemma, _ in self.func(i, dets):
                for cls, gender, ok_noun in self.noun(i + 1, case, self.num):
                    ok_det = any(a.kind == "func" and a.id == lemma and self._fits(a, case, self.num, gender)
                                 for a in self.toks[i].analyses)
                    viol = tuple(p for p, ok in ((i, ok_det), (i + 1, ok_noun)) if not ok)
                    if viol and not self.relaxed:
                        continue
                    yield i + 2, NP(dets[lemma], cls, case, self.num, gender, i + 1, i), viol
            if bare:
                for cls, gender, ok_noun in self.noun(i, case, self.num):
                    yield i + 1, NP("bare", cls, case, self.num, gender, i, i), () if ok_noun else (i,)

    def something(self, i, cases):
        """``kaut kas`` / ``kāds`` standing alone for an unrestricted thing."""
        for case in cases:
            for lemma, ok in self.func(i, fw.SOMETHING_PRONOUNS, case, "SG", "masc"):
                yield i + 1, NP("something", None, case, None, "masc", i, i), () if ok else (i,)

    def verb_group(self, i):
        t = self.tok(i)
        if t is None:
            return
        for a in sorted(t.analyses, key=repr):
            if a.kind == "verb":
                yield i + 1, VerbGroup(self.lex.prop(a.id), a.positive, i)
            elif a.kind == "participle":
                yield i + 1, VerbGroup(self.lex.prop(a.id), True, i, (a.gender, a.number, i))
        for aux, positive in (("ir", True), ("nav", False)):
            if self.word(i, aux):
                t2 = self.tok(i + 1)
                if t2 is None:
                    continue
                for a in sorted(t2.analyses, key=repr):
                    if a.kind == "participle":
                        yield i + 2, VerbGroup(self.lex.prop(a.id), positive, i, (a.gender, a.number, i + 1))

    def participle_agrees(self, vg, gender, number):
        if vg.participle is None:
            return ()
        pg, pn, idx = vg.participle
        ok = pg == gender and pn == (number or "SG")
        return () if ok else (idx,)

    def _univ(self):
        return _UNIV_SG if self.num == "SG" else _UNIV_PL

    def _existential_dets(self, positive):
        return dict(_INDEF) if positive else (dict(_NEG) if self.num == "SG" else {})

    def rel_pronoun(self, i, gender, number):
        """Yield (case, violations) for ``kas``/``ko`` or an inflected ``kurš``."""
        t = self.tok(i)
        if t is None:
            return
        cases = {}
        for a in t.analyses:
            if a.kind != "func":
                continue
            if a.id == "kas":
                cases[a.case] = cases.get(a.case, False) or True
            elif a.id == "kurš":
                cases[a.case] = cases.get(a.case, False) or self._fits(a, a.case, number, gender)
        for case, ok in sorted(cases.items()):
            if ok or self.relaxed:
                yield case, () if ok else (i,)

    # -- relative clauses --------------------------------------------------

    def rel_clause(self, i, st, ante, quant, allow_neg, chain, something_ok):
        """Relative clause at ``i`` attached to ``ante`` = (id, gender, number).

        Yields (end, state) after the clause and after every possible
        nested continuation.
        """
        ante_id, ante_gender, ante_number = ante
        for rel_case, v_rel in self.rel_pronoun(i, ante_gender, ante_number):
            k0 = i + 1
            pre_options = [(k0, None, ())]
            pre_options += list(self.np(k0, ("NOM", "ACC", "LOC"), {**_DEM, **_INDEF}))
            if something_ok:
                pre_options += list(self.something(k0, ("NOM", "ACC")))
            for k, pre, v_pre in pre_options:
                for m, vg in self.verb_group(k):
                    if not vg.positive and not allow_neg:
                        continue
                    if vg.prop.kind == "role":
                        continue
                    if rel_case == vg.comp_case:
                        other_case = "NOM"
                    elif rel_case == "NOM":
                        other_case = vg.comp_case
                    else:
                        continue
                    if pre is not None:
                        if pre.case != other_case:
                            continue
                        posts = [(m, None, ())]
                    else:
                        posts = list(self.np(m, (other_case,), self._existential_dets(vg.positive)))
                        if something_ok:
                            posts += list(self.something(m, (other_case,)))
                    for j, post, v_post in posts:
                        other = pre if pre is not None else post
                        if rel_case == "NOM":
                            v_part = self.participle_agrees(vg, ante_gender, ante_number)
                        else:
                            v_part = self.participle_agrees(vg, other.gender, other.number)
                        s = st.violate(*(v_rel + v_pre + v_post + v_part))
                        if pre is not None and pre.kind in ("bare", "demonstrative"):
                            surface = " ".join(t.surface for t in self.toks[pre.start:pre.head + 1])
                            arg = Anaphor(pre.cls, pre.head, surface, len(s.refs), ante_id)
                            role = "anaphor"
                        else:
                            s, arg = s.add_ref(quant, other.cls, accessible=vg.positive)
                            role = "new" if pre is None else "indefinite"
                        nom, comp = (ante_id, arg) if rel_case == "NOM" else (arg, ante_id)
                        subj, obj = vg.prop.atom_args(nom, comp)
                        clause = Clause(vg.index, ((i, "rel", ante_id), (other.head, role, arg)))
                        s = replace(s, atoms=s.atoms + (ProtoAtom(vg.prop.property_id, subj, obj, vg.positive),),
                                    clauses=s.clauses + (clause,))
                        yield j, s
                        if chain and post is not None and post.kind != "something" and self.punct(j, ","):
                            yield from self.rel_clause(j + 1, s, (arg, post.gender, post.number), quant,
                                                       allow_neg, chain, something_ok)

    # -- predicates --------------------------------------------------------

    def predicate_nominals(self, i, negative):
        """Yield (end, class tuple, violations) for ``[vai nu] A vai B ...``."""
        either = self.word(i, "vai nu")
        start = i + 1 if either else i

        def more(k, classes, viol):
            if len(classes) >= 2 or not either:
                yield k, classes, viol
            if negative:
                return
            if self.word(k, "vai"):
                for cls, _, ok in self.noun(k + 1, "NOM", self.num):
                    if cls not in classes:
                        yield from more(k + 2, classes + (cls,), viol + (() if ok else (k + 1,)))

        if negative and either:
            return
        for cls, _, ok in self.noun(start, "NOM", self.num):
            yield from more(start + 1, (cls,), () if ok else (start,))

    # -- sentence patterns -------------------------------------------------

    def sentences(self):
        st = _State()
        yield from self.copular(st)
        yield from self.inverted_role(st)
        yield from self.verbal(st)
        yield from self.thing_subject(st)
        yield from self.query(st)

    def _end(self, j, ch="."):
        return self.punct(j, ch) and j + 1 == len(self.toks)

    def _subject_dets(self):
        return {**self._univ(), **(_NEG if self.num == "SG" else {})}

    def copular(self, st):
        # Ikviens A ir B [vai C] | Ikviens A ir [kāda] B daļa | Neviens A nav B
        for j, np1, v1 in self.np(0, ("NOM",), self._subject_dets(), bare=self.num == "PL"):
            negative = np1.kind in ("negative", "bare")
            if not self.word(j, "nav" if negative else "ir"):
                continue
            s1, x1 = st.violate(*v1).add_ref(UNIVERSAL, np1.cls)
            for k, classes, v2 in self.predicate_nominals(j + 1, negative):
                if self._end(k):
                    yield replace(s1.violate(*v2), copula=Copula(x1, classes, not negative))
            for k, holder, v2 in self.np(j + 1, ("GEN",), self._existential_dets(not negative)):
                for prop, ok in self.role_noun(k, "NOM", self.num):
                    if not self._end(k + 1):
                        continue
                    s2, x2 = s1.violate(*v2, *(() if ok else (k,))).add_ref(EXISTENTIAL, holder.cls)
                    subj, obj = prop.atom_args(x1, x2)
                    clause = Clause(j, ((np1.head, "universal", x1), (holder.head, "new", x2)))
                    yield replace(s2, head=ProtoAtom(prop.property_id, subj, obj, not negative),
                                  clauses=(clause,))

    def inverted_role(self, st):
        # Ikvienas A daļa ir kāds B
        for j, holder, v1 in self.np(0, ("GEN",), self._subject_dets(), bare=self.num == "PL"):
            negative = holder.kind in ("negative", "bare")
            for prop, ok in self.role_noun(j, "NOM", self.num):
                if not self.word(j + 1, "nav" if negative else "ir"):
                    continue
                s1, x1 = st.violate(*v1, *(() if ok else (j,))).add_ref(UNIVERSAL, holder.cls)
                for k, np2, v2 in self.np(j + 2, ("NOM",), self._existential_dets(not negative)):
                    if not self._end(k):
                        continue
                    s2, x2 = s1.violate(*v2).add_ref(EXISTENTIAL, np2.cls)
                    subj, obj = prop.atom_args(x2, x1)
                    clause = Clause(j + 1, ((holder.head, "universal", x1), (np2.head, "new", x2)))
                    yield replace(s2, head=ProtoAtom(prop.property_id, subj, obj, not negative), clauses=(clause,))

    def verbal(self, st):
        # Ikviens A V [kādu] B | Ikvienu A V [kāds] B | Ikviens A V ikvienu B, kas ...
        for j, np1, v1 in self.np(0, ("NOM", "ACC", "LOC"), self._subject_dets(), bare=self.num == "PL"):
            negative = np1.kind in ("negative", "bare")
            for m, vg in self.verb_group(j):
                if vg.positive == negative or vg.prop.kind == "role":
                    continue
                if np1.case == "NOM":
                    other_case = vg.comp_case
                elif np1.case == vg.comp_case:
                    other_case = "NOM"
                else:
                    continue
                s1, x1 = st.violate(*v1).add_ref(UNIVERSAL, np1.cls)
                dets = {**self._existential_dets(vg.positive), **({} if negative else self._univ())}
                for k, np2, v2 in self.np(m, (other_case,), dets):
                    nom = np1 if np1.case == "NOM" else np2
                    v_part = self.participle_agrees(vg, nom.gender, nom.number)
                    quant = UNIVERSAL if np2.kind == "universal" else EXISTENTIAL
                    s2, x2 = s1.violate(*v2, *v_part).add_ref(quant, np2.cls)
                    nom_id, comp_id = (x1, x2) if np1.case == "NOM" else (x2, x1)
                    subj, obj = vg.prop.atom_args(nom_id, comp_id)
                    clause = Clause(vg.index, ((np1.head, "universal", x1),
                                               (np2.head, "universal" if quant == UNIVERSAL else "new", x2)))
                    s2 = replace(s2, head=ProtoAtom(vg.prop.property_id, subj, obj, vg.positive),
                                 clauses=(clause,))
                    if self._end(k):
                        yield s2
                    if quant == UNIVERSAL and self.punct(k, ","):
                        for e, s3 in self.rel_clause(k + 1, s2, (x2, np2.gender, np2.number), EXISTENTIAL,
                                                     False, True, False):
                            if self._end(e):
                                yield s3

    def thing_subject(self, st):
        # Tas, kas V [kādu] B, ir C | Tas, ko kaut kas V, ir C
        for lemma, ok in self.func(0, fw.THING_PRONOUNS, "NOM", self.num, "masc"):
            if not self.punct(1, ","):
                continue
            s1, x1 = st.violate(*(() if ok else (0,))).add_ref(UNIVERSAL, None)
            for e, s2 in self.rel_clause(2, s1, (x1, "masc", self.num), EXISTENTIAL, False, False, True):
                if not (self.punct(e, ",") and self.word(e + 1, "ir")):
                    continue
                for k, classes, v in self.predicate_nominals(e + 2, False):
                    if self._end(k):
                        yield replace(s2.violate(*v), copula=Copula(x1, classes))

    def query(self, st):
        # Vai ir kāds A, kas ...?
        if not (self.word(0, "vai") and self.word(1, "ir")):
            return
        for j, np1, v1 in self.np(2, ("NOM",), _INDEF, bare=self.num == "PL"):
            if self.num == "SG" and np1.kind != "indefinite":
                continue
            s1, x1 = st.violate(*v1).add_ref(QUERY, np1.cls)
            s1 = replace(s1, clauses=(Clause(1, ((np1.head, "new", x1),)),))
            if self._end(j, "?"):
                yield s1
            if self.punct(j, ","):
                for e, s2 in self.rel_clause(j + 1, s1, (x1, np1.gender, np1.number), QUERY, True, True, False):
                    if self._end(e, "?"):
                        yield s2


def _to_proto(st, mood):
    return ProtoDRS(mood, st.refs, st.atoms, st.head, st.copula)


def _resolve_clauses(clauses, proto):
    out = []
    for c in clauses:
        args = []
        for idx, role, ref in c.args:
            if isinstance(ref, Anaphor):
                ref = resolve_antecedent(ref, proto.referents)
            args.append((idx, role, ref))
        out.append(Clause(c.verb, tuple(args)))
    return tuple(out)


def analyze(tokens, lexicon):
    """Parse a token list; return the unique :class:`ParseResult`."""
    if not tokens:
        raise NoParse("empty input", position=0, column=1)
    readings = {}
    anaphor_errors = []
    furthest = 0
    for number in ("SG", "PL"):
        p = _Parser(tokens, lexicon, number)
        for st in p.sentences():
            mood = INTERROGATIVE if tokens[-1].surface == "?" else DECLARATIVE
            proto = _to_proto(st, mood)
            try:
                drs = resolve_anaphors(proto)
            except UnresolvedAnaphor as exc:
                anaphor_errors.append(exc)
                continue
            except ValueError:
                continue
            try:
                statement = classify(drs)
            except (UnclassifiableDRS, ValueError):
                continue
            key = normalize(drs)
            readings.setdefault(key, ParseResult(drs, statement, number, tokens, _resolve_clauses(st.clauses, proto)))
        furthest = max(furthest, p.furthest)

    if len(readings) == 1:
        return next(iter(readings.values()))
    if len(readings) > 1:
        raise Ambiguous(len(readings))
    if anaphor_errors:
        exc = min(anaphor_errors, key=lambda e: e.position)
        exc.column = tokens[exc.position].column
        raise exc

    best = None
    for number in ("SG", "PL"):
        for st in _Parser(tokens, lexicon, number, relaxed=True).sentences():
            if st.viol and (best is None or (len(st.viol), min(st.viol)) < (len(best), min(best))):
                best = st.viol
    if best is not None:
        pos = min(best)
        raise AgreementViolation(f"agreement violation at {tokens[pos].surface!r}", position=pos,
                                 column=tokens[pos].column)

    pos = min(furthest, len(tokens) - 1)
    raise NoParse(f"cannot continue at {tokens[pos].surface!r}", position=pos, column=tokens[pos].column)


def parse(tokens, lexicon):
    """Parse tokens into the unique DRS they express."""
    return analyze(tokens, lexicon).drs


def parse_text(text, lexicon):
    return analyze(tokenize(text, lexicon), lexicon)
