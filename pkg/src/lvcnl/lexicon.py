"""Domain lexicon: loading, inflection and surface-form lookup.

The file format is line oriented::

    class Professor
      lemma: profesors
      paradigm: d1-masc
      ace: professor | professors

    property teaches
      kind: verb
      verb: māca | pasniedz
      neg: nemāca | nepasniedz
      ace-active: teaches
      ace-passive: is taught by
"""

from dataclasses import dataclass, field
from importlib import resources

from .errors import LexiconError, ParadigmError, UnknownTerm
from .function_words import FUNCTION_FORMS
from .morphology import CASES, NUMBERS, PARADIGM_CLASSES, FormTable, generate_paradigm, paradigm_gender

GENDERS = ("masc", "fem")
DIRECTIONS = ("subject-domain", "subject-range")
PROPERTY_KINDS = ("verb", "locative", "role")


@dataclass(frozen=True)
class Analysis:
    """One reading of a surface token.

    ``kind`` is one of ``term``, ``role``, ``verb``, ``participle`` or
    ``func``; ``id`` is the class id, property id or function-word lemma.
    """

    kind: str
    id: str
    case: str = None
    number: str = None
    gender: str = None
    variant: int = 0
    positive: bool = True


@dataclass(frozen=True)
class NounTerm:
    class_id: str
    gender: str
    realizations: tuple
    animate: bool = False
    ace_sg: str = ""
    ace_pl: str = ""
    paradigm: str = None
    overrides: tuple = ()


@dataclass(frozen=True)
class PropertyLexeme:
    property_id: str
    kind: str
    verbs: tuple = ()
    neg_verbs: tuple = ()
    participles: tuple = ()  # ((gender, number), form) pairs
    role_forms: FormTable = None
    role_gender: str = None
    direction: str = "subject-domain"
    ace_active: str = ""
    ace_passive: str = ""

    def participle(self, gender, number):
        return dict(self.participles).get((gender, number))

    @property
    def complement_case(self):
        return {"verb": "ACC", "locative": "LOC", "role": "GEN"}[self.kind]

    def atom_args(self, nominative, complement):
        """Map the NOM-slot and complement-slot referents to (subject, object)."""
        if self.kind == "verb" or self.direction == "subject-domain":
            return nominative, complement
        return complement, nominative


@dataclass(frozen=True)
class LexiconIssue:
    line: int
    message: str

    def __str__(self):
        return f"line {self.line}: {self.message}"


@dataclass
class Lexicon:
    terms: dict = field(default_factory=dict)
    properties: dict = field(default_factory=dict)

    def __post_init__(self):
        self._index = {}
        self.max_words = 1
        for surface, lemma, case, number, gender in FUNCTION_FORMS:
            self._add(surface, Analysis("func", lemma, case, number, gender))
        for term in self.terms.values():
            for variant, table in enumerate(term.realizations):
                for (case, number), surface in table.items():
                    self._add(surface, Analysis("term", term.class_id, case, number, term.gender, variant))
        for prop in self.properties.values():
            for variant, form in enumerate(prop.verbs):
                self._add(form, Analysis("verb", prop.property_id, variant=variant))
            for variant, form in enumerate(prop.neg_verbs):
                self._add(form, Analysis("verb", prop.property_id, variant=variant, positive=False))
            for (gender, number), form in prop.participles:
                self._add(form, Analysis("participle", prop.property_id, None, number, gender))
            if prop.role_forms is not None:
                for (case, number), surface in prop.role_forms.items():
                    self._add(surface, Analysis("role", prop.property_id, case, number, prop.role_gender))

    @staticmethod
    def _key(surface):
        return " ".join(surface.lower().replace("_", " ").split())

    def _add(self, surface, analysis):
        key = self._key(surface)
        bucket = self._index.setdefault(key, [])
        if analysis not in bucket:
            bucket.append(analysis)
        self.max_words = max(self.max_words, len(key.split()))

    def lookup(self, surface):
        """All analyses of a surface string (or token sequence)."""
        if not isinstance(surface, str):
            surface = " ".join(surface)
        return frozenset(self._index.get(self._key(surface), ()))

    def known(self, surface):
        return self._key(surface) in self._index

    def surfaces(self):
        return sorted(self._index)

    def term(self, class_id):
        try:
            return self.terms[class_id]
        except KeyError:
            raise UnknownTerm(f"unknown class {class_id!r}") from None

    def prop(self, property_id):
        try:
            return self.properties[property_id]
        except KeyError:
            raise UnknownTerm(f"unknown property {property_id!r}") from None

    def inflect(self, class_id, case, number, variant=0):
        term = self.term(class_id)
        if not 0 <= variant < len(term.realizations):
            raise UnknownTerm(f"{class_id} has no realization #{variant}")
        table = term.realizations[variant]
        if (case, number) not in table:
            raise UnknownTerm(f"{class_id} lacks the {case}.{number} form")
        return table[(case, number)]


def inflect(lexicon, class_id, case, number, variant=0):
    return lexicon.inflect(class_id, case, number, variant)


def lookup(lexicon, surface):
    return lexicon.lookup(surface)


# --------------------------------------------------------------------------
# loading

_CLASS_KEYS = {"lemma", "gender", "paradigm", "animate", "ace"}
_PROPERTY_KEYS = {"kind", "verb", "neg", "active", "active-neg", "role-noun", "role-gender",
                  "direction", "ace-active", "ace-passive"}


def _split_alts(value):
    return [v.strip() for v in value.split("|") if v.strip()]


def _norm_form(form):
    return "_".join(form.split())


def load_lexicon(text):
    """Parse lexicon text; raises :class:`LexiconError` carrying every issue."""
    issues = []
    blocks = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if not raw[0].isspace():
            parts = stripped.split()
            if len(parts) != 2 or parts[0] not in ("class", "property"):
                issues.append(LexiconIssue(lineno, f"malformed line: {stripped!r}"))
                current = None
                continue
            current = {"type": parts[0], "id": parts[1], "line": lineno, "keys": {}}
            blocks.append(current)
            continue
        if current is None:
            issues.append(LexiconIssue(lineno, "key outside of a class/property block"))
            continue
        key, sep, value = stripped.partition(":")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            issues.append(LexiconIssue(lineno, f"malformed line: {stripped!r}"))
            continue
        if key in current["keys"]:
            issues.append(LexiconIssue(lineno, f"repeated key {key!r}"))
            continue
        current["keys"][key] = (value, lineno)

    terms, properties = {}, {}
    seen = {}
    for block in blocks:
        ident = block["id"]
        if ident in seen:
            issues.append(LexiconIssue(block["line"], f"duplicate id {ident!r} (first defined on line {seen[ident]})"))
            continue
        seen[ident] = block["line"]
        if block["type"] == "class":
            term = _build_term(block, issues)
            if term is not None:
                terms[ident] = term
        else:
            prop = _build_property(block, issues)
            if prop is not None:
                properties[ident] = prop

    if issues:
        raise LexiconError(sorted(issues, key=lambda i: i.line))
    return Lexicon(terms, properties)


def _build_term(block, issues):
    keys = block["keys"]
    line = block["line"]
    ok = True
    for key, (_, kline) in keys.items():
        if key not in _CLASS_KEYS and not key.startswith("form."):
            issues.append(LexiconIssue(kline, f"unknown key {key!r}"))
            ok = False
    if "lemma" not in keys:
        issues.append(LexiconIssue(line, f"class {block['id']} has no lemma"))
        return None
    lemmas = _split_alts(keys["lemma"][0])

    overrides = {}
    for key, (value, kline) in keys.items():
        if not key.startswith("form."):
            continue
        parts = key.split(".")
        if len(parts) != 3 or parts[1] not in CASES or parts[2] not in NUMBERS:
            issues.append(LexiconIssue(kline, f"malformed form key {key!r}"))
            ok = False
            continue
        for i, form in enumerate(_split_alts(value)):
            overrides.setdefault(i, {})[(parts[1], parts[2])] = _norm_form(form)

    paradigm = None
    if "paradigm" in keys:
        paradigm, pline = keys["paradigm"]
        if paradigm not in PARADIGM_CLASSES:
            issues.append(LexiconIssue(pline, f"unknown paradigm class {paradigm!r}"))
            return None
    elif not overrides:
        issues.append(LexiconIssue(line, f"class {block['id']} has no paradigm and no explicit forms"))
        return None

    gender = None
    if "gender" in keys:
        gender, gline = keys["gender"]
        if gender not in GENDERS:
            issues.append(LexiconIssue(gline, f"unknown gender {gender!r}"))
            ok = False
    if gender is None and paradigm is not None:
        try:
            gender = paradigm_gender(paradigm, lemmas[0])
        except ParadigmError:
            gender = None
    if gender is None:
        issues.append(LexiconIssue(line, f"class {block['id']} needs an explicit gender"))
        ok = False

    tables = []
    for i, lemma in enumerate(lemmas):
        if paradigm is not None:
            try:
                table = generate_paradigm(lemma, paradigm)
            except ParadigmError as exc:
                issues.append(LexiconIssue(keys["paradigm"][1], f"{block['id']}: {exc.message}"))
                ok = False
                continue
        else:
            table = FormTable({("NOM", "SG"): _norm_form(lemma)})
        tables.append(table.with_overrides(overrides.get(i, {})))

    animate = False
    if "animate" in keys:
        value, aline = keys["animate"]
        if value not in ("true", "false"):
            issues.append(LexiconIssue(aline, f"animate must be true or false, not {value!r}"))
            ok = False
        animate = value == "true"

    ace_sg = ace_pl = ""
    if "ace" in keys:
        parts = [p.strip() for p in keys["ace"][0].split("|")]
        ace_sg = parts[0]
        ace_pl = parts[1] if len(parts) > 1 else ace_sg + "s"

    if not ok:
        return None
    frozen_overrides = tuple(sorted((i, tuple(sorted(o.items()))) for i, o in overrides.items()))
    return NounTerm(block["id"], gender, tuple(tables), animate, ace_sg, ace_pl, paradigm, frozen_overrides)


def _build_property(block, issues):
    keys = block["keys"]
    line = block["line"]
    ident = block["id"]
    ok = True
    for key, (_, kline) in keys.items():
        if key not in _PROPERTY_KEYS and not key.startswith("participle."):
            issues.append(LexiconIssue(kline, f"unknown key {key!r}"))
            ok = False
    if "kind" not in keys:
        issues.append(LexiconIssue(line, f"property {ident} has no kind"))
        return None
    kind, kline = keys["kind"]
    if kind not in PROPERTY_KINDS:
        issues.append(LexiconIssue(kline, f"unknown property kind {kind!r}"))
        return None

    def get(key):
        return keys[key][0] if key in keys else None

    direction = get("direction") or "subject-domain"
    if direction not in DIRECTIONS:
        issues.append(LexiconIssue(keys["direction"][1], f"unknown direction {direction!r}"))
        ok = False
    if kind in ("locative", "role") and "direction" not in keys:
        issues.append(LexiconIssue(line, f"{kind} property {ident} needs a direction"))
        ok = False

    verbs, negs = (), ()
    participles = []
    role_forms, role_gender = None, None
    if kind == "verb":
        verbs = tuple(_split_alts(get("verb") or ""))
        negs = tuple(_split_alts(get("neg") or ""))
        if not verbs:
            issues.append(LexiconIssue(line, f"verb property {ident} has no verb forms"))
            ok = False
    elif kind == "locative":
        verbs = tuple(_split_alts(get("active") or ""))
        negs = tuple(_split_alts(get("active-neg") or ""))
        for key, (value, pline) in keys.items():
            if not key.startswith("participle."):
                continue
            parts = key.split(".")
            if len(parts) != 3 or parts[1] not in GENDERS or parts[2].upper() not in NUMBERS:
                issues.append(LexiconIssue(pline, f"malformed participle key {key!r}"))
                ok = False
                continue
            participles.append(((parts[1], parts[2].upper()), value))
        if not participles:
            issues.append(LexiconIssue(line, f"locative property {ident} has no participle forms"))
            ok = False
    else:
        lemma = get("role-noun")
        role_gender = get("role-gender")
        if lemma is None or role_gender not in GENDERS:
            issues.append(LexiconIssue(line, f"role property {ident} needs role-noun and role-gender"))
            ok = False
        else:
            paradigm = "d1-masc" if role_gender == "masc" else "d4-fem"
            try:
                role_forms = generate_paradigm(lemma, paradigm)
            except ParadigmError as exc:
                issues.append(LexiconIssue(keys["role-noun"][1], exc.message))
                ok = False
    if len(verbs) != len(negs):
        issues.append(LexiconIssue(line, f"property {ident}: every positive form needs a negated counterpart"))
        ok = False

    if not ok:
        return None
    return PropertyLexeme(ident, kind, verbs, negs, tuple(sorted(participles)), role_forms, role_gender,
                          direction, get("ace-active") or "", get("ace-passive") or "")


def load_sample_lexicon():
    """The university lexicon shipped with the package."""
    text = resources.files("lvcnl").joinpath("data/university.lex").read_text(encoding="utf-8")
    return load_lexicon(text)


# --------------------------------------------------------------------------
# validation


def validate(lexicon):
    """Non-fatal problems: ambiguous surfaces, missing ACE strings or forms."""
    warnings = []
    owners = {}
    for term in lexicon.terms.values():
        for table in term.realizations:
            for _, surface in table.items():
                owners.setdefault(surface, set()).add(term.class_id)
    for prop in lexicon.properties.values():
        if prop.role_forms is not None:
            for _, surface in prop.role_forms.items():
                owners.setdefault(surface, set()).add(prop.property_id)
    for surface, ids in sorted(owners.items()):
        if len(ids) > 1:
            warnings.append(f"ambiguous surface {surface!r} shared by {', '.join(sorted(ids))}")

    for term in lexicon.terms.values():
        if not term.ace_sg:
            warnings.append(f"class {term.class_id} has no ACE surface")
        for i, table in enumerate(term.realizations):
            for case, number in table.missing():
                warnings.append(f"class {term.class_id} realization {i} is missing form {case}.{number}")
        if term.paradigm is not None:
            for i, cells in term.overrides:
                lemma_table = term.realizations[i]
                for cell, form in cells:
                    # regenerate from the NOM.SG lemma to see what the override replaced
                    try:
                        generated = generate_paradigm(lemma_table[("NOM", "SG")], term.paradigm)
                    except ParadigmError:
                        continue
                    if generated[cell] != form:
                        warnings.append(f"class {term.class_id}: override {cell[0]}.{cell[1]}={form!r} "
                                        f"differs from paradigm form {generated[cell]!r}")
    for prop in lexicon.properties.values():
        if not prop.ace_active or (prop.kind != "role" and not prop.ace_passive):
            warnings.append(f"property {prop.property_id} has no ACE surface")
        if prop.kind == "locative":
            for gender in GENDERS:
                for number in NUMBERS:
                    if prop.participle(gender, number) is None:
                        warnings.append(f"property {prop.property_id} is missing participle {gender}.{number}")
    return warnings
