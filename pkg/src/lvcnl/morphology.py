"""Nominal inflection for the closed case inventory NOM/GEN/ACC/LOC."""

from .errors import ParadigmError

CASES = ("NOM", "GEN", "ACC", "LOC")
NUMBERS = ("SG", "PL")
CELLS = tuple((c, n) for n in NUMBERS for c in CASES)

PARADIGM_CLASSES = ("d1-masc", "d4-fem", "adjdef-masc", "adjdef-fem", "gen-attr")

# ending tables: (lemma suffix stripped, {cell: ending})
_NOUN_D1 = ("s", {
    ("NOM", "SG"): "s", ("GEN", "SG"): "a", ("ACC", "SG"): "u", ("LOC", "SG"): "ā",
    ("NOM", "PL"): "i", ("GEN", "PL"): "u", ("ACC", "PL"): "us", ("LOC", "PL"): "os",
})
_NOUN_D4 = ("a", {
    ("NOM", "SG"): "a", ("GEN", "SG"): "as", ("ACC", "SG"): "u", ("LOC", "SG"): "ā",
    ("NOM", "PL"): "as", ("GEN", "PL"): "u", ("ACC", "PL"): "as", ("LOC", "PL"): "ās",
})
_ADJ_DEF_MASC = ("ais", {
    ("NOM", "SG"): "ais", ("GEN", "SG"): "ā", ("ACC", "SG"): "o", ("LOC", "SG"): "ajā",
    ("NOM", "PL"): "ie", ("GEN", "PL"): "o", ("ACC", "PL"): "os", ("LOC", "PL"): "ajos",
})
_ADJ_DEF_FEM = ("ā", {
    ("NOM", "SG"): "ā", ("GEN", "SG"): "ās", ("ACC", "SG"): "o", ("LOC", "SG"): "ajā",
    ("NOM", "PL"): "ās", ("GEN", "PL"): "o", ("ACC", "PL"): "ās", ("LOC", "PL"): "ajās",
})


class FormTable:
    """Surface strings indexed by (case, number); multi-word forms use ``_``."""

    __slots__ = ("_cells",)

    def __init__(self, cells):
        self._cells = dict(cells)

    def __getitem__(self, cell):
        return self._cells[cell]

    def get(self, cell, default=None):
        return self._cells.get(cell, default)

    def __contains__(self, cell):
        return cell in self._cells

    def items(self):
        return [(cell, self._cells[cell]) for cell in CELLS if cell in self._cells]

    def missing(self):
        return [cell for cell in CELLS if cell not in self._cells]

    def with_overrides(self, overrides):
        cells = dict(self._cells)
        cells.update(overrides)
        return FormTable(cells)

    def __eq__(self, other):
        return isinstance(other, FormTable) and self._cells == other._cells

    def __hash__(self):
        return hash(tuple(sorted(self._cells.items())))

    def __repr__(self):
        return "FormTable(%r)" % dict(self.items())


def _decline(word, table, what):
    suffix, endings = table
    if not word.endswith(suffix) or len(word) <= len(suffix):
        raise ParadigmError(f"{word!r} does not end in -{suffix} ({what})")
    stem = word[: -len(suffix)]
    return {cell: stem + endings[cell] for cell in CELLS}


def _noun_table(word):
    # -is/-us lemmas belong to the 2nd/3rd declension, which is not covered
    if word.endswith("s") and not word.endswith(("is", "us")):
        return _NOUN_D1
    if word.endswith("a"):
        return _NOUN_D4
    raise ParadigmError(f"cannot infer a noun declension for {word!r}")


def generate_paradigm(lemma_words, paradigm):
    """Build the full eight-cell table for a citation form (NOM SG).

    ``lemma_words`` is a sequence of words or a single string joined with
    spaces or underscores.  The last word is the head noun; preceding words
    are definite adjectives (``adjdef-*``) or an invariant genitive
    attribute (``gen-attr``).
    """
    if isinstance(lemma_words, str):
        lemma_words = lemma_words.replace("_", " ").split()
    words = list(lemma_words)
    if not words:
        raise ParadigmError("empty lemma")
    if paradigm not in PARADIGM_CLASSES:
        raise ParadigmError(f"unknown paradigm class {paradigm!r}")

    head = words[-1]
    modifiers = words[:-1]
    if paradigm == "d1-masc":
        if modifiers:
            raise ParadigmError("d1-masc takes a single-word lemma")
        if head.endswith(("is", "us")):
            raise ParadigmError(f"{head!r} is not a first-declension noun")
        columns = [_decline(head, _NOUN_D1, paradigm)]
    elif paradigm == "d4-fem":
        if modifiers:
            raise ParadigmError("d4-fem takes a single-word lemma")
        columns = [_decline(head, _NOUN_D4, paradigm)]
    elif paradigm in ("adjdef-masc", "adjdef-fem"):
        if not modifiers:
            raise ParadigmError(f"{paradigm} needs an adjective before the noun")
        adj, noun = (_ADJ_DEF_MASC, _NOUN_D1) if paradigm == "adjdef-masc" else (_ADJ_DEF_FEM, _NOUN_D4)
        columns = [_decline(w, adj, paradigm) for w in modifiers]
        columns.append(_decline(head, noun, paradigm))
    else:  # gen-attr
        if not modifiers:
            raise ParadigmError("gen-attr needs an invariant attribute before the noun")
        columns = [{cell: w for cell in CELLS} for w in modifiers]
        columns.append(_decline(head, _noun_table(head), paradigm))

    return FormTable({cell: "_".join(col[cell] for col in columns) for cell in CELLS})


def paradigm_gender(paradigm, lemma_words=None):
    """Grammatical gender implied by a paradigm class, if any."""
    if paradigm in ("d1-masc", "adjdef-masc"):
        return "masc"
    if paradigm in ("d4-fem", "adjdef-fem"):
        return "fem"
    if paradigm == "gen-attr" and lemma_words:
        if isinstance(lemma_words, str):
            lemma_words = lemma_words.replace("_", " ").split()
        return "masc" if _noun_table(lemma_words[-1]) is _NOUN_D1 else "fem"
    return None
