"""Closed inflection tables for determiners, pronouns, copula and particles."""

# pronominal endings shared by ikviens, katrs, kāds, neviens, kurš
_PRONOMINAL = {
    ("masc", "SG"): {"NOM": "s", "GEN": "a", "ACC": "u", "LOC": "ā"},
    ("masc", "PL"): {"NOM": "i", "GEN": "u", "ACC": "us", "LOC": "os"},
    ("fem", "SG"): {"NOM": "a", "GEN": "as", "ACC": "u", "LOC": "ā"},
    ("fem", "PL"): {"NOM": "as", "GEN": "u", "ACC": "as", "LOC": "ās"},
}

_DEMONSTRATIVE = {
    "tas": {
        ("masc", "SG"): {"NOM": "tas", "GEN": "tā", "ACC": "to", "LOC": "tajā"},
        ("masc", "PL"): {"NOM": "tie", "GEN": "to", "ACC": "tos", "LOC": "tajos"},
        ("fem", "SG"): {"NOM": "tā", "GEN": "tās", "ACC": "to", "LOC": "tajā"},
        ("fem", "PL"): {"NOM": "tās", "GEN": "to", "ACC": "tās", "LOC": "tajās"},
    },
    "šis": {
        ("masc", "SG"): {"NOM": "šis", "GEN": "šī", "ACC": "šo", "LOC": "šajā"},
        ("masc", "PL"): {"NOM": "šie", "GEN": "šo", "ACC": "šos", "LOC": "šajos"},
        ("fem", "SG"): {"NOM": "šī", "GEN": "šīs", "ACC": "šo", "LOC": "šajā"},
        ("fem", "PL"): {"NOM": "šīs", "GEN": "šo", "ACC": "šīs", "LOC": "šajās"},
    },
    "visi": {
        ("masc", "PL"): {"NOM": "visi", "GEN": "visu", "ACC": "visus", "LOC": "visos"},
        ("fem", "PL"): {"NOM": "visas", "GEN": "visu", "ACC": "visas", "LOC": "visās"},
    },
}

# lemma -> (stem, numbers)
_PRONOMINAL_LEMMAS = {
    "ikviens": ("ikvien", ("SG",)),
    "katrs": ("katr", ("SG",)),
    "neviens": ("nevien", ("SG",)),
    "kāds": ("kād", ("SG", "PL")),
    "kurš": ("kur", ("SG", "PL")),
}

UNIVERSAL = ("ikviens", "katrs", "visi")
INDEFINITE = ("kāds",)
NEGATIVE = ("neviens",)
DEMONSTRATIVE = ("šis",)
# pronouns standing for the universal class in subject position
THING_PRONOUNS = ("tas", "ikviens", "katrs", "jebkas", "viss", "visi")
# pronouns standing for an unrestricted existential thing
SOMETHING_PRONOUNS = ("kaut kas", "kāds")
RELATIVE = ("kas", "kurš")


def _build():
    rows = []
    for lemma, (stem, numbers) in _PRONOMINAL_LEMMAS.items():
        for (gender, number), endings in _PRONOMINAL.items():
            if number not in numbers:
                continue
            for case, ending in endings.items():
                surface = stem + ending
                if lemma == "kurš" and (gender, number, case) == ("masc", "SG", "NOM"):
                    surface = "kurš"
                rows.append((surface, lemma, case, number, gender))
    for lemma, table in _DEMONSTRATIVE.items():
        for (gender, number), forms in table.items():
            for case, surface in forms.items():
                rows.append((surface, lemma, case, number, gender))
    rows += [
        ("kas", "kas", "NOM", None, None),
        ("ko", "kas", "ACC", None, None),
        ("kaut kas", "kaut kas", "NOM", None, None),
        ("kaut ko", "kaut kas", "ACC", None, None),
        ("jebkas", "jebkas", "NOM", "SG", "masc"),
        ("viss", "viss", "NOM", "SG", "masc"),
        ("ir", "ir", None, None, None),
        ("nav", "nav", None, None, None),
        ("vai", "vai", None, None, None),
        ("vai nu", "vai nu", None, None, None),
    ]
    return tuple(rows)


FUNCTION_FORMS = _build()


def function_form(lemma, case=None, number=None, gender=None):
    """Surface of a function word for the given features.

    Features the lemma does not inflect for are ignored.
    """
    best = None
    for surface, lem, c, n, g in FUNCTION_FORMS:
        if lem != lemma:
            continue
        if c is not None and case is not None and c != case:
            continue
        if n is not None and number is not None and n != number:
            continue
        if g is not None and gender is not None and g != gender:
            continue
        if best is None:
            best = surface
    if best is None:
        raise KeyError((lemma, case, number, gender))
    return best
