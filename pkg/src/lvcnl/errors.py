"""Exception hierarchy shared by the lexicon, parser, generators and emitters."""


class CNLError(Exception):
    """Base class. ``code`` is the stable identifier printed by the CLI."""

    code = "ERROR"

    def __init__(self, message, position=None, column=None):
        super().__init__(message)
        self.message = message
        self.position = position
        self.column = column


class LexiconError(CNLError):
    code = "LEXICON"

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(str(e) for e in self.errors))


class ParadigmError(CNLError):
    code = "PARADIGM"


class UnknownTerm(CNLError):
    code = "UNKNOWN_TERM"


class ParseError(CNLError):
    code = "PARSE"


class UnknownToken(ParseError):
    code = "UNKNOWN_TOKEN"


class NoParse(ParseError):
    code = "NO_PARSE"


class Ambiguous(ParseError):
    code = "AMBIGUOUS"

    def __init__(self, count):
        super().__init__(f"{count} distinct readings")
        self.count = count


class AgreementViolation(ParseError):
    code = "AGREEMENT"


class UnresolvedAnaphor(ParseError):
    code = "UNRESOLVED_ANAPHOR"


class UnclassifiableDRS(CNLError):
    code = "UNCLASSIFIABLE"


class NotLinearizable(CNLError):
    code = "NOT_LINEARIZABLE"


class NotExpressible(CNLError):
    code = "NOT_EXPRESSIBLE"


class ManchesterSyntaxError(CNLError):
    code = "SYNTAX"

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}", position=line)
        self.line = line


class UnsupportedConstruct(ManchesterSyntaxError):
    code = "UNSUPPORTED"
