"""Line-oriented command-line front end.

Every input line produces exactly one ``OK\\t...`` or ``ERR\\t<code>\\t<line>:<col> <message>``
result, in input order.  Exit status is 0 when no ERR line was written, 1
otherwise, 2 for usage errors and 3 when the lexicon cannot be loaded.
"""

import argparse
import sys
from pathlib import Path

from .drs import dump
from .errors import CNLError, LexiconError
from .generate import linearize_ace, linearize_lv
from .lexicon import load_lexicon, load_sample_lexicon, validate
from .owl import emit, emit_auto, import_manchester_line
from .parser import parse_text

EXIT_OK = 0
EXIT_ERRORS = 1
EXIT_USAGE = 2
EXIT_LEXICON = 3


class _LexiconLoadFailure(Exception):
    pass


def _load(path):
    if path is None:
        return load_sample_lexicon()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _LexiconLoadFailure(f"cannot read lexicon {path}: {exc.strerror}") from exc
    try:
        return load_lexicon(text)
    except LexiconError as exc:
        raise _LexiconLoadFailure("\n".join(f"{path}:{e.line}: {e.message}" for e in exc.errors)) from exc


def _read_lines(source, stdin):
    if source in (None, "-"):
        text = stdin.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _err(exc, lineno):
    column = getattr(exc, "column", None) or 1
    message = exc.message if isinstance(exc, CNLError) else str(exc)
    if hasattr(exc, "line"):
        # Manchester errors already carry the line; keep only the reason
        message = message.split(": ", 1)[-1]
    code = getattr(exc, "code", "ERROR")
    return f"ERR\t{code}\t{lineno}:{column} {message}"


def _paraphrase(statement, lexicon, mode, number):
    if mode == "lv":
        return linearize_lv(statement, lexicon, number)
    if mode == "ace":
        return linearize_ace(statement, lexicon)
    return None


def _parse_line(line, lexicon, args):
    result = parse_text(line, lexicon)
    if args.emit == "drs":
        out = dump(result.drs).replace("\n", "\t")
    else:
        out = emit(result.statement, args.emit)
    extra = _paraphrase(result.statement, lexicon, args.paraphrase, args.number.upper())
    return out if extra is None else f"{out}\t{extra}"


def _verbalize_line(line, lexicon, args):
    statement = import_manchester_line(line)
    return _paraphrase(statement, lexicon, args.to, args.number.upper())


def _translate_line(line, lexicon, args):
    return linearize_ace(parse_text(line, lexicon).statement, lexicon)


def _batch(handler, lexicon, args, stdin, stdout):
    failed = False
    for lineno, line in _read_lines(args.input, stdin):
        try:
            stdout.write(f"OK\t{handler(line, lexicon, args)}\n")
        except CNLError as exc:
            if getattr(exc, "line", None) is not None:
                exc.column = 1
            stdout.write(_err(exc, lineno) + "\n")
            failed = True
    return EXIT_ERRORS if failed else EXIT_OK


def check_corpus_case(sentence, tag, expected, lexicon):
    """None when the case holds, otherwise a description of the mismatch."""
    statement = parse_text(sentence, lexicon).statement
    if tag == "lv":
        got = linearize_lv(statement, lexicon)
    elif tag == "lv-pl":
        got = linearize_lv(statement, lexicon, "PL")
    elif tag == "ace":
        got = linearize_ace(statement, lexicon)
    else:
        got_tag, got = emit_auto(statement)
        if got_tag != tag:
            return f"expected {tag}, produced {got_tag}"
    if " ".join(got.split()) != " ".join(expected.split()):
        return f"expected {expected!r}, got {got!r}"
    return None


def read_corpus(path):
    """``(line number, input, tag, expected)`` rows of a tab-separated corpus file."""
    rows = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3 or not all(f.strip() for f in fields):
            raise ValueError(f"{path}:{lineno}: expected input<TAB>tag<TAB>expected")
        rows.append((lineno, *(f.strip() for f in fields)))
    return rows


def _corpus(lexicon, args, stdout, stderr):
    try:
        rows = read_corpus(args.corpus)
    except (OSError, ValueError) as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    failed = 0
    for lineno, sentence, tag, expected in rows:
        try:
            problem = check_corpus_case(sentence, tag, expected, lexicon)
        except CNLError as exc:
            stdout.write(_err(exc, lineno) + "\n")
            failed += 1
            continue
        if problem is None:
            stdout.write(f"OK\t{sentence}\n")
        else:
            stdout.write(f"ERR\tMISMATCH\t{lineno}:1 {problem}\n")
            failed += 1
    stderr.write(f"{len(rows) - failed}/{len(rows)} corpus cases passed\n")
    return EXIT_ERRORS if failed else EXIT_OK


def _check(lexicon, stdout):
    warnings = validate(lexicon)
    for w in warnings:
        stdout.write(f"WARN\t{w}\n")
    stdout.write(f"OK\t{len(lexicon.terms)} classes, {len(lexicon.properties)} properties\n")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="lvcnl", description="Controlled Latvian to OWL / SWRL / SPARQL and back.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_lexicon(p):
        p.add_argument("--lexicon", metavar="FILE", help="lexicon file (defaults to the bundled sample)")
        return p

    p = with_lexicon(sub.add_parser("parse", help="Latvian sentences to formal axioms"))
    p.add_argument("--emit", choices=("auto", "manchester", "swrl", "sparql", "drs"), default="auto")
    p.add_argument("--paraphrase", choices=("lv", "ace", "none"), default="none")
    p.add_argument("--number", choices=("sg", "pl"), default="sg")
    p.add_argument("input", nargs="?", default="-")

    p = with_lexicon(sub.add_parser("verbalize", help="Manchester axioms to Latvian or ACE"))
    p.add_argument("--to", choices=("lv", "ace"), required=True)
    p.add_argument("--number", choices=("sg", "pl"), default="sg")
    p.add_argument("input", nargs="?", default="-")

    p = with_lexicon(sub.add_parser("translate", help="Latvian sentences to ACE"))
    p.add_argument("input", nargs="?", default="-")

    with_lexicon(sub.add_parser("check", help="load and validate a lexicon"))

    p = with_lexicon(sub.add_parser("corpus", help="run a golden corpus file"))
    p.add_argument("corpus")
    return ap


def run(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        lexicon = _load(args.lexicon)
    except _LexiconLoadFailure as exc:
        stderr.write(f"{exc}\n")
        return EXIT_LEXICON
    try:
        if args.command == "check":
            return _check(lexicon, stdout)
        if args.command == "corpus":
            return _corpus(lexicon, args, stdout, stderr)
        handler = {"parse": _parse_line, "verbalize": _verbalize_line, "translate": _translate_line}[args.command]
        return _batch(handler, lexicon, args, stdin, stdout)
    except OSError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE


def main():
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
        sys.stdin.reconfigure(encoding="utf-8")
    sys.exit(run())


if __name__ == "__main__":
    main()
