"""Command line entry point.

    rootcode analyze  [--rules F] [--lang bn] [--all] [--strict] WORD...
    rootcode generate [--rules F] [--lang bn] ROOT TENSE PERSON
    rootcode batch    [--rules F] --outdir DIR INPUT
    rootcode evaluate [--rules F] [--gold F] [--outdir DIR]
    rootcode encode   [--rules F] [--lexicon F] [--lang bn] CLAUSE...
    rootcode index    --index DIR --doc-id ID [--lang bn] CLAUSE
    rootcode query    --index DIR TEXT

Exit status: 0 on success, 1 on usage errors, 2 on data errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import resources
from .codes import Features, GramNumber, Politeness, nfc, parse_person, parse_tense
from .encoder import ClauseSpec, WordOrder, encode_clause, parse_clause, tag_words
from .errors import MalformedClause, NotAVerb, RootcodeError
from .evaluation import evaluate, load_gold, run_batch
from .index import IndexedSentence, MatchIndex
from .lexicon import DEFAULT_MAX_DISTANCE, load_lexicon
from .rules import analyze, generate, load_rules

log = logging.getLogger("rootcode")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise UsageError(message)


def build_parser() -> Parser:
    common = Parser(add_help=False)
    common.add_argument("--rules", type=Path, help="rule file (default: bundled for --lang)")
    common.add_argument("--lexicon", type=Path, help="root lexicon TSV (default: bundled)")
    common.add_argument("--lang", default="bn", help="language tag (default: bn)")
    common.add_argument("--strict", action="store_true", help="unanalyzable input is an error")
    common.add_argument("--open", action="store_true",
                        help="ignore the rule file's declared roots")
    common.add_argument("--max-distance", type=int, default=DEFAULT_MAX_DISTANCE)
    common.add_argument("-v", "--verbose", action="store_true")

    p = Parser(prog="rootcode", description="Rule-based root extraction and universal codes.")
    sub = p.add_subparsers(dest="command", parser_class=Parser, required=True)

    a = sub.add_parser("analyze", parents=[common], help="analyze inflected verbs")
    a.add_argument("--all", action="store_true", help="print every reading")
    a.add_argument("words", nargs="*", help="surface forms (default: stdin)")

    g = sub.add_parser("generate", parents=[common], help="inflect a root")
    g.add_argument("root")
    g.add_argument("tense", help="PRS, PST or FUT")
    g.add_argument("person", help="1, 2 or 3")
    g.add_argument("--native-tense", help="native tense tag (default: the tense)")
    g.add_argument("--politeness", choices=[x.value for x in Politeness])
    g.add_argument("--number", choices=[x.value for x in GramNumber])

    b = sub.add_parser("batch", parents=[common], help="root-extract a verb list")
    b.add_argument("input", type=Path)
    b.add_argument("--outdir", type=Path, required=True)

    e = sub.add_parser("evaluate", parents=[common], help="accuracy against gold data")
    e.add_argument("--gold", type=Path, help="gold TSV (default: bundled Bengali corpus)")
    e.add_argument("--outdir", type=Path, help="also write report.tsv here")

    c = sub.add_parser("encode", parents=[common], help="encode tagged clauses")
    c.add_argument("--order", choices=[o.value for o in WordOrder],
                   help="word order for untagged input (tags via the lexicon)")
    c.add_argument("clauses", nargs="*", help="tagged clause lines (default: stdin)")

    i = sub.add_parser("index", parents=[common], help="encode a clause and index it")
    i.add_argument("--index", type=Path, required=True, dest="index_dir")
    i.add_argument("--doc-id", required=True)
    i.add_argument("--order", choices=[o.value for o in WordOrder])
    i.add_argument("clause")

    q = sub.add_parser("query", parents=[common], help="look up a composite code or clause")
    q.add_argument("--index", type=Path, required=True, dest="index_dir")
    q.add_argument("--order", choices=[o.value for o in WordOrder])
    q.add_argument("text", help="composite code, or a clause to encode first")
    return p


def _table(args):
    if args.rules:
        table = load_rules(args.rules.read_text(encoding="utf-8"), args.lang)
    else:
        try:
            table = resources.bundled_rules(args.lang)
        except KeyError as exc:
            raise UsageError(f"{exc.args[0]}; pass --rules") from None
    return table.open() if args.open else table


def _lexicon(args):
    if args.lexicon:
        return load_lexicon(args.lexicon.read_text(encoding="utf-8"))
    return resources.bundled_lexicon()


def _lines(items):
    if items:
        return list(items)
    return [line.rstrip("\n") for line in sys.stdin if line.strip()]


def _clause(text, args, table, lex) -> ClauseSpec:
    if "/" in text:
        return parse_clause(text)
    if not args.order:
        raise MalformedClause("untagged clause needs --order")
    return ClauseSpec(tuple(tag_words(text.split(), table, lex)), WordOrder(args.order))


def cmd_analyze(args, out):
    table = _table(args)
    for word in _lines(args.words):
        word = nfc(word.strip())
        readings = analyze(table, word, strict=args.strict)
        if not readings:
            print(f"{word}: no analysis", file=sys.stderr)
            continue
        for a in readings if args.all else readings[:1]:
            f = a.features
            row = [word, a.native_root, f.tense.value, f.person.value]
            if args.all:
                row += [f.native_tense, a.rule_id]
            print("\t".join(row), file=out)


def cmd_generate(args, out):
    table = _table(args)
    tense = parse_tense(args.tense)
    features = Features(
        tense=tense,
        person=parse_person(args.person),
        native_tense=args.native_tense or tense.value,
        number=GramNumber(args.number) if args.number else None,
        politeness=Politeness(args.politeness) if args.politeness else None,
    )
    print(generate(table, args.root, features), file=out)


def cmd_batch(args, out):
    summary = run_batch(_table(args), args.input, args.outdir)
    print("\n".join(summary.lines()), file=out)


def cmd_evaluate(args, out):
    table = _table(args)
    if args.gold:
        gold = load_gold(args.gold.read_text(encoding="utf-8"))
    else:
        gold = resources.bundled_gold()
    report = evaluate(table, gold)
    print("\n".join(report.summary_lines()), file=out)
    if args.outdir:
        args.outdir.mkdir(parents=True, exist_ok=True)
        (args.outdir / "report.tsv").write_text(report.to_tsv(), encoding="utf-8")


def cmd_encode(args, out):
    table, lex = _table(args), _lexicon(args)
    for line in _lines(args.clauses):
        code = encode_clause(table, lex, _clause(line, args, table, lex), args.max_distance)
        print(code, file=out)


def _words_of(text: str) -> str:
    body = text.partition("#")[0]
    return " ".join(tok.rpartition("/")[0].replace("_", " ") or tok for tok in body.split())


def cmd_index(args, out):
    table, lex = _table(args), _lexicon(args)
    code = encode_clause(table, lex, _clause(args.clause, args, table, lex), args.max_distance)
    sentence = IndexedSentence(args.doc_id, args.lang, _words_of(args.clause), str(code))
    MatchIndex(args.index_dir).add(sentence)
    print(f"{args.doc_id}\t{code}", file=out)


def cmd_query(args, out):
    text = args.text
    if "/" in text or not text.startswith("S:"):
        table, lex = _table(args), _lexicon(args)
        text = str(encode_clause(table, lex, _clause(text, args, table, lex), args.max_distance))
    for hit in MatchIndex(args.index_dir).query(text):
        print(hit, file=out)


COMMANDS = {
    "analyze": cmd_analyze,
    "generate": cmd_generate,
    "batch": cmd_batch,
    "evaluate": cmd_evaluate,
    "encode": cmd_encode,
    "index": cmd_index,
    "query": cmd_query,
}


def main(argv=None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    try:
        args = build_parser().parse_args(argv)
    except UsageError:
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code or EXIT_OK
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        COMMANDS[args.command](args, sys.stdout)
    except UsageError as exc:
        print(f"rootcode: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RootcodeError, OSError, UnicodeDecodeError) as exc:
        kind = "not a verb" if isinstance(exc, NotAVerb) else type(exc).__name__
        print(f"rootcode: {kind}: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK
