"""Exit criteria.  Each test records one PASS/FAIL line, printed at the end
of the run under "acceptance criteria"."""

import itertools
import random
import subprocess
import sys
import time
import unicodedata

import numpy as np
import pytest

from rootcode.codes import Person, Politeness, Tense
from rootcode.encoder import encode_clause, parse_clause
from rootcode.evaluation import run_batch
from rootcode.index import IndexedSentence, MatchIndex, MatchedOn
from rootcode.lexicon import cross_distances, levenshtein
from rootcode.resources import bundled_gold
from rootcode.rules import analyze, generate, matching_rules
from rootcode.evaluation import evaluate

from conftest import TEST_ROOTS, record


def report(name, ok, detail):
    record(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, detail


# 1 -------------------------------------------------------------------------

def test_c1_round_trip_exhaustive(bn):
    assert len(TEST_ROOTS) == 20
    start = time.perf_counter()
    total = good = 0
    misses = []
    for root in TEST_ROOTS:
        for f in bn.cells():
            surface = generate(bn, root, f)
            readings = analyze(bn, surface)
            total += 1
            if readings and (readings[0].native_root, readings[0].features) == (root, f):
                good += 1
            else:
                misses.append(surface)
    elapsed = time.perf_counter() - start
    report(
        "C1 round-trip",
        good == total and elapsed < 5.0,
        f"{good}/{total} top-ranked, {elapsed:.2f}s (bar 100%, <5s) misses={misses[:5]}",
    )


# 2 -------------------------------------------------------------------------

def test_c2_accuracy_reproduction(bn):
    start = time.perf_counter()
    gold = bundled_gold()
    result = evaluate(bn, gold)
    elapsed = time.perf_counter() - start
    report(
        "C2 accuracy",
        len(gold) >= 500 and result.accuracy_root >= 0.98 and elapsed < 5.0,
        f"accuracy_root={result.accuracy_root:.4f} over {result.total} forms "
        f"(accuracy_full={result.accuracy_full:.4f}), {elapsed:.2f}s (bar >=0.98, >=500, <5s)",
    )
    assert {"যা", "খা", "দে"} <= {g.expected_root for g in gold}


# 3 -------------------------------------------------------------------------

BN_PRONOUN = {
    (Person.P1, None): "আমি",
    (Person.P2, Politeness.INTIMATE): "তুই",
    (Person.P2, Politeness.FAMILIAR): "তুমি",
    (Person.P3, None): "সে",
    (Person.P3, Politeness.HONORIFIC): "তিনি",
}
EN_PRONOUN = {Person.P1: "I", Person.P2: "you", Person.P3: "he"}


def _verb_token(surface):
    return surface.replace(" ", "_") + "/VERB"


def test_c3_cross_lingual_equality(bn, en, lex, tmp_path):
    english = str(encode_clause(en, lex, parse_clause("I/PRON will_go/VERB #order=SVO")))
    bengali = str(encode_clause(bn, lex, parse_clause("আমি/PRON যাব/VERB #order=SOV")))
    idx = MatchIndex(tmp_path / "idx")
    idx.add(IndexedSentence("bn-1", "bn", "আমি যাব", bengali))
    idx.add(IndexedSentence("en-1", "en", "I will go", english))
    hit_en = MatchIndex(tmp_path / "idx").query(english)[0]
    hit_bn = MatchIndex(tmp_path / "idx").query(bengali)[0]
    worked = (
        english.encode() == bengali.encode()
        and hit_en.score == 1.0 and hit_en.matched_on is MatchedOn.FULL
        and hit_bn.score == 1.0
    )

    shared = sorted(
        {e.universal_root_id for e in lex.language_slice("bn") if e.native_root in bn.declared_roots}
        & {e.universal_root_id for e in lex.language_slice("en") if e.native_root in en.declared_roots}
    )
    checked = equal = 0
    mismatches = []
    for root_id, tense, person in itertools.product(shared, Tense, Person):
        bn_root = lex.natives_of("bn", root_id)[0]
        en_root = lex.natives_of("en", root_id)[0]
        en_rules = [r for r in en.rules if (r.tense, r.person) == (tense, person)]
        en_forms = {r.realize(en_root) for r in en_rules} - {None}
        bn_rules = [r for r in bn.rules if (r.tense, r.person) == (tense, person)]
        for rule in bn_rules:
            bn_form = rule.realize(bn_root)
            if bn_form is None:
                continue
            pron = BN_PRONOUN[person, rule.politeness]
            bn_code = str(encode_clause(bn, lex, parse_clause(f"{pron}/PRON {bn_form}/VERB #order=SOV")))
            for en_form in en_forms:
                en_line = f"{EN_PRONOUN[person]}/PRON {_verb_token(en_form)} #order=SVO"
                en_code = str(encode_clause(en, lex, parse_clause(en_line)))
                checked += 1
                if en_code == bn_code:
                    equal += 1
                else:
                    mismatches.append((bn_form, en_form, bn_code, en_code))
    report(
        "C3 cross-lingual",
        worked and checked > 0 and equal == checked,
        f"'I will go' == 'আমি যাব' -> {english} (query score {hit_en.score}); "
        f"{equal}/{checked} clause pairs equal over {len(shared)} shared roots x 9 cells "
        f"{mismatches[:3]}",
    )


# 4 -------------------------------------------------------------------------

def _all_strings(alphabet, max_len):
    return ["".join(p) for n in range(max_len + 1) for p in itertools.product(alphabet, repeat=n)]


def recursive_oracle_table(alphabet, max_len):
    """Edit distance between every pair of strings up to ``max_len``,
    evaluated from the recursive definition over prefixes.

    Strings are numbered by length then lexicographically, so the prefix of
    string k (length n) is string k // |alphabet| of length n - 1.
    """
    a = len(alphabet)
    sizes = [a ** n for n in range(max_len + 1)]
    starts = np.concatenate([[0], np.cumsum(sizes)])
    total = int(starts[-1])
    d = np.zeros((total, total), dtype=np.int16)
    lengths = np.repeat(np.arange(max_len + 1), sizes)
    d[0, :] = lengths
    d[:, 0] = lengths
    for la in range(1, max_len + 1):
        rows = slice(starts[la], starts[la + 1])
        row_parent = starts[la - 1] + np.arange(sizes[la]) // a
        row_last = np.arange(sizes[la]) % a
        for lb in range(0, max_len + 1):
            cols = slice(starts[lb], starts[lb + 1])
            if lb == 0:
                continue
            col_parent = starts[lb - 1] + np.arange(sizes[lb]) // a
            col_last = np.arange(sizes[lb]) % a
            delete = d[row_parent, cols] + 1
            insert = d[rows, col_parent] + 1
            sub = d[np.ix_(row_parent, col_parent)] + (row_last[:, None] != col_last[None, :])
            d[rows, cols] = np.minimum(np.minimum(delete, insert), sub)
    return d


def _naive(x, y):
    if not x or not y:
        return len(x) + len(y)
    return min(_naive(x[1:], y) + 1, _naive(x, y[1:]) + 1, _naive(x[1:], y[1:]) + (x[0] != y[0]))


def _random_unicode(rng):
    pools = [
        (0x61, 0x7A), (0x0980, 0x09FF), (0x0900, 0x097F), (0x0300, 0x036F),
        (0x4E00, 0x4E40), (0x1F600, 0x1F640), (0x00C0, 0x00FF),
    ]
    out = []
    for _ in range(rng.randint(0, 8)):
        lo, hi = rng.choice(pools)
        out.append(chr(rng.randint(lo, hi)))
    return "".join(out)


def test_c4_levenshtein_oracle():
    start = time.perf_counter()
    words = _all_strings("abcd", 6)
    oracle = recursive_oracle_table("abcd", 6)
    # the prefix table itself against the unmemoized recursion on short words
    short = _all_strings("abcd", 3)
    for i, x in enumerate(short):
        for j, y in enumerate(short):
            assert oracle[i, j] == _naive(x, y)

    discrepancies = 0
    for lo in range(0, len(words), 512):
        block = cross_distances(words[lo:lo + 512], words)
        discrepancies += int(np.count_nonzero(block != oracle[lo:lo + 512]))
    pairs = len(words) ** 2

    rng = random.Random(20170902)
    axiom_failures = 0
    for _ in range(10_000):
        x, y, z = (_random_unicode(rng) for _ in range(3))
        nx, ny = unicodedata.normalize("NFC", x), unicodedata.normalize("NFC", y)
        dxy = levenshtein(x, y)
        ok = (
            levenshtein(x, x) == 0
            and dxy == levenshtein(y, x)
            and (dxy == 0) == (nx == ny)
            and levenshtein(x, z) <= dxy + levenshtein(y, z)
        )
        axiom_failures += not ok
    elapsed = time.perf_counter() - start
    report(
        "C4 levenshtein",
        discrepancies == 0 and axiom_failures == 0,
        f"{discrepancies} discrepancies over {pairs} pairs (len<=6, alphabet abcd); "
        f"{axiom_failures} metric-axiom failures over 10000 random triples; {elapsed:.1f}s",
    )


# 5 -------------------------------------------------------------------------

NON_VERBS = ["টেবিল", "বই", "কম্পিউটার", "জানালা", "abc", "রবীন্দ্রনাথ", "১২৩", "x"]


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_c5_batch_partition(bn, tmp_path, seed):
    rng = random.Random(seed)
    cells = bn.cells()
    n = 1000 + rng.randint(0, 500)
    lines = []
    for _ in range(n):
        roll = rng.random()
        if roll < 0.6:
            lines.append(generate(bn, rng.choice(TEST_ROOTS), rng.choice(cells)))
        elif roll < 0.8:
            lines.append(rng.choice(NON_VERBS))
        else:
            lines.append("".join(chr(rng.randint(0x0985, 0x09B9)) for _ in range(rng.randint(1, 6))))
    src = tmp_path / "Input.doc"
    src.write_text("\n".join(lines) + "\n", encoding="utf-8")
    out = tmp_path / "out"
    summary = run_batch(bn, src, out)
    cell_lines = sum(len(p.read_text(encoding="utf-8").splitlines()) for p in out.glob("*_?.txt"))
    rejected = len((out / "rejected.txt").read_text(encoding="utf-8").splitlines())
    output = len((out / "output.tsv").read_text(encoding="utf-8").splitlines())
    ok = cell_lines + rejected == n and cell_lines == output == summary.analyzed
    report(
        f"C5 batch partition (seed {seed})",
        ok,
        f"{cell_lines} cell lines + {rejected} rejected = {cell_lines + rejected} of {n} input lines",
    )


# 6 -------------------------------------------------------------------------

def _random_clauses(bn, en, rng, count):
    bn_subjects = ["আমি/PRON", "তুমি/PRON", "সে/PRON", "আমরা/PRON:C1,PL", None]
    bn_objects = ["ভাত/NOUN:C2,SG", "বই/NOUN:C2,SG", "জল/NOUN:C2,SG", None]
    en_subjects = ["I/PRON", "you/PRON", "he/PRON", "we/PRON:C1,PL", None]
    en_objects = ["rice/NOUN:C2,SG", "book/NOUN:C2,SG", "water/NOUN:C2,SG", None]
    out = []
    for i in range(count):
        if rng.random() < 0.5:
            table, subjects, objects, order = bn, bn_subjects, bn_objects, "SOV"
        else:
            table, subjects, objects, order = en, en_subjects, en_objects, "SVO"
        root = rng.choice(sorted(table.declared_roots - {"আস"}))
        rule = rng.choice([r for r in table.rules if r.realize(root) is not None])
        verb = _verb_token(rule.realize(root))
        s, o = rng.choice(subjects), rng.choice(objects)
        if order == "SOV":
            toks = [t for t in (s, o, verb) if t]
        else:
            toks = [t for t in (s, verb, o) if t]
        line = " ".join(toks) + f" #order={order}"
        out.append((f"{table.language}-{i:04d}", table, line))
    return out


def test_c6_persistence_round_trip(bn, en, lex, tmp_path):
    rng = random.Random(6)
    directory = tmp_path / "idx"
    idx = MatchIndex(directory)
    composites = []
    for doc_id, table, line in _random_clauses(bn, en, rng, 120):
        code = str(encode_clause(table, lex, parse_clause(line)))
        composites.append(code)
        idx.add(IndexedSentence(doc_id, table.language, line.partition("#")[0].strip(), code))
    queries = [rng.choice(composites) for _ in range(25)]
    for _, table, line in _random_clauses(bn, en, rng, 25):
        queries.append(str(encode_clause(table, lex, parse_clause(line))))
    before = ["\n".join(map(str, idx.query(q))) for q in queries]
    idx.close()
    reopened = MatchIndex(directory)
    after = ["\n".join(map(str, reopened.query(q))) for q in queries]
    same = sum(a.encode() == b.encode() for a, b in zip(before, after))
    report(
        "C6 persistence",
        len(reopened) == 120 and same == len(queries) == 50,
        f"{same}/{len(queries)} queries byte-identical after reopen; {len(reopened)} sentences",
    )


# 7 -------------------------------------------------------------------------

def _cli(args, cwd):
    proc = subprocess.run(
        [sys.executable, "-m", "rootcode", *args], cwd=cwd, capture_output=True, timeout=120
    )
    return proc.returncode, proc.stdout


def _tree(directory):
    return {p.relative_to(directory).as_posix(): p.read_bytes()
            for p in sorted(directory.rglob("*")) if p.is_file()}


def test_c7_cli_determinism(tmp_path):
    (tmp_path / "Input.doc").write_text("যাব\nকরলাম\nটেবিল\nগিয়েছিলাম\n", encoding="utf-8")
    (tmp_path / "gold.tsv").write_text("যাব\tযা\tFUT\t1\nএলাম\tআস\tPST\t1\n", encoding="utf-8")
    clause = "আমি/PRON:C1,SG যাব/VERB #order=SOV"
    commands = {
        "analyze": lambda d: ["analyze", "--all", "যাব", "করলাম", "খেলে"],
        "generate": lambda d: ["generate", "যা", "PST", "1", "--native-tense", "PST.PERF"],
        "batch": lambda d: ["batch", "Input.doc", "--outdir", f"{d}/batch"],
        "evaluate": lambda d: ["evaluate", "--gold", "gold.tsv", "--outdir", f"{d}/eval"],
        "encode": lambda d: ["encode", clause],
        "index": lambda d: ["index", "--index", f"{d}/idx", "--doc-id", "bn-1", clause],
        "query": lambda d: ["query", "--index", f"{d}/idx", "S:asmad.C1.SG|O:-|V:gam.FUT.1"],
    }
    results = {}
    for run in ("run1", "run2"):
        (tmp_path / run).mkdir()
        for name, argv in commands.items():
            results[run, name] = _cli(argv(run), tmp_path)
    bad = [name for name in commands
           if results["run1", name] != results["run2", name] or results["run1", name][0] != 0]
    files_equal = _tree(tmp_path / "run1") == _tree(tmp_path / "run2")
    report(
        "C7 CLI determinism",
        not bad and files_equal and bool(results["run1", "query"][1]),
        f"{len(commands) - len(bad)}/{len(commands)} subcommands byte-identical stdout; "
        f"output trees identical={files_equal} {bad}",
    )
