"""Batch root extraction over a verb list, and accuracy against gold data."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .codes import Person, Tense, nfc
from .errors import MalformedGoldLine
from .rules import RuleTable, analyze

CELLS = [(t, p) for t in Tense for p in Person]


def cell_filename(tense: Tense, person: Person) -> str:
    return f"{tense.value}_{person.value}.txt"


def read_lines(path) -> list[str]:
    text = Path(path).read_text(encoding="utf-8")
    return [nfc(line.strip()) for line in text.splitlines() if line.strip()]


@dataclass
class BatchSummary:
    total: int = 0
    analyzed: int = 0
    rejected: int = 0
    per_cell: Counter = field(default_factory=Counter)

    def lines(self) -> list[str]:
        out = [f"total\t{self.total}", f"analyzed\t{self.analyzed}", f"rejected\t{self.rejected}"]
        for tense, person in CELLS:
            out.append(f"{tense.value}_{person.value}\t{self.per_cell[tense, person]}")
        return out


def run_batch(table: RuleTable, input_path, outdir) -> BatchSummary:
    """Analyze every line of a verb list, one verb per line.

    Writes ``output.tsv`` (surface, root), one ``<TENSE>_<PERSON>.txt`` per
    cell that received roots, and ``rejected.txt`` for lines with no reading.
    """
    words = read_lines(input_path)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for tense, person in CELLS:
        stale = outdir / cell_filename(tense, person)
        if stale.exists():
            stale.unlink()

    summary = BatchSummary(total=len(words))
    output, rejected = [], []
    cells: dict[tuple, list[str]] = {}
    for word in words:
        readings = analyze(table, word)
        if not readings:
            rejected.append(word)
            continue
        top = readings[0]
        output.append(f"{word}\t{top.native_root}")
        cells.setdefault(top.features.cell(), []).append(top.native_root)

    summary.analyzed = len(output)
    summary.rejected = len(rejected)
    _write_lines(outdir / "output.tsv", output)
    _write_lines(outdir / "rejected.txt", rejected)
    for tense, person in CELLS:
        roots = cells.get((tense, person))
        if roots:
            _write_lines(outdir / cell_filename(tense, person), roots)
            summary.per_cell[tense, person] = len(roots)
    return summary


def _write_lines(path: Path, lines):
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8", newline="\n")


@dataclass(frozen=True)
class GoldEntry:
    surface: str
    expected_root: str
    expected_tense: Tense
    expected_person: Person


def load_gold(source: str) -> list[GoldEntry]:
    entries = []
    for lineno, line in enumerate(nfc(source).split("\n"), 1):
        line = line.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = [f.strip() for f in line.split("\t")]
        if len(fields) != 4 or not all(fields):
            raise MalformedGoldLine("expected surface, root, tense, person", lineno)
        surface, root, tense, person = fields
        try:
            entries.append(GoldEntry(surface, root, Tense(tense), Person(person.removeprefix("P"))))
        except ValueError as exc:
            raise MalformedGoldLine(str(exc), lineno) from None
    return entries


@dataclass
class EvalReport:
    total: int = 0
    correct_root: int = 0
    correct_full: int = 0
    per_cell: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def accuracy_root(self) -> float:
        return self.correct_root / self.total if self.total else 0.0

    @property
    def accuracy_full(self) -> float:
        return self.correct_full / self.total if self.total else 0.0

    def summary_lines(self) -> list[str]:
        return [
            f"total\t{self.total}",
            f"correct_root\t{self.correct_root}",
            f"correct_full\t{self.correct_full}",
            f"accuracy_root\t{self.accuracy_root:.4f}",
            f"accuracy_full\t{self.accuracy_full:.4f}",
        ]

    def to_tsv(self) -> str:
        rows = ["# cell\ttotal\tcorrect_root\tcorrect_full"]
        for (tense, person), (n, root_ok, full_ok) in sorted(
            self.per_cell.items(), key=lambda kv: CELLS.index(kv[0])
        ):
            rows.append(f"{tense.value}_{person.value}\t{n}\t{root_ok}\t{full_ok}")
        rows.append("# surface\texpected\tgot")
        for surface, expected, got in self.failures:
            rows.append(f"{surface}\t{expected}\t{got or '-'}")
        return "\n".join(self.summary_lines() + rows) + "\n"


def _describe(root: str, tense: Tense, person: Person) -> str:
    return f"{root}.{tense.value}.{person.value}"


def evaluate(table: RuleTable, gold) -> EvalReport:
    """Score the top-ranked analysis of each gold form.

    ``gold`` is gold-file text or an already parsed list of entries.
    """
    entries = load_gold(gold) if isinstance(gold, str) else list(gold)
    report = EvalReport(total=len(entries))
    cells: dict[tuple, list[int]] = {}
    for entry in entries:
        readings = analyze(table, entry.surface)
        top = readings[0] if readings else None
        root_ok = top is not None and top.native_root == nfc(entry.expected_root)
        full_ok = root_ok and top.features.cell() == (entry.expected_tense, entry.expected_person)
        report.correct_root += root_ok
        report.correct_full += full_ok
        counts = cells.setdefault((entry.expected_tense, entry.expected_person), [0, 0, 0])
        counts[0] += 1
        counts[1] += root_ok
        counts[2] += full_ok
        if not full_ok:
            got: Optional[str] = None
            if top is not None:
                got = _describe(top.native_root, top.features.tense, top.features.person)
            expected = _describe(entry.expected_root, entry.expected_tense, entry.expected_person)
            report.failures.append((entry.surface, expected, got))
    report.per_cell = {k: tuple(v) for k, v in cells.items()}
    return report
