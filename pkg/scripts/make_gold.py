#!/usr/bin/env python3
"""Write the Bengali gold corpus from hand-listed conjugation paradigms.

Consonant-final roots follow one ending table (with a raised stem for the
roots that alternate e/i or o/u); vowel-final roots and the irregular
past/perfect of আস are spelled out in full.  Nothing here touches the rule
engine, so the corpus stays an independent check on it.

    python scripts/make_gold.py [--out src/rootcode/data/gold_bn.tsv]
"""

import argparse
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

# (native tense, universal tense); persons per row: 1, 2 intimate,
# 2 familiar, 3, 3 honorific
ROWS = [
    ("PRS", "PRS"), ("PRS.PROG", "PRS"), ("PRS.PERF", "PRS"),
    ("PST", "PST"), ("PST.PROG", "PST"), ("PST.PERF", "PST"),
    ("PST.HAB", "PST"), ("FUT", "FUT"),
]
PERSONS = ["1", "2", "2", "3", "3"]

# ending, and whether the raised stem is used
CONSONANT_ENDINGS = {
    "PRS": [("ি", 1), ("িস", 1), ("", 0), ("ে", 0), ("েন", 0)],
    "PRS.PROG": [("ছি", 1), ("ছিস", 1), ("ছ", 1), ("ছে", 1), ("ছেন", 1)],
    "PRS.PERF": [("েছি", 1), ("েছিস", 1), ("েছ", 1), ("েছে", 1), ("েছেন", 1)],
    "PST": [("লাম", 1), ("লি", 1), ("লে", 1), ("ল", 1), ("লেন", 1)],
    "PST.PROG": [("ছিলাম", 1), ("ছিলি", 1), ("ছিলে", 1), ("ছিল", 1), ("ছিলেন", 1)],
    "PST.PERF": [("েছিলাম", 1), ("েছিলি", 1), ("েছিলে", 1), ("েছিল", 1), ("েছিলেন", 1)],
    "PST.HAB": [("তাম", 1), ("তিস", 1), ("তে", 1), ("ত", 1), ("তেন", 1)],
    "FUT": [("ব", 1), ("বি", 1), ("বে", 1), ("বে", 1), ("বেন", 1)],
}

CONSONANT_ROOTS = {
    "কর": "কর", "বল": "বল", "চল": "চল", "পড়": "পড়", "দেখ": "দেখ",
    "ধর": "ধর", "রাখ": "রাখ", "বস": "বস", "আস": "আস",
    "লেখ": "লিখ", "শেখ": "শিখ", "শোন": "শুন", "বোঝ": "বুঝ",
    "তোল": "তুল", "ওঠ": "উঠ",
}

# আস: past and perfect are built on এল- / এস-
IRREGULAR_ROWS = {
    "আস": {
        "PST": "এলাম এলি এলে এল এলেন",
        "PRS.PERF": "এসেছি এসেছিস এসেছ এসেছে এসেছেন",
        "PST.PERF": "এসেছিলাম এসেছিলি এসেছিলে এসেছিল এসেছিলেন",
    }
}

VOWEL_PARADIGMS = {
    "যা": """
        যাই যাস যাও যায় যান
        যাচ্ছি যাচ্ছিস যাচ্ছ যাচ্ছে যাচ্ছেন
        গিয়েছি গিয়েছিস গিয়েছ গিয়েছে গিয়েছেন
        গেলাম গেলি গেলে গেল গেলেন
        যাচ্ছিলাম যাচ্ছিলি যাচ্ছিলে যাচ্ছিল যাচ্ছিলেন
        গিয়েছিলাম গিয়েছিলি গিয়েছিলে গিয়েছিল গিয়েছিলেন
        যেতাম যেতিস যেতে যেত যেতেন
        যাব যাবি যাবে যাবে যাবেন""",
    "খা": """
        খাই খাস খাও খায় খান
        খাচ্ছি খাচ্ছিস খাচ্ছ খাচ্ছে খাচ্ছেন
        খেয়েছি খেয়েছিস খেয়েছ খেয়েছে খেয়েছেন
        খেলাম খেলি খেলে খেল খেলেন
        খাচ্ছিলাম খাচ্ছিলি খাচ্ছিলে খাচ্ছিল খাচ্ছিলেন
        খেয়েছিলাম খেয়েছিলি খেয়েছিলে খেয়েছিল খেয়েছিলেন
        খেতাম খেতিস খেতে খেত খেতেন
        খাব খাবি খাবে খাবে খাবেন""",
    "পা": """
        পাই পাস পাও পায় পান
        পাচ্ছি পাচ্ছিস পাচ্ছ পাচ্ছে পাচ্ছেন
        পেয়েছি পেয়েছিস পেয়েছ পেয়েছে পেয়েছেন
        পেলাম পেলি পেলে পেল পেলেন
        পাচ্ছিলাম পাচ্ছিলি পাচ্ছিলে পাচ্ছিল পাচ্ছিলেন
        পেয়েছিলাম পেয়েছিলি পেয়েছিলে পেয়েছিল পেয়েছিলেন
        পেতাম পেতিস পেতে পেত পেতেন
        পাব পাবি পাবে পাবে পাবেন""",
    "দে": """
        দিই দিস দাও দেয় দেন
        দিচ্ছি দিচ্ছিস দিচ্ছ দিচ্ছে দিচ্ছেন
        দিয়েছি দিয়েছিস দিয়েছ দিয়েছে দিয়েছেন
        দিলাম দিলি দিলে দিল দিলেন
        দিচ্ছিলাম দিচ্ছিলি দিচ্ছিলে দিচ্ছিল দিচ্ছিলেন
        দিয়েছিলাম দিয়েছিলি দিয়েছিলে দিয়েছিল দিয়েছিলেন
        দিতাম দিতিস দিতে দিত দিতেন
        দেব দিবি দেবে দেবে দেবেন""",
    "নে": """
        নিই নিস নাও নেয় নেন
        নিচ্ছি নিচ্ছিস নিচ্ছ নিচ্ছে নিচ্ছেন
        নিয়েছি নিয়েছিস নিয়েছ নিয়েছে নিয়েছেন
        নিলাম নিলি নিলে নিল নিলেন
        নিচ্ছিলাম নিচ্ছিলি নিচ্ছিলে নিচ্ছিল নিচ্ছিলেন
        নিয়েছিলাম নিয়েছিলি নিয়েছিলে নিয়েছিল নিয়েছিলেন
        নিতাম নিতিস নিতে নিত নিতেন
        নেব নিবি নেবে নেবে নেবেন""",
    "হ": """
        হই হস হও হয় হন
        হচ্ছি হচ্ছিস হচ্ছ হচ্ছে হচ্ছেন
        হয়েছি হয়েছিস হয়েছ হয়েছে হয়েছেন
        হলাম হলি হলে হল হলেন
        হচ্ছিলাম হচ্ছিলি হচ্ছিলে হচ্ছিল হচ্ছিলেন
        হয়েছিলাম হয়েছিলি হয়েছিলে হয়েছিল হয়েছিলেন
        হতাম হতিস হতে হত হতেন
        হব হবি হবে হবে হবেন""",
}


@dataclass
class GoldConfig:
    out: Path = Path(__file__).resolve().parents[1] / "src/rootcode/data/gold_bn.tsv"
    header: list = field(default_factory=lambda: [
        "# Bengali verb forms: surface, root, tense, person",
        "# standard colloquial paradigms, 8 native tenses x 5 person/politeness slots",
    ])


def consonant_forms(root, raised):
    for native, tense in ROWS:
        literal = IRREGULAR_ROWS.get(root, {}).get(native)
        if literal:
            for form, person in zip(literal.split(), PERSONS):
                yield form, root, tense, person
            continue
        for (ending, high), person in zip(CONSONANT_ENDINGS[native], PERSONS):
            yield (raised if high else root) + ending, root, tense, person


def vowel_forms(root, table):
    lines = [line.split() for line in table.strip().splitlines()]
    assert len(lines) == len(ROWS) and all(len(l) == 5 for l in lines), root
    for (native, tense), forms in zip(ROWS, lines):
        for form, person in zip(forms, PERSONS):
            yield form, root, tense, person


def build():
    for root, raised in CONSONANT_ROOTS.items():
        yield from consonant_forms(root, raised)
    for root, table in VOWEL_PARADIGMS.items():
        yield from vowel_forms(root, table)


def main():
    cfg = GoldConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=cfg.out)
    args = ap.parse_args()
    rows = ["\t".join(r) for r in build()]
    text = "\n".join(cfg.header + rows) + "\n"
    args.out.write_text(unicodedata.normalize("NFC", text), encoding="utf-8")
    print(f"wrote {len(rows)} forms to {args.out}")


if __name__ == "__main__":
    main()
