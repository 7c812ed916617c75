"""Suffix rule tables: load, analyze (surface -> root + features), generate.

Each rule pairs an inflectional suffix with a feature bundle and an ordered
list of stem rewrites.  Generation applies the first rewrite whose pattern
matches the root and appends the suffix; analysis strips the suffix, inverts
the rewrites to propose candidate roots and keeps those that replay exactly.

Rewrite syntax, joined by ``;``::

    pat>rep      rewrite a root ending in ``pat``
    ^pat>rep     rewrite a root starting with ``pat`` (``^>x`` prepends x)
    ^pat$>rep    rewrite the whole root
    *>!          match any root; ``!`` as replacement blocks the rule
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from .codes import (
    Analysis,
    Features,
    GramNumber,
    Person,
    Politeness,
    Tense,
    nfc,
)
from .errors import (
    AmbiguousRule,
    DuplicateRule,
    MalformedLine,
    NoRuleForFeatures,
    NotAVerb,
    UnknownTenseToken,
)

log = logging.getLogger(__name__)

EMPTY_SUFFIX = "∅"
ABSENT = "-"
ROOTS_DIRECTIVE = "#@roots"


@dataclass(frozen=True)
class Rewrite:
    pattern: str
    replacement: Optional[str]  # None blocks the rule
    anchor: str  # "end", "start", "whole" or "any"

    def matches(self, root: str) -> bool:
        if self.anchor == "end":
            return root.endswith(self.pattern)
        if self.anchor == "start":
            return root.startswith(self.pattern)
        if self.anchor == "whole":
            return root == self.pattern
        return True

    def apply(self, root: str) -> str:
        if self.anchor == "end":
            return root[: len(root) - len(self.pattern)] + self.replacement
        if self.anchor == "start":
            return self.replacement + root[len(self.pattern):]
        return self.replacement

    def invert(self, stem: str) -> Optional[str]:
        rep = self.replacement
        if rep is None or self.anchor == "any":
            return None
        if self.anchor == "end" and stem.endswith(rep):
            return stem[: len(stem) - len(rep)] + self.pattern
        if self.anchor == "start" and stem.startswith(rep):
            return self.pattern + stem[len(rep):]
        if self.anchor == "whole" and stem == rep:
            return self.pattern
        return None

    def __str__(self):
        rep = "!" if self.replacement is None else self.replacement
        lhs = {
            "end": self.pattern,
            "start": "^" + self.pattern,
            "whole": "^" + self.pattern + "$",
            "any": "*",
        }[self.anchor]
        return f"{lhs}>{rep}"


def parse_rewrites(text: str) -> tuple[Rewrite, ...]:
    if text == ABSENT:
        return ()
    out = []
    for item in text.split(";"):
        if not item:
            continue
        lhs, sep, rhs = item.partition(">")
        if not sep:
            raise ValueError(f"rewrite {item!r} lacks '>'")
        rep = None if rhs == "!" else rhs
        if lhs == "*":
            if rep is not None:
                raise ValueError("'*' may only be used to block ('*>!')")
            out.append(Rewrite("", None, "any"))
        elif lhs.startswith("^") and lhs.endswith("$") and len(lhs) > 1:
            out.append(Rewrite(lhs[1:-1], rep, "whole"))
        elif lhs.startswith("^"):
            out.append(Rewrite(lhs[1:], rep, "start"))
        else:
            lhs = lhs[:-1] if lhs.endswith("$") else lhs
            if not lhs:
                raise ValueError(f"empty ending pattern in {item!r}")
            out.append(Rewrite(lhs, rep, "end"))
    return tuple(out)


def apply_stem_transform(root: str, rewrites: Iterable[Rewrite]) -> Optional[str]:
    """Return the inflection stem for ``root``, or None if a rewrite blocks it."""
    for rw in rewrites:
        if rw.matches(root):
            return None if rw.replacement is None else rw.apply(root)
    return root


@dataclass(frozen=True)
class Rule:
    rule_id: str
    suffix: str
    tense: Tense
    person: Person
    native_tense: str
    politeness: Optional[Politeness] = None
    number: Optional[GramNumber] = None
    stem_transform: tuple[Rewrite, ...] = ()

    @property
    def features(self) -> Features:
        return Features(
            tense=self.tense,
            person=self.person,
            native_tense=self.native_tense,
            number=self.number,
            politeness=self.politeness,
        )

    @property
    def key(self):
        return self.suffix, self.person, self.native_tense, self.politeness

    def stem(self, root: str) -> Optional[str]:
        return apply_stem_transform(root, self.stem_transform)

    def realize(self, root: str) -> Optional[str]:
        stem = self.stem(root)
        return None if stem is None else stem + self.suffix

    def candidate_roots(self, stem: str) -> list[str]:
        """Roots whose stem under this rule is exactly ``stem``."""
        found = []
        for cand in [stem] + [rw.invert(stem) for rw in self.stem_transform]:
            if cand and cand not in found and self.stem(cand) == stem:
                found.append(cand)
        return found


def _rank(rule: Rule):
    return -len(rule.suffix), rule.rule_id


class RuleTable:
    """An immutable, sorted collection of rules for one language."""

    def __init__(self, language: str, rules: Iterable[Rule], declared_roots=None):
        self.language = language
        self.rules = tuple(sorted(rules, key=_rank))
        self.declared_roots = None if declared_roots is None else frozenset(declared_roots)
        self._by_suffix: dict[str, list[Rule]] = {}
        for rule in self.rules:
            self._by_suffix.setdefault(rule.suffix, []).append(rule)
        self._max_suffix = max((len(r.suffix) for r in self.rules), default=0)

    def __len__(self):
        return len(self.rules)

    def __repr__(self):
        n_roots = "open" if self.declared_roots is None else len(self.declared_roots)
        return f"RuleTable({self.language!r}, {len(self.rules)} rules, roots={n_roots})"

    def with_roots(self, roots) -> "RuleTable":
        return RuleTable(self.language, self.rules, roots)

    def open(self) -> "RuleTable":
        """The same rules without the closed root inventory."""
        return RuleTable(self.language, self.rules, None)

    def rules_with_suffix(self, suffix: str) -> list[Rule]:
        return self._by_suffix.get(suffix, [])

    def cells(self) -> list[Features]:
        seen = []
        for rule in sorted(self.rules, key=lambda r: r.rule_id):
            if rule.features not in seen:
                seen.append(rule.features)
        return seen


def load_rules(source: str, language: str = "und", roots=None) -> RuleTable:
    """Parse rule-file text.

    ``#@roots`` lines declare the language's verb roots; analysis then only
    returns those.  An explicit ``roots`` argument is added to them.
    """
    rules = []
    seen_keys: dict[tuple, int] = {}
    native_map: dict[str, Tense] = {}
    declared = None if roots is None else set(nfc(r) for r in roots)

    for lineno, raw in enumerate(nfc(source).split("\n"), 1):
        line = raw.rstrip("\r")
        if line.startswith(ROOTS_DIRECTIVE):
            declared = declared or set()
            declared.update(line[len(ROOTS_DIRECTIVE):].split())
            continue
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 7:
            raise MalformedLine(f"expected 7 tab-separated fields, got {len(fields)}", lineno)
        suffix, tense_tok, person_tok, native, pol_tok, num_tok, rw_text = fields
        if not suffix:
            raise MalformedLine(f"empty suffix field (write {EMPTY_SUFFIX})", lineno)
        suffix = "" if suffix == EMPTY_SUFFIX else suffix
        try:
            tense = Tense(tense_tok)
        except ValueError:
            raise UnknownTenseToken(f"unknown tense token {tense_tok!r}", lineno) from None
        try:
            person = Person(person_tok.removeprefix("P"))
            politeness = None if pol_tok == ABSENT else Politeness(pol_tok)
            number = None if num_tok == ABSENT else GramNumber(num_tok)
            rewrites = parse_rewrites(rw_text)
        except ValueError as exc:
            raise MalformedLine(str(exc), lineno) from None
        if not native or native == ABSENT:
            raise MalformedLine("native tense tag is required", lineno)
        if native_map.setdefault(native, tense) is not tense:
            raise MalformedLine(
                f"native tense {native!r} already mapped to {native_map[native].value}", lineno
            )
        rule = Rule(
            rule_id=f"{language}:{lineno:05d}",
            suffix=suffix,
            tense=tense,
            person=person,
            native_tense=native,
            politeness=politeness,
            number=number,
            stem_transform=rewrites,
        )
        if rule.key in seen_keys:
            raise DuplicateRule(
                f"same suffix/person/native tense/politeness as line {seen_keys[rule.key]}",
                lineno,
            )
        seen_keys[rule.key] = lineno
        rules.append(rule)

    table = RuleTable(language, rules, declared)
    log.debug("loaded %r", table)
    return table


def strip_suffix(surface: str, suffix: str) -> Optional[str]:
    if not suffix:
        return surface
    if surface.endswith(suffix):
        return surface[: len(surface) - len(suffix)]
    return None


def analyze(table: RuleTable, surface: str, strict: bool = False) -> list[Analysis]:
    """All readings of ``surface``, longest suffix first, then by rule id."""
    surface = nfc(surface)
    if not surface:
        raise ValueError("empty surface form")
    found = []
    for k in range(min(len(surface), table._max_suffix), -1, -1):
        suffix = surface[len(surface) - k:] if k else ""
        stem = strip_suffix(surface, suffix)
        for rule in table.rules_with_suffix(suffix):
            for root in rule.candidate_roots(stem):
                if table.declared_roots is not None and root not in table.declared_roots:
                    continue
                found.append(Analysis(surface, root, suffix, rule.features, rule.rule_id))
    if not found and strict:
        raise NotAVerb(f"{surface!r} is not a verb: no suffix rule matches")
    return found


def matching_rules(table: RuleTable, features: Features) -> list[Rule]:
    return [r for r in table.rules if r.features == features]


def generate(table: RuleTable, root: str, features: Features) -> str:
    root = nfc(root)
    applicable = [r for r in matching_rules(table, features) if r.stem(root) is not None]
    if not applicable:
        raise NoRuleForFeatures(f"no rule realizes {features} for root {root!r}")
    if len(applicable) > 1:
        ids = ", ".join(r.rule_id for r in applicable)
        raise AmbiguousRule(f"rules {ids} all realize {features} for {root!r}")
    return applicable[0].realize(root)


def rule_by_id(table: RuleTable, rule_id: str) -> Rule:
    for rule in table.rules:
        if rule.rule_id == rule_id:
            return rule
    raise KeyError(rule_id)
