"""Clause encoding: tagged tokens -> S|O|V composite code."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .codes import (
    Analysis,
    Case,
    CompositeCode,
    GramNumber,
    Person,
    UniversalCode,
    nfc,
    parse_number,
)
from .errors import MalformedClause, MalformedCode, MultipleVerbs, NotAVerb
from .lexicon import DEFAULT_MAX_DISTANCE, RootLexicon, map_root
from .rules import RuleTable, analyze

DEFAULT_CASE = Case(1)
DEFAULT_NUMBER = GramNumber.SG

# grammatical person of the universal pronoun roots; other nominals are 3rd
PRONOUN_PERSON = {
    "asmad": Person.P1,
    "yusmad": Person.P2,
    "tad": Person.P3,
    "bhavat": Person.P3,
}


class POS(enum.Enum):
    NOUN = "NOUN"
    PRON = "PRON"
    VERB = "VERB"
    OTHER = "OTHER"


class WordOrder(enum.Enum):
    SVO = "SVO"
    SOV = "SOV"


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    pos: POS
    case_hint: Optional[Case] = None
    number_hint: Optional[GramNumber] = None

    def __post_init__(self):
        object.__setattr__(self, "surface", nfc(self.surface))
        if self.pos not in (POS.NOUN, POS.PRON) and (self.case_hint or self.number_hint):
            raise MalformedClause(f"case/number hints on a {self.pos.value} token")

    @property
    def nominal(self) -> bool:
        return self.pos in (POS.NOUN, POS.PRON)


@dataclass(frozen=True)
class ClauseSpec:
    tokens: tuple[TaggedToken, ...]
    word_order: WordOrder


def parse_token(text: str) -> TaggedToken:
    word, sep, tag = text.rpartition("/")
    if not sep or not word:
        raise MalformedClause(f"token {text!r} is not word/POS")
    tag, _, hints = tag.partition(":")
    try:
        pos = POS(tag)
    except ValueError:
        raise MalformedClause(f"unknown POS {tag!r} in {text!r}") from None
    case = number = None
    if hints:
        case_tok, _, num_tok = hints.partition(",")
        try:
            if not (case_tok.startswith("C") and case_tok[1:] in tuple("12345678")):
                raise MalformedCode(f"bad case hint {case_tok!r}")
            case = Case(int(case_tok[1:]))
            number = parse_number(num_tok) if num_tok else None
        except MalformedCode as exc:
            raise MalformedClause(f"{exc} in {text!r}") from None
    # multi-word verb groups are written with underscores ("will_go")
    return TaggedToken(word.replace("_", " "), pos, case, number)


def parse_clause(line: str) -> ClauseSpec:
    """Parse ``word/POS[:C<case>,<NUM>] ... #order=SOV|SVO``."""
    body, sep, trailer = line.partition("#")
    if not sep or not trailer.strip().startswith("order="):
        raise MalformedClause(f"missing #order=SOV|SVO trailer: {line!r}")
    order = trailer.strip()[len("order="):]
    try:
        word_order = WordOrder(order)
    except ValueError:
        raise MalformedClause(f"unknown word order {order!r}") from None
    tokens = tuple(parse_token(t) for t in body.split())
    return ClauseSpec(tokens, word_order)


def _verb_code(lex, language, analysis: Analysis, max_distance) -> UniversalCode:
    mapped = map_root(lex, language, analysis.native_root, max_distance)
    f = analysis.features
    return UniversalCode.verb(mapped.universal_root_id, f.tense, f.person, f.number)


def encode_verb(
    table: RuleTable,
    lex: RootLexicon,
    surface: str,
    max_distance: int = DEFAULT_MAX_DISTANCE,
    person: Optional[Person] = None,
) -> UniversalCode:
    """Code for the top-ranked reading of ``surface``.

    With ``person`` given, the best reading agreeing with it is preferred.
    """
    readings = analyze(table, surface)
    if not readings:
        raise NotAVerb(f"{nfc(surface)!r} is not a verb: no suffix rule matches")
    chosen = readings[0]
    if person is not None:
        chosen = next((a for a in readings if a.features.person is person), chosen)
    return _verb_code(lex, table.language, chosen, max_distance)


def encode_nominal(
    lex: RootLexicon,
    token: TaggedToken,
    language: str,
    max_distance: int = DEFAULT_MAX_DISTANCE,
) -> UniversalCode:
    if not token.nominal:
        raise MalformedClause(f"{token.surface!r} is not a noun or pronoun")
    mapped = map_root(lex, language, token.surface, max_distance)
    return UniversalCode.nominal(
        mapped.universal_root_id,
        token.case_hint or DEFAULT_CASE,
        token.number_hint or DEFAULT_NUMBER,
    )


def assign_slots(clause: ClauseSpec):
    """Split a clause into (subject, object, verb) tokens by word order."""
    verbs = [i for i, t in enumerate(clause.tokens) if t.pos is POS.VERB]
    if not verbs:
        raise NotAVerb("clause has no VERB token")
    if len(verbs) > 1:
        raise MultipleVerbs(f"clause has {len(verbs)} VERB tokens")
    v = verbs[0]
    before = [t for t in clause.tokens[:v] if t.nominal]
    after = [t for t in clause.tokens[v + 1:] if t.nominal]
    if clause.word_order is WordOrder.SVO:
        subject = before[0] if before else None
        obj = after[0] if after else None
        extra = before[1:] + after[1:]
    else:
        subject = before[0] if before else None
        obj = before[1] if len(before) > 1 else None
        extra = before[2:] + after
    if extra:
        raise MalformedClause("more than one subject or object candidate")
    return subject, obj, clause.tokens[v]


def encode_clause(
    table: RuleTable,
    lex: RootLexicon,
    clause: ClauseSpec,
    max_distance: int = DEFAULT_MAX_DISTANCE,
) -> CompositeCode:
    language = table.language
    subj_tok, obj_tok, verb_tok = assign_slots(clause)
    subject = obj = None
    agree = None
    if subj_tok is not None:
        subject = encode_nominal(lex, subj_tok, language, max_distance)
        agree = PRONOUN_PERSON.get(subject.root_id, Person.P3)
    if obj_tok is not None:
        obj = encode_nominal(lex, obj_tok, language, max_distance)
    verb = encode_verb(table, lex, verb_tok.surface, max_distance, person=agree)
    return CompositeCode(verb=verb, subject=subject, object=obj)


def tag_words(words, table: RuleTable, lex: RootLexicon) -> list[TaggedToken]:
    """Closed-lexicon tagger for demos: pronouns and nouns from the lexicon,
    verbs from the rule table, everything else OTHER."""
    out = []
    for word in words:
        word = nfc(word.replace("_", " "))
        entry = lex.get(table.language, word)
        if entry is not None and entry.universal_root_id in PRONOUN_PERSON:
            out.append(TaggedToken(word, POS.PRON))
        elif analyze(table, word):
            out.append(TaggedToken(word, POS.VERB))
        elif entry is not None:
            out.append(TaggedToken(word, POS.NOUN))
        else:
            out.append(TaggedToken(word, POS.OTHER))
    return out
