"""Domain types and the canonical text form of universal codes.

A verb code looks like ``gam.FUT.1`` (root, tense, person, optional number),
a nominal code like ``asmad.C1.SG`` (root, case, number).  A clause is
rendered as ``S:<code>|O:<code>|V:<code>`` with ``-`` for an empty slot.
"""

from __future__ import annotations

import enum
import re
import unicodedata
from dataclasses import dataclass
from typing import Optional

from .errors import MalformedCode


def nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


class Tense(enum.Enum):
    PRS = "PRS"
    PST = "PST"
    FUT = "FUT"


class Person(enum.Enum):
    P1 = "1"
    P2 = "2"
    P3 = "3"


class GramNumber(enum.Enum):
    SG = "SG"
    DU = "DU"
    PL = "PL"


class Politeness(enum.Enum):
    INTIMATE = "INTIMATE"
    FAMILIAR = "FAMILIAR"
    HONORIFIC = "HONORIFIC"


class Kind(enum.Enum):
    VERB = "VERB"
    NOMINAL = "NOMINAL"


def parse_tense(token: str) -> Tense:
    try:
        return Tense(token)
    except ValueError:
        raise MalformedCode(f"unknown tense token {token!r}") from None


def parse_person(token: str) -> Person:
    token = token[1:] if token.startswith("P") else token
    try:
        return Person(token)
    except ValueError:
        raise MalformedCode(f"unknown person token {token!r}") from None


def parse_number(token: str) -> GramNumber:
    try:
        return GramNumber(token)
    except ValueError:
        raise MalformedCode(f"unknown number token {token!r}") from None


@dataclass(frozen=True)
class Case:
    """Sanskrit vibhakti 1-7, with 8 for the vocative."""

    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or not 1 <= self.value <= 8:
            raise MalformedCode(f"case out of range 1..8: {self.value!r}")


@dataclass(frozen=True)
class Features:
    tense: Tense
    person: Person
    native_tense: str
    number: Optional[GramNumber] = None
    politeness: Optional[Politeness] = None

    def cell(self) -> tuple[Tense, Person]:
        return self.tense, self.person


@dataclass(frozen=True)
class Analysis:
    surface: str
    native_root: str
    suffix: str
    features: Features
    rule_id: str


ROOT_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


@dataclass(frozen=True)
class UniversalCode:
    """A language-independent code for one verb or nominal.

    Equality is over exactly what the rendering carries, so politeness and
    native tense never reach this type.
    """

    kind: Kind
    root_id: str
    tense: Optional[Tense] = None
    person: Optional[Person] = None
    number: Optional[GramNumber] = None
    case: Optional[Case] = None

    def __post_init__(self):
        if not ROOT_RE.match(self.root_id):
            raise MalformedCode(f"bad root id {self.root_id!r}")
        if self.kind is Kind.VERB:
            if self.tense is None or self.person is None or self.case is not None:
                raise MalformedCode("verb code needs tense and person and no case")
        else:
            if self.case is None or self.number is None:
                raise MalformedCode("nominal code needs case and number")
            if self.tense is not None or self.person is not None:
                raise MalformedCode("nominal code cannot carry tense or person")

    @classmethod
    def verb(cls, root_id, tense, person, number=None) -> "UniversalCode":
        return cls(Kind.VERB, root_id, tense=tense, person=person, number=number)

    @classmethod
    def nominal(cls, root_id, case, number=GramNumber.SG) -> "UniversalCode":
        if isinstance(case, int):
            case = Case(case)
        return cls(Kind.NOMINAL, root_id, case=case, number=number)

    def __str__(self):
        return render_code(self)


@dataclass(frozen=True)
class CompositeCode:
    verb: UniversalCode
    subject: Optional[UniversalCode] = None
    object: Optional[UniversalCode] = None

    def __post_init__(self):
        if self.verb.kind is not Kind.VERB:
            raise MalformedCode("verb slot must hold a verb code")

    def slots(self) -> tuple[Optional[UniversalCode], Optional[UniversalCode], UniversalCode]:
        return self.subject, self.object, self.verb

    def __str__(self):
        return render_composite(self)


def render_code(code: UniversalCode) -> str:
    if code.kind is Kind.VERB:
        parts = [code.root_id, code.tense.value, code.person.value]
        if code.number is not None:
            parts.append(code.number.value)
    else:
        parts = [code.root_id, f"C{code.case.value}", code.number.value]
    return ".".join(parts)


def parse_code(text: str) -> UniversalCode:
    parts = text.split(".")
    if len(parts) not in (3, 4):
        raise MalformedCode(f"wrong field count in {text!r}")
    root = parts[0]
    if not ROOT_RE.match(root):
        raise MalformedCode(f"bad root id {root!r}")
    second = parts[1]
    if len(second) == 2 and second[0] == "C" and second[1] in "0123456789":
        if len(parts) != 3:
            raise MalformedCode(f"nominal code takes 3 fields: {text!r}")
        case = int(second[1])
        if not 1 <= case <= 8:
            raise MalformedCode(f"case out of range 1..8 in {text!r}")
        return UniversalCode.nominal(root, Case(case), parse_number(parts[2]))
    tense = parse_tense(second)
    if parts[2] not in ("1", "2", "3"):
        raise MalformedCode(f"unknown person token {parts[2]!r}")
    person = Person(parts[2])
    number = parse_number(parts[3]) if len(parts) == 4 else None
    return UniversalCode.verb(root, tense, person, number)


def render_composite(c: CompositeCode) -> str:
    def slot(code):
        return "-" if code is None else render_code(code)

    return f"S:{slot(c.subject)}|O:{slot(c.object)}|V:{render_code(c.verb)}"


def parse_composite(text: str) -> CompositeCode:
    pieces = text.strip().split("|")
    if len(pieces) != 3:
        raise MalformedCode(f"composite needs S|O|V slots: {text!r}")
    values = []
    for piece, label in zip(pieces, "SOV"):
        if not piece.startswith(label + ":"):
            raise MalformedCode(f"expected slot {label} in {text!r}")
        body = piece[2:]
        values.append(None if body == "-" else parse_code(body))
    subject, obj, verb = values
    if verb is None or verb.kind is not Kind.VERB:
        raise MalformedCode(f"verb slot must hold a verb code: {text!r}")
    for code in (subject, obj):
        if code is not None and code.kind is not Kind.NOMINAL:
            raise MalformedCode(f"S and O slots hold nominal codes: {text!r}")
    return CompositeCode(verb=verb, subject=subject, object=obj)
