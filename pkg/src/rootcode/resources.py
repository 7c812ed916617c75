"""Bundled rule tables, lexicon and gold corpus."""

from functools import lru_cache
from importlib import resources

from .evaluation import GoldEntry, load_gold
from .lexicon import RootLexicon, load_lexicon
from .rules import RuleTable, load_rules

LANGUAGES = ("bn", "en")


def read_text(name: str) -> str:
    return resources.files("rootcode").joinpath("data", name).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def bundled_rules(language: str = "bn") -> RuleTable:
    if language not in LANGUAGES:
        raise KeyError(f"no bundled rules for {language!r}")
    return load_rules(read_text(f"{language}.rules"), language)


@lru_cache(maxsize=None)
def bundled_lexicon() -> RootLexicon:
    return load_lexicon(read_text("lexicon.tsv"))


def bundled_gold() -> list[GoldEntry]:
    return load_gold(read_text("gold_bn.tsv"))
