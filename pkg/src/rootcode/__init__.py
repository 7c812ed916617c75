"""Rule-based root extraction and cross-lingual universal codes."""

from .codes import (
    Analysis,
    Case,
    CompositeCode,
    Features,
    GramNumber,
    Kind,
    Person,
    Politeness,
    Tense,
    UniversalCode,
    parse_code,
    parse_composite,
    render_code,
    render_composite,
)
from .encoder import ClauseSpec, TaggedToken, encode_clause, encode_nominal, encode_verb, parse_clause
from .evaluation import evaluate, run_batch
from .index import IndexedSentence, MatchIndex
from .lexicon import RootLexicon, levenshtein, load_lexicon, map_root
from .rules import RuleTable, analyze, generate, load_rules, strip_suffix

__version__ = "0.1.0"
