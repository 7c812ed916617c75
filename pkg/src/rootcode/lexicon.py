"""Native root -> universal root mapping.

Exact lookup runs on the lexicon sorted by (language, native root); a miss
falls back to the same-language entry with the least edit distance.
"""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
from numba import njit

from .codes import ROOT_RE, nfc
from .errors import DuplicateEntry, MalformedLine, NoMapping

DEFAULT_MAX_DISTANCE = 2


@njit(cache=True)
def _edit_distance(a, b):
    n, m = a.shape[0], b.shape[0]
    if n < m:
        a, b = b, a
        n, m = m, n
    prev = np.arange(m + 1)
    cur = np.empty(m + 1, dtype=prev.dtype)
    for i in range(1, n + 1):
        cur[0] = i
        ai = a[i - 1]
        for j in range(1, m + 1):
            cost = prev[j - 1] + (0 if ai == b[j - 1] else 1)
            if prev[j] + 1 < cost:
                cost = prev[j] + 1
            if cur[j - 1] + 1 < cost:
                cost = cur[j - 1] + 1
            cur[j] = cost
        prev, cur = cur, prev
    return prev[m]


@njit(cache=True)
def _cross_distances(a_flat, a_off, b_flat, b_off, out):
    for i in range(a_off.shape[0] - 1):
        a = a_flat[a_off[i]:a_off[i + 1]]
        for j in range(b_off.shape[0] - 1):
            out[i, j] = _edit_distance(a, b_flat[b_off[j]:b_off[j + 1]])


def _codepoints(s: str) -> np.ndarray:
    return np.frombuffer(s.encode("utf-32-le"), dtype=np.uint32)


def _pack(strings: Sequence[str]):
    offsets = np.zeros(len(strings) + 1, dtype=np.int64)
    offsets[1:] = np.cumsum([len(s) for s in strings])
    flat = _codepoints("".join(strings))
    return flat, offsets


def levenshtein(a: str, b: str) -> int:
    """Unit-cost edit distance over NFC codepoints."""
    return int(_edit_distance(_codepoints(nfc(a)), _codepoints(nfc(b))))


def cross_distances(left: Sequence[str], right: Sequence[str]) -> np.ndarray:
    """Edit distance for every (left[i], right[j]) pair."""
    left = [nfc(s) for s in left]
    right = [nfc(s) for s in right]
    out = np.zeros((len(left), len(right)), dtype=np.int64)
    if left and right:
        _cross_distances(*_pack(left), *_pack(right), out)
    return out


class Method(enum.Enum):
    EXACT = "EXACT"
    FALLBACK = "FALLBACK"


@dataclass(frozen=True)
class LexEntry:
    language: str
    native_root: str
    universal_root_id: str


@dataclass(frozen=True)
class MappingResult:
    universal_root_id: str
    method: Method
    distance: int
    native_root: str
    runner_up_distance: Optional[int] = None


class RootLexicon:
    def __init__(self, entries: Iterable[LexEntry]):
        self.entries = tuple(sorted(entries, key=lambda e: (e.language, e.native_root)))
        self._keys = [(e.language, e.native_root) for e in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def language_slice(self, language: str) -> tuple[LexEntry, ...]:
        lo = bisect.bisect_left(self._keys, (language, ""))
        hi = bisect.bisect_left(self._keys, (language + "\0", ""))
        return self.entries[lo:hi]

    def get(self, language: str, native_root: str) -> Optional[LexEntry]:
        key = (language, nfc(native_root))
        i = bisect.bisect_left(self._keys, key)
        if i < len(self._keys) and self._keys[i] == key:
            return self.entries[i]
        return None

    def natives_of(self, language: str, universal_root_id: str) -> list[str]:
        return [e.native_root for e in self.language_slice(language)
                if e.universal_root_id == universal_root_id]


def load_lexicon(source: str) -> RootLexicon:
    entries = []
    seen = {}
    for lineno, line in enumerate(nfc(source).split("\n"), 1):
        line = line.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise MalformedLine(f"expected 3 tab-separated fields, got {len(fields)}", lineno)
        language, native, root_id = (f.strip() for f in fields)
        if not language or not native:
            raise MalformedLine("empty language or native root", lineno)
        if not ROOT_RE.match(root_id):
            raise MalformedLine(f"bad universal root id {root_id!r}", lineno)
        if (language, native) in seen:
            raise DuplicateEntry(
                f"({language}, {native}) already defined on line {seen[language, native]}", lineno
            )
        seen[language, native] = lineno
        entries.append(LexEntry(language, native, root_id))
    return RootLexicon(entries)


def map_root(
    lex: RootLexicon,
    language: str,
    native_root: str,
    max_distance: int = DEFAULT_MAX_DISTANCE,
) -> MappingResult:
    if max_distance < 0:
        raise ValueError("max_distance must be >= 0")
    native_root = nfc(native_root)
    hit = lex.get(language, native_root)
    if hit is not None:
        return MappingResult(hit.universal_root_id, Method.EXACT, 0, hit.native_root)

    pool = lex.language_slice(language)
    if not pool:
        raise NoMapping(f"no {language!r} entries in the lexicon")
    dists = cross_distances([native_root], [e.native_root for e in pool])[0]
    # pool is sorted by native root, so a stable sort on distance breaks ties
    # by the lexicographically smallest root
    order = np.argsort(dists, kind="stable")
    best = pool[order[0]]
    best_d = int(dists[order[0]])
    if best_d > max_distance:
        raise NoMapping(
            f"no {language!r} root within distance {max_distance} of {native_root!r} "
            f"(nearest {best.native_root!r} at {best_d})"
        )
    runner_up = int(dists[order[1]]) if len(order) > 1 else None
    return MappingResult(best.universal_root_id, Method.FALLBACK, best_d, best.native_root, runner_up)
