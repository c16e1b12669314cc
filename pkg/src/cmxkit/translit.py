"""Rule-based Devanagari to Roman transliteration.

The mapping is a fixed ASCII table shipped as versioned JSON data, so
romanization is bit-exact across runs and machines. Scanning rules:

* consonants carry an inherent "a" unless followed by a vowel sign (matra)
  or a virama (conjunct);
* the inherent "a" of a word-final consonant is dropped, except in
  single-akshara words ("k" would otherwise swallow the whole syllable);
* a combining nukta folds the preceding consonant into its flap/loan sound;
* everything outside the Devanagari block passes through untouched, so
  whitespace, mentions, and emoticons survive verbatim and line/token
  counts are preserved.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from importlib import resources
from typing import Iterable, Optional

from sklearn.base import BaseEstimator, TransformerMixin

from .corpus import Sentence, Triple
from .errors import TransliterationError

DEVANAGARI_START = 0x0900
DEVANAGARI_END = 0x097F
VIRAMA = "्"
NUKTA = "़"
_DANDA_CLASS = ("।", "॥", "॰")

_DEFAULT_TABLE_RESOURCE = "deva_roman.json"


def _in_devanagari_block(ch: str) -> bool:
    return DEVANAGARI_START <= ord(ch) <= DEVANAGARI_END


def _decode_codepoint(key: str) -> str:
    if not key.startswith("U+"):
        raise ValueError(f"table key {key!r} is not of the form U+XXXX")
    return chr(int(key[2:], 16))


@dataclass(frozen=True)
class TranslitTable:
    """Per-category codepoint maps, loaded from a JSON table file."""

    consonants: dict[str, str]
    vowels_independent: dict[str, str]
    vowel_signs: dict[str, str]
    digits: dict[str, str]
    specials: dict[str, str]
    nukta_combinations: dict[str, str]

    def __post_init__(self) -> None:
        for section in (self.consonants, self.vowels_independent, self.vowel_signs,
                        self.digits, self.specials, self.nukta_combinations):
            for ch, roman in section.items():
                if not roman or not roman.isascii():
                    raise ValueError(
                        f"table entry U+{ord(ch):04X} maps to {roman!r}; "
                        "values must be non-empty ASCII"
                    )
        inherent = "a"
        for ch, roman in self.vowel_signs.items():
            if roman == inherent:
                raise ValueError(
                    f"vowel sign U+{ord(ch):04X} maps to the inherent vowel "
                    f"{inherent!r}, which would be ambiguous"
                )

    @classmethod
    def from_json(cls, obj: dict) -> "TranslitTable":
        def decode(section: str) -> dict[str, str]:
            return {_decode_codepoint(k): v for k, v in obj.get(section, {}).items()}

        return cls(
            consonants=decode("consonants"),
            vowels_independent=decode("vowels_independent"),
            vowel_signs=decode("vowel_signs"),
            digits=decode("digits"),
            specials=decode("specials"),
            nukta_combinations=decode("nukta_combinations"),
        )

    @classmethod
    def load(cls, path) -> "TranslitTable":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    @classmethod
    def default(cls) -> "TranslitTable":
        text = resources.files("cmxkit.data").joinpath(_DEFAULT_TABLE_RESOURCE).read_text("utf-8")
        return cls.from_json(json.loads(text))


def transliterate_line(line: str, table: Optional[TranslitTable] = None) -> str:
    """Transliterate one line; non-Devanagari characters pass through.

    Raises TransliterationError on any Devanagari codepoint the table does
    not cover, naming the codepoint.
    """
    if table is None:
        table = TranslitTable.default()
    out: list[str] = []
    n = len(line)
    i = 0
    word_has_content = False
    while i < n:
        ch = line[i]
        if not _in_devanagari_block(ch):
            out.append(ch)
            word_has_content = False
            i += 1
            continue
        if ch in table.digits:
            out.append(table.digits[ch])
            word_has_content = True
            i += 1
            continue
        if ch in table.vowels_independent:
            out.append(table.vowels_independent[ch])
            word_has_content = True
            i += 1
            continue
        if ch in table.specials:
            out.append(table.specials[ch])
            # danda-class marks end a word; nasal/visarga marks continue one
            word_has_content = ch not in _DANDA_CLASS
            i += 1
            continue
        if ch in table.consonants:
            base = table.consonants[ch]
            j = i + 1
            if j < n and line[j] == NUKTA:
                base = table.nukta_combinations.get(ch, base)
                j += 1
            if j < n and line[j] == VIRAMA:
                out.append(base)
                i = j + 1
                word_has_content = True
                continue
            if j < n and line[j] in table.vowel_signs:
                out.append(base + table.vowel_signs[line[j]])
                i = j + 1
                word_has_content = True
                continue
            word_final = j >= n or not _in_devanagari_block(line[j]) or \
                line[j] in _DANDA_CLASS
            if word_final and word_has_content:
                out.append(base)
            else:
                out.append(base + "a")
            word_has_content = True
            i = j
            continue
        if ch in table.vowel_signs:
            # stray matra with no consonant: emit its vowel rather than lose it
            out.append(table.vowel_signs[ch])
            word_has_content = True
            i += 1
            continue
        if ch == VIRAMA:
            i += 1
            continue
        raise TransliterationError(f"no table entry for codepoint U+{ord(ch):04X}")
    return "".join(out)


def transliterate_corpus(triples: Iterable[Triple],
                         table: Optional[TranslitTable] = None) -> list[Triple]:
    """Fill hindi_roman for every triple. Errors carry the triple id."""
    if table is None:
        table = TranslitTable.default()
    out: list[Triple] = []
    for t in triples:
        try:
            roman = transliterate_line(t.hindi_deva.raw, table)
        except TransliterationError as exc:
            raise TransliterationError(f"triple {t.id!r}: {exc}") from exc
        out.append(replace(t, hindi_roman=Sentence.from_raw(roman)))
    return out


class Transliterator(BaseEstimator, TransformerMixin):
    """Stateless line transformer around the rule table.

    `table_path=None` selects the packaged default table.
    """

    def __init__(self, table_path=None):
        self.table_path = table_path

    def fit(self, X=None, y=None):
        self.table_ = (TranslitTable.default() if self.table_path is None
                       else TranslitTable.load(self.table_path))
        return self

    def _table(self) -> TranslitTable:
        if not hasattr(self, "table_"):
            self.fit()
        return self.table_

    def transform(self, lines: Iterable[str]) -> list[str]:
        table = self._table()
        return [transliterate_line(line, table) for line in lines]
