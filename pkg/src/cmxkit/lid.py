"""Token-level language identification and matrix-language determination.

Decision ladder per token: Devanagari script forces hindi; mentions,
hashtags, URLs, and tokens without any letter are "other" and never vote;
a hit in exactly one wordlist decides; everything else falls back to a
character-trigram log-odds model trained from the shipped wordlists.

The matrix language of a sentence is the one with strictly more
hindi/english-labeled tokens, ties going to hindi.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Optional, Sequence

from sklearn.base import BaseEstimator

from .corpus import Sentence
from .errors import DataError
from .translit import DEVANAGARI_END, DEVANAGARI_START

HINDI = "hindi"
ENGLISH = "english"
OTHER = "other"

_NGRAM_ORDER = 3
_BOUNDARY = "\x00"

_EN_WORDS_RESOURCE = "english_words.txt"
_HI_WORDS_RESOURCE = "hindi_roman_words.txt"


@dataclass(frozen=True)
class TokenLang:
    label: str
    confidence: float


def has_devanagari(token: str) -> bool:
    return any(DEVANAGARI_START <= ord(c) <= DEVANAGARI_END for c in token)


def is_other_token(token: str) -> bool:
    """Non-linguistic surface forms: mentions, hashtags, URLs, and tokens
    with no alphabetic character (punctuation, digits, emoticons)."""
    if token.startswith("@") or token.startswith("#"):
        return True
    lowered = token.lower()
    if lowered.startswith(("http://", "https://", "www.")):
        return True
    return not any(c.isalpha() for c in token)


def _char_ngrams(form: str, order: int = _NGRAM_ORDER) -> list[str]:
    padded = _BOUNDARY + form + _BOUNDARY
    if len(padded) < order:
        return [padded]
    return [padded[i:i + order] for i in range(len(padded) - order + 1)]


@dataclass(frozen=True)
class Lexicons:
    """Wordlists plus trigram log-odds (english minus hindi) trained from them."""

    english_wordlist: frozenset[str]
    hindi_roman_wordlist: frozenset[str]
    char_ngram_weights: dict[str, float]

    @classmethod
    def train(cls, english_words: Iterable[str], hindi_words: Iterable[str]) -> "Lexicons":
        en = frozenset(w.strip().lower() for w in english_words if w.strip())
        hi = frozenset(w.strip().lower() for w in hindi_words if w.strip())
        en_counts: Counter[str] = Counter()
        hi_counts: Counter[str] = Counter()
        for w in sorted(en):
            en_counts.update(_char_ngrams(w))
        for w in sorted(hi):
            hi_counts.update(_char_ngrams(w))
        vocab = set(en_counts) | set(hi_counts)
        en_total = sum(en_counts.values()) + len(vocab)
        hi_total = sum(hi_counts.values()) + len(vocab)
        weights = {
            g: math.log((en_counts[g] + 1) / en_total) - math.log((hi_counts[g] + 1) / hi_total)
            for g in vocab
        }
        return cls(en, hi, weights)

    @classmethod
    def load(cls, english_path=None, hindi_path=None) -> "Lexicons":
        """Load wordlist files (one form per line); None selects packaged data."""
        if english_path is None:
            en_text = resources.files("cmxkit.data").joinpath(_EN_WORDS_RESOURCE).read_text("utf-8")
        else:
            with open(english_path, encoding="utf-8") as fh:
                en_text = fh.read()
        if hindi_path is None:
            hi_text = resources.files("cmxkit.data").joinpath(_HI_WORDS_RESOURCE).read_text("utf-8")
        else:
            with open(hindi_path, encoding="utf-8") as fh:
                hi_text = fh.read()
        return cls.train(en_text.splitlines(), hi_text.splitlines())

    def ngram_log_odds(self, form: str) -> float:
        return sum(self.char_ngram_weights.get(g, 0.0) for g in _char_ngrams(form))


def classify_token(token: str, lex: Lexicons) -> TokenLang:
    if not token:
        raise ValueError("cannot classify an empty token")
    if has_devanagari(token):
        return TokenLang(HINDI, 1.0)
    if is_other_token(token):
        return TokenLang(OTHER, 1.0)
    form = token.lower()
    in_en = form in lex.english_wordlist
    in_hi = form in lex.hindi_roman_wordlist
    if in_en and not in_hi:
        return TokenLang(ENGLISH, 1.0)
    if in_hi and not in_en:
        return TokenLang(HINDI, 1.0)
    score = lex.ngram_log_odds(form)
    confidence = 1.0 / (1.0 + math.exp(-abs(score)))
    if score > 0:
        return TokenLang(ENGLISH, confidence)
    return TokenLang(HINDI, confidence)


def matrix_language(sentence: Sentence, lex: Lexicons) -> str:
    """Language with strictly more labeled tokens; "other" never votes; tie -> hindi."""
    if len(sentence) == 0:
        raise DataError("cannot determine matrix language of an empty sentence")
    counts = Counter(classify_token(tok, lex).label for tok in sentence.tokens)
    return ENGLISH if counts[ENGLISH] > counts[HINDI] else HINDI


@dataclass(frozen=True)
class MatrixRatioReport:
    hindi_pct: float
    english_pct: float
    n: int

    def to_json(self) -> str:
        return json.dumps({
            "hindi_pct": round(self.hindi_pct, 1),
            "english_pct": round(self.english_pct, 1),
            "n": self.n,
        })

    def to_table(self) -> str:
        rows = [("matrix language", "pct"),
                ("hindi", f"{self.hindi_pct:.1f}"),
                ("english", f"{self.english_pct:.1f}")]
        width = max(len(r[0]) for r in rows)
        lines = [f"{name:<{width}}  {pct:>6}" for name, pct in rows]
        lines.append(f"{'n':<{width}}  {self.n:>6}")
        return "\n".join(lines)


def matrix_ratio_report(corpus: Sequence[Sentence], lex: Lexicons) -> MatrixRatioReport:
    if not corpus:
        raise DataError("matrix ratio report needs a non-empty corpus")
    n = len(corpus)
    n_hindi = sum(1 for s in corpus if matrix_language(s, lex) == HINDI)
    return MatrixRatioReport(
        hindi_pct=100.0 * n_hindi / n,
        english_pct=100.0 * (n - n_hindi) / n,
        n=n,
    )


class TokenLanguageClassifier(BaseEstimator):
    """Wordlist plus trigram classifier over {hindi, english, other}.

    With no wordlist paths, `fit` trains from the packaged lexicon data.
    """

    def __init__(self, english_path=None, hindi_path=None):
        self.english_path = english_path
        self.hindi_path = hindi_path

    def fit(self, X=None, y=None):
        self.lexicons_ = Lexicons.load(self.english_path, self.hindi_path)
        return self

    def _lex(self) -> Lexicons:
        if not hasattr(self, "lexicons_"):
            self.fit()
        return self.lexicons_

    def predict(self, tokens: Iterable[str]) -> list[str]:
        lex = self._lex()
        return [classify_token(t, lex).label for t in tokens]

    def predict_token(self, token: str) -> TokenLang:
        return classify_token(token, self._lex())
