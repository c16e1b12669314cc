"""Corpus data model, JSONL loading, cleaning filters, and subtask pair arrangement.

Records travel the pipeline as triples (Devanagari Hindi, romanized Hindi,
English, optional code-mixed rendering). Training data is derived from
triples by arranging two parallel pairs per record, one subtask at a time,
and then filtering on whitespace-token counts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from sklearn.base import BaseEstimator, TransformerMixin

from .errors import CorpusFormatError, DataError

CMX_LANG = "cmx"


@dataclass(frozen=True)
class Sentence:
    """A whitespace-tokenized line. `raw` keeps the original spacing."""

    tokens: tuple[str, ...]
    raw: str

    @classmethod
    def from_raw(cls, raw: str) -> "Sentence":
        return cls(tokens=tuple(raw.split()), raw=raw)

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> "Sentence":
        toks = tuple(tokens)
        return cls(tokens=toks, raw=" ".join(toks))

    @property
    def text(self) -> str:
        return " ".join(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class DomainTag:
    """A named data domain; exactly one domain per run may be the target."""

    name: str
    is_target: bool = False


@dataclass
class Triple:
    """One corpus record: Hindi (both scripts), English, and optional code-mix."""

    id: str
    hindi_deva: Sentence
    english: Sentence
    domain: DomainTag
    hindi_roman: Optional[Sentence] = None
    cmx: Optional[Sentence] = None
    synthetic: bool = False


@dataclass
class ParallelPair:
    """A single (source, target) training pair derived from a Triple."""

    src: Sentence
    tgt: Sentence
    src_lang: str
    tgt_lang: str
    domain: DomainTag
    origin_id: str

    def __post_init__(self) -> None:
        if self.src_lang == self.tgt_lang and self.tgt_lang != CMX_LANG:
            raise DataError(
                f"pair from {self.origin_id!r}: src_lang and tgt_lang are both "
                f"{self.src_lang!r}"
            )


@dataclass(frozen=True)
class CleanDecision:
    keep: bool
    reason: Optional[str] = None


def _sentence_from_json(value, key: str, lineno: int) -> Sentence:
    if not isinstance(value, str):
        raise CorpusFormatError(f"line {lineno}: key {key!r} must be a string")
    return Sentence.from_raw(value)


def load_corpus(path, target_domain: Optional[str] = None) -> list[Triple]:
    """Read a corpus JSONL file into Triples, preserving order and ids.

    Each line is an object with keys id, hi_deva, en, domain, and optional
    hi_roman, cmx, synthetic. `target_domain`, when given, marks matching
    records' domain tags as the run's target.
    """
    triples: list[Triple] = []
    seen_ids: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
            if not isinstance(obj, dict):
                raise CorpusFormatError(f"line {lineno}: record must be an object")
            missing = {"id", "hi_deva", "en", "domain"} - obj.keys()
            if missing:
                raise CorpusFormatError(
                    f"line {lineno}: missing keys {sorted(missing)}"
                )
            rec_id = str(obj["id"])
            if rec_id in seen_ids:
                raise CorpusFormatError(f"line {lineno}: duplicate id {rec_id!r}")
            seen_ids.add(rec_id)
            domain_name = str(obj["domain"])
            triple = Triple(
                id=rec_id,
                hindi_deva=_sentence_from_json(obj["hi_deva"], "hi_deva", lineno),
                english=_sentence_from_json(obj["en"], "en", lineno),
                domain=DomainTag(domain_name, is_target=domain_name == target_domain),
                synthetic=bool(obj.get("synthetic", False)),
            )
            if obj.get("hi_roman") is not None:
                triple.hindi_roman = _sentence_from_json(obj["hi_roman"], "hi_roman", lineno)
            if obj.get("cmx") is not None:
                triple.cmx = _sentence_from_json(obj["cmx"], "cmx", lineno)
            triples.append(triple)
    return triples


def save_corpus(triples: Iterable[Triple], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for t in triples:
            obj = {"id": t.id, "hi_deva": t.hindi_deva.raw, "en": t.english.raw,
                   "domain": t.domain.name}
            if t.hindi_roman is not None:
                obj["hi_roman"] = t.hindi_roman.raw
            if t.cmx is not None:
                obj["cmx"] = t.cmx.raw
            if t.synthetic:
                obj["synthetic"] = True
            fh.write(json.dumps(obj, ensure_ascii=False) + "\n")


def load_pairs(path, target_domain: Optional[str] = None) -> list[ParallelPair]:
    """Read a pair JSONL file (keys src, tgt, src_lang, tgt_lang, domain, origin_id)."""
    pairs: list[ParallelPair] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
            missing = {"src", "tgt", "src_lang", "tgt_lang", "domain", "origin_id"} - obj.keys()
            if missing:
                raise CorpusFormatError(f"line {lineno}: missing keys {sorted(missing)}")
            domain_name = str(obj["domain"])
            pairs.append(ParallelPair(
                src=Sentence.from_raw(str(obj["src"])),
                tgt=Sentence.from_raw(str(obj["tgt"])),
                src_lang=str(obj["src_lang"]),
                tgt_lang=str(obj["tgt_lang"]),
                domain=DomainTag(domain_name, is_target=domain_name == target_domain),
                origin_id=str(obj["origin_id"]),
            ))
    return pairs


def save_pairs(pairs: Iterable[ParallelPair], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for p in pairs:
            fh.write(json.dumps({
                "src": p.src.raw, "tgt": p.tgt.raw,
                "src_lang": p.src_lang, "tgt_lang": p.tgt_lang,
                "domain": p.domain.name, "origin_id": p.origin_id,
            }, ensure_ascii=False) + "\n")


def clean_pair(pair: ParallelPair, min_len: int = 2, max_len: int = 250,
               ratio: float = 1.5, symmetric: bool = False) -> CleanDecision:
    """Keep/drop decision on whitespace token counts.

    Drops pairs with either side shorter than `min_len` or longer than
    `max_len`, or with a target-to-source token ratio strictly above `ratio`.
    `symmetric=True` also applies the ratio check source-to-target. The
    reason names the first violated rule; an empty source is reported as
    too_short before any ratio arithmetic.
    """
    n_src, n_tgt = len(pair.src), len(pair.tgt)
    if n_src < min_len or n_tgt < min_len:
        return CleanDecision(False, "too_short")
    if n_src > max_len or n_tgt > max_len:
        return CleanDecision(False, "too_long")
    if n_tgt / n_src > ratio:
        return CleanDecision(False, "ratio")
    if symmetric and n_src / n_tgt > ratio:
        return CleanDecision(False, "ratio")
    return CleanDecision(True)


class PairCleaner(BaseEstimator, TransformerMixin):
    """Length and ratio filter over parallel pairs, applied record by record.

    Stateless; `transform` keeps input order. `decisions` exposes the
    per-pair keep/drop reasons for reporting.
    """

    def __init__(self, min_len: int = 2, max_len: int = 250, ratio: float = 1.5,
                 symmetric: bool = False):
        self.min_len = min_len
        self.max_len = max_len
        self.ratio = ratio
        self.symmetric = symmetric

    def fit(self, X=None, y=None):
        return self

    def decide(self, pair: ParallelPair) -> CleanDecision:
        return clean_pair(pair, self.min_len, self.max_len, self.ratio, self.symmetric)

    def decisions(self, pairs: Iterable[ParallelPair]) -> list[CleanDecision]:
        return [self.decide(p) for p in pairs]

    def transform(self, pairs: Iterable[ParallelPair]) -> list[ParallelPair]:
        return [p for p in pairs if self.decide(p).keep]


def arrange_pairs(triples: Iterable[Triple], subtask: int) -> list[ParallelPair]:
    """Emit the two training pairs per triple for the given subtask.

    Subtask 1 (monolingual to code-mixed): (hi_deva -> cmx) then (en -> cmx).
    Subtask 2 (code-mixed to monolingual): (hi_roman -> en) then (cmx -> en).
    The two pairs of a triple are adjacent and triple order is preserved.
    """
    if subtask not in (1, 2):
        raise ValueError(f"subtask must be 1 or 2, got {subtask!r}")
    out: list[ParallelPair] = []
    for t in triples:
        if subtask == 1:
            if t.cmx is None:
                raise DataError(f"triple {t.id!r}: cmx required for subtask 1")
            out.append(ParallelPair(t.hindi_deva, t.cmx, "hi_deva", CMX_LANG,
                                    t.domain, t.id))
            out.append(ParallelPair(t.english, t.cmx, "en", CMX_LANG, t.domain, t.id))
        else:
            if t.hindi_roman is None:
                raise DataError(f"triple {t.id!r}: hi_roman required for subtask 2")
            if t.cmx is None:
                raise DataError(f"triple {t.id!r}: cmx required for subtask 2")
            out.append(ParallelPair(t.hindi_roman, t.english, "hi_roman", "en",
                                    t.domain, t.id))
            out.append(ParallelPair(t.cmx, t.english, CMX_LANG, "en", t.domain, t.id))
    return out
