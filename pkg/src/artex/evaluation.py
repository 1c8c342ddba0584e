"""Reference-free summary evaluation by n-gram divergence from the source.

A summary is compared against its own source document, not against human
references: both texts are reduced to stop-word-free stem streams, n-gram
profiles are built for unigrams, bigrams, and skip-bigrams (gap up to 4,
within a sentence), and each profile pair is scored with a smoothed
absolute log-difference divergence. Divergences are normalized against the
empty summary so that 0 means "summary shares nothing with the source" and
values near 1 mean "summary matches the source distribution".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import EmptyDocument, EmptySource
from .preprocess import RawDocument, StopList, clean_token, split_sentences
from .stemming import stemmer_for


@dataclass(frozen=True)
class Unigram:
    """Single tokens."""


@dataclass(frozen=True)
class Bigram:
    """Consecutive token pairs within a segment."""


@dataclass(frozen=True)
class SkipBigram:
    """Token pairs (t_i, t_{i+g}) with 1 <= g <= max_gap within a segment."""

    max_gap: int = 4

    def __post_init__(self) -> None:
        if self.max_gap < 1:
            raise ValueError(f"max gap must be >= 1, got {self.max_gap}")


NgramOrder = Unigram | Bigram | SkipBigram


@dataclass(frozen=True)
class NgramProfile:
    """Occurrence counts of n-gram units plus the total number of units."""

    order: NgramOrder
    counts: Mapping[tuple[str, ...], int]
    total: int


@dataclass(frozen=True)
class DivergenceReport:
    """Raw divergences and normalized [0,1] scores per n-gram metric."""

    d1: float
    d2: float
    d_su4: float
    f1: float
    f2: float
    f_su4: float
    f_avg: float

    def as_dict(self) -> dict[str, float]:
        return {
            "d1": self.d1,
            "d2": self.d2,
            "d_su4": self.d_su4,
            "f1": self.f1,
            "f2": self.f2,
            "f_su4": self.f_su4,
            "f_avg": self.f_avg,
        }

    FIELDS = ("d1", "d2", "d_su4", "f1", "f2", "f_su4", "f_avg")


def _segments(tokens: Sequence) -> list[list[str]]:
    """Interpret input as one flat token list or a list of per-sentence lists."""
    if all(isinstance(item, str) for item in tokens):
        return [list(tokens)]
    return [list(segment) for segment in tokens]


def ngram_profile(tokens: Sequence, order: NgramOrder) -> NgramProfile:
    """Count n-gram units over token segments.

    ``tokens`` is either a flat sequence of strings (treated as a single
    segment) or a sequence of per-sentence token sequences; bigrams and
    skip-bigrams never cross a segment boundary. Fewer tokens than the unit
    needs yields an empty profile.
    """
    counts: dict[tuple[str, ...], int] = {}
    total = 0
    for segment in _segments(tokens):
        if isinstance(order, Unigram):
            units = [(token,) for token in segment]
        elif isinstance(order, Bigram):
            units = [(segment[i], segment[i + 1]) for i in range(len(segment) - 1)]
        else:
            units = [
                (segment[i], segment[i + g])
                for i in range(len(segment))
                for g in range(1, order.max_gap + 1)
                if i + g < len(segment)
            ]
        for unit in units:
            counts[unit] = counts.get(unit, 0) + 1
        total += len(units)
    return NgramProfile(order=order, counts=counts, total=total)


def divergence(source: NgramProfile, summary: NgramProfile) -> float:
    """Smoothed absolute log-difference divergence, summed over source types.

    Each source type t contributes |log(1 + C_t/|T|) - log(1 + c_t/|S|)|
    where C_t, c_t are its counts in source and summary and |T|, |S| the
    profile totals. Types present only in the summary contribute nothing;
    an empty summary contributes c_t/|S| := 0 for every type.
    """
    if source.order != summary.order:
        raise ValueError(
            f"profile orders differ: {source.order!r} vs {summary.order!r}"
        )
    if source.total == 0:
        raise EmptySource("source profile has no n-gram units")
    summary_total = summary.total
    result = 0.0
    for unit, count in source.counts.items():
        source_term = math.log1p(count / source.total)
        summary_count = summary.counts.get(unit, 0)
        summary_term = math.log1p(summary_count / summary_total) if summary_total else 0.0
        result += abs(source_term - summary_term)
    return result


def _empty_profile(order: NgramOrder) -> NgramProfile:
    return NgramProfile(order=order, counts={}, total=0)


def _clamp01(value: float) -> float:
    return min(1.0, max(0.0, value))


def fresa_report(source_tokens: Sequence, summary_tokens: Sequence) -> DivergenceReport:
    """Evaluate a summary token stream against its source token stream.

    Computes the divergence for unigrams, bigrams, and skip-bigrams, then
    normalizes each as f = 1 - d/d_empty where d_empty is the divergence of
    the empty summary: an empty summary scores exactly 0 and a summary
    reproducing the source distribution approaches 1. Values are clamped to
    [0,1] and averaged into f_avg.
    """
    orders: list[NgramOrder] = [Unigram(), Bigram(), SkipBigram(4)]
    raw: list[float] = []
    normalized: list[float] = []
    for order in orders:
        source = ngram_profile(source_tokens, order)
        summary = ngram_profile(summary_tokens, order)
        d = divergence(source, summary)
        d_empty = divergence(source, _empty_profile(order))
        raw.append(d)
        normalized.append(_clamp01(1.0 - d / d_empty) if d_empty > 0.0 else 1.0)
    f1, f2, f_su4 = normalized
    return DivergenceReport(
        d1=raw[0],
        d2=raw[1],
        d_su4=raw[2],
        f1=f1,
        f2=f2,
        f_su4=f_su4,
        f_avg=(f1 + f2 + f_su4) / 3.0,
    )


def evaluation_tokens(
    text: str,
    language: str,
    stoplist: StopList | None = None,
) -> list[list[str]]:
    """Reduce text to per-sentence streams of stop-word-free stems.

    Evaluation always stems, whatever normalization the summarizer used, so
    that systems are compared on a common footing; document-frequency
    filtering is not applied here. Text with no sentences (for example an
    empty summary file) yields an empty list.
    """
    if stoplist is None:
        stoplist = StopList.bundled(language)
    try:
        sentences = split_sentences(RawDocument(id="evaluation", text=text, language=language))
    except EmptyDocument:
        return []
    stemmer = stemmer_for(language)
    cache: dict[str, str] = {}
    segments = []
    for sentence in sentences:
        stems = []
        for token in sentence.tokens:
            cleaned = clean_token(token)
            if not cleaned or cleaned in stoplist:
                continue
            if cleaned not in cache:
                cache[cleaned] = stemmer(cleaned)
            stems.append(cache[cleaned])
        segments.append(stems)
    return segments
