"""Sentence splitting, token filtering, and word normalization.

The pipeline turns a raw document into an ordered list of sentences, each
keeping its original surface form next to a filtered, normalized token
stream. Splitting is rule-based on purpose: the target behaviour is the
simple, fast preprocessing front end of a vector-space summarizer, not a
statistical sentence-boundary model.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Mapping

from .errors import EmptyDocument, MissingDictionary
from .stemming import SUPPORTED_LANGUAGES, stemmer_for

_TERMINATORS = ".!?"


@dataclass(frozen=True)
class RawDocument:
    """An input document: identifier, full text, and language code."""

    id: str
    text: str
    language: str

    def __post_init__(self) -> None:
        if self.language not in SUPPORTED_LANGUAGES:
            raise ValueError(f"unsupported language: {self.language!r}")


@dataclass(frozen=True)
class Sentence:
    """One sentence: position, verbatim surface text, and its token stream.

    ``tokens`` holds whitespace tokens right after splitting and the
    filtered, normalized stream after the full pipeline has run. A sentence
    whose tokens were all filtered away stays in the document with an empty
    stream so that indices and surfaces remain addressable.
    """

    index: int
    surface: str
    tokens: tuple[str, ...] = ()


@dataclass(frozen=True)
class Document:
    """A preprocessed document: ordered sentences with normalized tokens."""

    id: str
    language: str
    sentences: tuple[Sentence, ...]

    def __len__(self) -> int:
        return len(self.sentences)


class NormalizationMode:
    """Marker base class for the word normalization strategies."""

    __slots__ = ()


@dataclass(frozen=True)
class Raw(NormalizationMode):
    """Identity normalization: tokens are kept as they are."""


@dataclass(frozen=True)
class Lemmatize(NormalizationMode):
    """Dictionary lookup; a token missing from the dictionary maps to itself."""

    dictionary: Mapping[str, str] | None = None


@dataclass(frozen=True)
class Stem(NormalizationMode):
    """Suffix-stripping with the bundled stemmer for the document language."""


@dataclass(frozen=True)
class UltraStem(NormalizationMode):
    """Truncation to the first ``n`` characters (the whole token if shorter)."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"truncation length must be >= 1, got {self.n}")


@dataclass(frozen=True)
class StopList:
    """A per-language set of words removed during filtering."""

    language: str
    words: frozenset[str] = field(default_factory=frozenset)

    def __contains__(self, token: str) -> bool:
        return token in self.words

    @classmethod
    def from_file(cls, path: str | Path, language: str) -> "StopList":
        """Load a stop-list: UTF-8, one word per line, '#' comments ignored."""
        words = set()
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                words.add(line.casefold())
        return cls(language=language, words=frozenset(words))

    @classmethod
    def bundled(cls, language: str) -> "StopList":
        """Load the small default stop-list shipped for ``language``."""
        if language not in SUPPORTED_LANGUAGES:
            raise ValueError(f"no bundled stop-list for language: {language!r}")
        ref = resources.files("artex").joinpath(f"data/stopwords/{language}.txt")
        words = set()
        for line in ref.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                words.add(line.casefold())
        return cls(language=language, words=frozenset(words))


def load_lemma_dictionary(path: str | Path) -> dict[str, str]:
    """Load a word-to-lemma dictionary: UTF-8, ``word<TAB>lemma`` per line.

    Entries are lowercased; on duplicate words the last entry wins. Lines
    without a tab separator are ignored.
    """
    mapping: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            word, sep, lemma = line.rstrip("\n").partition("\t")
            if not sep:
                continue
            word = word.strip().casefold()
            lemma = lemma.strip().casefold()
            if word and lemma:
                mapping[word] = lemma
    return mapping


def split_sentences(doc: RawDocument) -> list[Sentence]:
    """Chunk ``doc.text`` at '.', '!' and '?' into indexed sentences.

    The terminator stays attached to its sentence; a trailing run without a
    terminator becomes the final sentence. A period flanked by digits on
    both sides (as in 3.14) does not split. Pieces without any alphanumeric
    character (splitting debris such as a bare '.') are dropped, and the
    survivors are indexed consecutively from 0.

    Raises EmptyDocument when no sentence with at least one alphabetic
    character remains.
    """
    text = doc.text
    pieces: list[str] = []
    start = 0
    for pos, char in enumerate(text):
        if char not in _TERMINATORS:
            continue
        if (
            char == "."
            and 0 < pos < len(text) - 1
            and text[pos - 1].isdigit()
            and text[pos + 1].isdigit()
        ):
            continue
        pieces.append(text[start : pos + 1])
        start = pos + 1
    if start < len(text):
        pieces.append(text[start:])

    sentences = []
    for piece in pieces:
        surface = piece.strip()
        if not any(c.isalnum() for c in surface):
            continue
        sentences.append(
            Sentence(index=len(sentences), surface=surface, tokens=tuple(surface.split()))
        )
    if not any(c.isalpha() for s in sentences for c in s.surface):
        raise EmptyDocument(f"document {doc.id!r} contains no alphabetic sentence")
    return sentences


def clean_token(token: str) -> str:
    """Casefold and strip leading/trailing non-alphanumeric characters.

    Inner punctuation (apostrophes, hyphens, decimal points) is preserved;
    a token with no alphanumeric character cleans to the empty string.
    """
    token = token.casefold()
    begin = 0
    end = len(token)
    while begin < end and not token[begin].isalnum():
        begin += 1
    while end > begin and not token[end - 1].isalnum():
        end -= 1
    return token[begin:end]


def document_frequencies(sentences: list[Sentence]) -> Counter[str]:
    """Count cleaned-token occurrences across all sentences of one document.

    Counts are taken on the full lowercased, punctuation-stripped stream,
    before any stop-list or frequency-based removal.
    """
    counts: Counter[str] = Counter()
    for sentence in sentences:
        for token in sentence.tokens:
            cleaned = clean_token(token)
            if cleaned:
                counts[cleaned] += 1
    return counts


def filter_sentence(
    sentence: Sentence,
    stoplist: StopList,
    doc_frequencies: Mapping[str, int],
) -> Sentence:
    """Lowercase, strip punctuation, drop stop-words and document hapaxes.

    A token survives when it cleans to a non-empty string, is not in the
    stop-list, and its cleaned form occurs at least twice in the document.
    Survivor order is preserved; an all-filtered sentence keeps an empty
    token stream.
    """
    kept = []
    for token in sentence.tokens:
        cleaned = clean_token(token)
        if not cleaned or cleaned in stoplist:
            continue
        if doc_frequencies.get(cleaned, 0) < 2:
            continue
        kept.append(cleaned)
    return Sentence(index=sentence.index, surface=sentence.surface, tokens=tuple(kept))


def normalize_token(token: str, mode: NormalizationMode, language: str = "en") -> str:
    """Map one lowercase token through the chosen normalization strategy."""
    if isinstance(mode, Raw):
        return token
    if isinstance(mode, Lemmatize):
        if mode.dictionary is None:
            raise MissingDictionary("lemmatization requested but no dictionary loaded")
        return mode.dictionary.get(token, token)
    if isinstance(mode, Stem):
        return stemmer_for(language)(token)
    if isinstance(mode, UltraStem):
        return token[: mode.n]
    raise TypeError(f"unknown normalization mode: {mode!r}")


def preprocess_document(
    raw: RawDocument,
    stoplist: StopList | None = None,
    mode: NormalizationMode = Raw(),
) -> Document:
    """Run the full pipeline: split, filter, normalize.

    When ``stoplist`` is None the bundled stop-list for the document
    language is used. Normalization is memoized per token type, so each
    distinct surviving word is stemmed or looked up once per document.
    """
    if stoplist is None:
        stoplist = StopList.bundled(raw.language)
    sentences = split_sentences(raw)
    frequencies = document_frequencies(sentences)
    cache: dict[str, str] = {}
    normalized = []
    for sentence in sentences:
        filtered = filter_sentence(sentence, stoplist, frequencies)
        tokens = []
        for token in filtered.tokens:
            if token not in cache:
                cache[token] = normalize_token(token, mode, raw.language)
            tokens.append(cache[token])
        normalized.append(
            Sentence(index=sentence.index, surface=sentence.surface, tokens=tuple(tokens))
        )
    return Document(id=raw.id, language=raw.language, sentences=tuple(normalized))
