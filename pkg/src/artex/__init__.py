"""Extractive summarization by pseudo-vector inner products.

Sentences are scored against two document-level averages of the
sentence-term occurrence matrix: the global-topic vector (column means)
and the lexical-weight vector (row means). The package also ships a
reference-free n-gram divergence evaluator, lead/random baselines, a batch
runner, and a normalization timing benchmark.
"""

from .baselines import lead_baseline, random_baseline
from .errors import (
    ArtexError,
    CorpusEmpty,
    EmptyDocument,
    EmptySource,
    EmptyVocabulary,
    MissingDictionary,
)
from .evaluation import (
    Bigram,
    DivergenceReport,
    NgramProfile,
    SkipBigram,
    Unigram,
    divergence,
    evaluation_tokens,
    fresa_report,
    ngram_profile,
)
from .preprocess import (
    Document,
    Lemmatize,
    NormalizationMode,
    Raw,
    RawDocument,
    Sentence,
    Stem,
    StopList,
    UltraStem,
    clean_token,
    document_frequencies,
    filter_sentence,
    load_lemma_dictionary,
    normalize_token,
    preprocess_document,
    split_sentences,
)
from .runner import (
    CorpusSpec,
    ModeSpec,
    RunConfig,
    RunResult,
    TimingRecord,
    benchmark,
    benchmark_summary,
    load_corpus,
    mode_label,
    parse_mode,
    run_corpus,
)
from .scorer import (
    DEFAULT_BUDGET,
    CompressionSpec,
    PseudoVectors,
    ScoreVector,
    SentenceCount,
    Summary,
    WordRatio,
    pseudo_vectors,
    score,
    score_normalized,
    score_table,
    select,
)
from .stemming import stem, stemmer_for
from .vsm import SentenceTermMatrix, Vocabulary, binarize, vectorize

__version__ = "0.1.0"

__all__ = [
    "ArtexError",
    "Bigram",
    "CompressionSpec",
    "CorpusEmpty",
    "CorpusSpec",
    "DEFAULT_BUDGET",
    "DivergenceReport",
    "Document",
    "EmptyDocument",
    "EmptySource",
    "EmptyVocabulary",
    "Lemmatize",
    "MissingDictionary",
    "ModeSpec",
    "NgramProfile",
    "NormalizationMode",
    "PseudoVectors",
    "Raw",
    "RawDocument",
    "RunConfig",
    "RunResult",
    "ScoreVector",
    "Sentence",
    "SentenceCount",
    "SentenceTermMatrix",
    "SkipBigram",
    "Stem",
    "StopList",
    "Summary",
    "TimingRecord",
    "UltraStem",
    "Unigram",
    "Vocabulary",
    "WordRatio",
    "benchmark",
    "benchmark_summary",
    "binarize",
    "clean_token",
    "divergence",
    "document_frequencies",
    "evaluation_tokens",
    "filter_sentence",
    "fresa_report",
    "lead_baseline",
    "load_corpus",
    "load_lemma_dictionary",
    "mode_label",
    "ngram_profile",
    "normalize_token",
    "parse_mode",
    "preprocess_document",
    "pseudo_vectors",
    "random_baseline",
    "run_corpus",
    "score",
    "score_normalized",
    "score_table",
    "select",
    "split_sentences",
    "stem",
    "stemmer_for",
    "vectorize",
    "__version__",
]
