"""Corpus ingestion, batch summarization, evaluation sweeps, and timing.

A corpus is either a directory of flat files (one document each) or a
directory of cluster subdirectories whose files are concatenated in
filename order and summarized as one document. Each document is processed
in isolation: failures are logged and skipped without aborting the batch.
Outputs are deterministic for a fixed corpus, configuration, and seed;
timing fields are the only nondeterministic values and live in their own
file.
"""

from __future__ import annotations

import csv
import hashlib
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from statistics import median
from typing import Sequence

from .baselines import lead_baseline, random_baseline
from .errors import ArtexError, CorpusEmpty, MissingDictionary
from .evaluation import DivergenceReport, evaluation_tokens, fresa_report
from .preprocess import (
    Lemmatize,
    NormalizationMode,
    Raw,
    RawDocument,
    Stem,
    StopList,
    UltraStem,
    load_lemma_dictionary,
    preprocess_document,
)
from .scorer import (
    DEFAULT_BUDGET,
    CompressionSpec,
    Summary,
    pseudo_vectors,
    score,
    select,
)
from .vsm import vectorize

logger = logging.getLogger(__name__)

SYSTEMS = ("artex", "lead", "random")

FLAT = "flat"
CLUSTERS = "clusters"


def mode_label(mode: NormalizationMode) -> str:
    """Short filesystem-safe label: raw, lemma, stem, or fixN."""
    if isinstance(mode, Raw):
        return "raw"
    if isinstance(mode, Lemmatize):
        return "lemma"
    if isinstance(mode, Stem):
        return "stem"
    if isinstance(mode, UltraStem):
        return f"fix{mode.n}"
    raise TypeError(f"unknown normalization mode: {mode!r}")


@dataclass(frozen=True)
class ModeSpec:
    """A loadable description of a normalization mode.

    The benchmark re-acquires per-mode resources (most importantly the
    lemma dictionary) on every repetition so their cost is measured, which
    requires a description that can be loaded again, not an already-loaded
    mode object.
    """

    kind: str
    n: int | None = None
    dictionary_path: str | None = None

    @property
    def label(self) -> str:
        return f"fix{self.n}" if self.kind == "fix" else self.kind

    def load(self) -> NormalizationMode:
        if self.kind == "raw":
            return Raw()
        if self.kind == "stem":
            return Stem()
        if self.kind == "fix":
            return UltraStem(self.n)
        if self.kind == "lemma":
            if self.dictionary_path is None:
                raise MissingDictionary(
                    "lemma normalization requires a dictionary path"
                )
            return Lemmatize(load_lemma_dictionary(self.dictionary_path))
        raise ValueError(f"unknown normalization kind: {self.kind!r}")


def parse_mode(label: str, dictionary_path: str | Path | None = None) -> ModeSpec:
    """Parse a normalization label: raw | lemma | stem | fix:N."""
    label = label.strip().lower()
    if label in ("raw", "stem"):
        return ModeSpec(kind=label)
    if label == "lemma":
        path = str(dictionary_path) if dictionary_path is not None else None
        return ModeSpec(kind="lemma", dictionary_path=path)
    if label.startswith("fix:"):
        try:
            n = int(label.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad truncation length in {label!r}") from None
        if n < 1:
            raise ValueError(f"truncation length must be >= 1, got {n}")
        return ModeSpec(kind="fix", n=n)
    raise ValueError(f"unknown normalization: {label!r} (want raw|lemma|stem|fix:N)")


@dataclass(frozen=True)
class CorpusSpec:
    """Where a corpus lives and how its files map to documents."""

    root: Path
    layout: str = FLAT
    language: str = "en"

    def __post_init__(self) -> None:
        if self.layout not in (FLAT, CLUSTERS):
            raise ValueError(f"unknown layout: {self.layout!r}")


@dataclass(frozen=True)
class RunConfig:
    """Everything a batch run needs besides the corpus itself."""

    normalization: NormalizationMode = Stem()
    budget: CompressionSpec = DEFAULT_BUDGET
    systems: tuple[str, ...] = ("artex",)
    seed: int = 0
    out_dir: Path | None = None
    timing: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        unknown = set(self.systems) - set(SYSTEMS)
        if unknown:
            raise ValueError(f"unknown systems: {sorted(unknown)}")
        if not self.systems:
            raise ValueError("at least one system must be selected")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")


@dataclass(frozen=True)
class TimingRecord:
    """Wall-clock phase timings for one processed unit (monotonic clock).

    The preprocessing phase covers splitting, filtering, normalization, and
    matrix construction, plus per-repetition resource loading in benchmark
    mode; the scoring phase covers pseudo-vector computation, scoring, and
    selection. The total is measured around both phases.
    """

    system: str
    normalization: str
    corpus_id: str
    preprocess_seconds: float
    score_seconds: float
    total_seconds: float
    repetition: int | None = None
    vocabulary_size: int | None = None

    CSV_COLUMNS = (
        "system",
        "normalization",
        "corpus_id",
        "repetition",
        "preprocess_seconds",
        "score_seconds",
        "total_seconds",
        "vocabulary_size",
    )

    def as_row(self) -> list[str]:
        return [
            self.system,
            self.normalization,
            self.corpus_id,
            "" if self.repetition is None else str(self.repetition),
            repr(self.preprocess_seconds),
            repr(self.score_seconds),
            repr(self.total_seconds),
            "" if self.vocabulary_size is None else str(self.vocabulary_size),
        ]


@dataclass(frozen=True)
class RunResult:
    """One summary with its evaluation (and timing, when enabled)."""

    doc_id: str
    system: str
    normalization: str
    summary: Summary
    report: DivergenceReport
    timing: TimingRecord | None = None


def load_corpus(spec: CorpusSpec) -> list[RawDocument]:
    """Read the corpus into documents; unreadable or empty files are skipped."""
    root = Path(spec.root)
    if not root.is_dir():
        raise CorpusEmpty(f"corpus root is not a directory: {root}")
    documents: list[RawDocument] = []
    if spec.layout == FLAT:
        for path in sorted(root.iterdir()):
            if not path.is_file() or path.name.startswith("."):
                continue
            text = _read_text(path)
            if text:
                documents.append(RawDocument(id=path.stem, text=text, language=spec.language))
    else:
        for cluster in sorted(root.iterdir()):
            if not cluster.is_dir() or cluster.name.startswith("."):
                continue
            parts = []
            for path in sorted(cluster.iterdir()):
                if not path.is_file() or path.name.startswith("."):
                    continue
                text = _read_text(path)
                if text:
                    parts.append(text)
            if parts:
                documents.append(
                    RawDocument(id=cluster.name, text="\n".join(parts), language=spec.language)
                )
    if not documents:
        raise CorpusEmpty(f"no usable documents under {root}")
    return documents


def _read_text(path: Path) -> str | None:
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        logger.warning("skipping %s: %s", path, exc)
        return None
    if not text.strip():
        logger.warning("skipping %s: file is empty", path)
        return None
    return text


def document_seed(seed: int, doc_id: str) -> int:
    """Per-document seed for the random baseline, stable across runs."""
    digest = hashlib.sha256(f"{seed}:{doc_id}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def _process_document(
    raw: RawDocument,
    cfg: RunConfig,
    stoplist: StopList,
) -> list[RunResult]:
    """Summarize one document with every configured system and evaluate."""
    label = mode_label(cfg.normalization)
    clock = time.perf_counter

    t0 = clock()
    doc = preprocess_document(raw, stoplist, cfg.normalization)
    _, matrix = vectorize(doc.sentences)
    t1 = clock()
    preprocess_seconds = t1 - t0

    source_segments = evaluation_tokens(raw.text, raw.language, stoplist)
    results = []
    for system in SYSTEMS:
        if system not in cfg.systems:
            continue
        s0 = clock()
        if system == "artex":
            scores = score(matrix, pseudo_vectors(matrix))
            summary = select(scores, doc.sentences, cfg.budget)
        elif system == "lead":
            summary = lead_baseline(doc.sentences, cfg.budget)
        else:
            summary = random_baseline(
                doc.sentences, cfg.budget, document_seed(cfg.seed, raw.id)
            )
        s1 = clock()
        report = fresa_report(
            source_segments, evaluation_tokens(summary.text, raw.language, stoplist)
        )
        timing = None
        if cfg.timing:
            timing = TimingRecord(
                system=system,
                normalization=label,
                corpus_id=raw.id,
                preprocess_seconds=preprocess_seconds,
                score_seconds=s1 - s0,
                total_seconds=preprocess_seconds + (s1 - s0),
            )
        results.append(
            RunResult(
                doc_id=raw.id,
                system=system,
                normalization=label,
                summary=summary,
                report=report,
                timing=timing,
            )
        )
    return results


_WORKER_STATE: tuple[RunConfig, StopList] | None = None


def _worker_init(cfg: RunConfig, stoplist: StopList) -> None:
    global _WORKER_STATE
    _WORKER_STATE = (cfg, stoplist)


def _worker_run(raw: RawDocument) -> tuple[str, list[RunResult], str | None]:
    cfg, stoplist = _WORKER_STATE
    try:
        return raw.id, _process_document(raw, cfg, stoplist), None
    except ArtexError as exc:
        return raw.id, [], f"{type(exc).__name__}: {exc}"


def run_corpus(corpus: CorpusSpec, cfg: RunConfig) -> list[RunResult]:
    """Summarize and evaluate every corpus document; write outputs if asked.

    Documents are independent work units; with ``cfg.workers > 1`` they are
    processed in a process pool, and all file writes happen afterwards in
    deterministic document order either way. A document that fails (for
    example because filtering removed every token) is logged and skipped.
    """
    documents = load_corpus(corpus)
    stoplist = StopList.bundled(corpus.language)
    results: list[RunResult] = []
    if cfg.workers == 1:
        outcomes = []
        for raw in documents:
            try:
                outcomes.append((raw.id, _process_document(raw, cfg, stoplist), None))
            except ArtexError as exc:
                outcomes.append((raw.id, [], f"{type(exc).__name__}: {exc}"))
    else:
        with ProcessPoolExecutor(
            max_workers=cfg.workers,
            initializer=_worker_init,
            initargs=(cfg, stoplist),
        ) as pool:
            outcomes = list(pool.map(_worker_run, documents))
    for doc_id, doc_results, error in outcomes:
        if error is not None:
            logger.warning("skipping document %s: %s", doc_id, error)
        results.extend(doc_results)
    if cfg.out_dir is not None:
        write_outputs(results, Path(cfg.out_dir), timing=cfg.timing)
    return results


def write_outputs(results: Sequence[RunResult], out_dir: Path, timing: bool = False) -> None:
    """Write summary files, report.jsonl, and (optionally) timings.csv."""
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "report.jsonl", "w", encoding="utf-8") as reports:
        for result in results:
            directory = out_dir / result.system / result.normalization
            directory.mkdir(parents=True, exist_ok=True)
            path = directory / f"{result.doc_id}.summary.txt"
            path.write_text(result.summary.text + "\n", encoding="utf-8")
            line = {
                "doc_id": result.doc_id,
                "system": result.system,
                "normalization": result.normalization,
            }
            line.update(result.report.as_dict())
            reports.write(json.dumps(line) + "\n")
    if timing:
        write_timings(
            [r.timing for r in results if r.timing is not None],
            out_dir / "timings.csv",
        )


def write_timings(records: Sequence[TimingRecord], path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(TimingRecord.CSV_COLUMNS)
        for record in records:
            writer.writerow(record.as_row())


def write_reports_csv(results: Sequence[RunResult], path: Path) -> None:
    """CSV export with the same columns as the JSONL report."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(("doc_id", "system", "normalization") + DivergenceReport.FIELDS)
        for result in results:
            report = result.report.as_dict()
            writer.writerow(
                [result.doc_id, result.system, result.normalization]
                + [repr(report[name]) for name in DivergenceReport.FIELDS]
            )


def benchmark(
    corpus: CorpusSpec,
    modes: Sequence[ModeSpec],
    repetitions: int,
    out_dir: Path | None = None,
) -> list[TimingRecord]:
    """Time the full pipeline per normalization mode, repeated for stability.

    Every repetition re-acquires the mode's resources (dictionary load,
    stemmer lookup table) inside the timed preprocessing phase, so modes
    backed by heavy resources are charged their real cost. Documents are
    processed sequentially: benchmark mode forces a single worker so
    measurements are uncontended. Corpus file reading happens once, outside
    the timed region, because it is identical for every mode.
    """
    if repetitions < 3:
        raise ValueError(f"need at least 3 repetitions, got {repetitions}")
    documents = load_corpus(corpus)
    stoplist = StopList.bundled(corpus.language)
    corpus_id = Path(corpus.root).name
    clock = time.perf_counter
    records: list[TimingRecord] = []
    for spec in modes:
        vocabulary_size: int | None = None
        failed: set[str] = set()
        for repetition in range(repetitions):
            t0 = clock()
            mode = spec.load()
            matrices = []
            sizes = []
            for raw in documents:
                if raw.id in failed:
                    continue
                try:
                    doc = preprocess_document(raw, stoplist, mode)
                    vocabulary, matrix = vectorize(doc.sentences)
                except ArtexError as exc:
                    failed.add(raw.id)
                    logger.warning("benchmark skips document %s: %s", raw.id, exc)
                    continue
                matrices.append((matrix, doc))
                sizes.append(len(vocabulary))
            t1 = clock()
            for matrix, doc in matrices:
                scores = score(matrix, pseudo_vectors(matrix))
                select(scores, doc.sentences, DEFAULT_BUDGET)
            t2 = clock()
            if vocabulary_size is None:
                vocabulary_size = sum(sizes)
            records.append(
                TimingRecord(
                    system="artex",
                    normalization=spec.label,
                    corpus_id=corpus_id,
                    preprocess_seconds=t1 - t0,
                    score_seconds=t2 - t1,
                    total_seconds=t2 - t0,
                    repetition=repetition,
                    vocabulary_size=vocabulary_size,
                )
            )
    if out_dir is not None:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        write_timings(records, out_dir / "timings.csv")
    return records


def benchmark_summary(records: Sequence[TimingRecord]) -> list[dict]:
    """Median and spread of total seconds per mode, with vocabulary size."""
    by_mode: dict[str, list[TimingRecord]] = {}
    for record in records:
        by_mode.setdefault(record.normalization, []).append(record)
    summary = []
    for label, group in by_mode.items():
        totals = [record.total_seconds for record in group]
        summary.append(
            {
                "normalization": label,
                "repetitions": len(group),
                "median_seconds": median(totals),
                "min_seconds": min(totals),
                "max_seconds": max(totals),
                "vocabulary_size": group[0].vocabulary_size,
            }
        )
    summary.sort(key=lambda item: item["median_seconds"])
    return summary
