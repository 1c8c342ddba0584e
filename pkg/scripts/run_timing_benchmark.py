#!/usr/bin/env python3
"""Time the summarization pipeline under different token normalizations.

Runs preprocessing plus scoring over a corpus once per normalization mode
and repetition, then prints a per-mode table of median/min/max total
seconds and final vocabulary size. Heavier normalizations buy smaller
vocabularies at higher preprocessing cost; this script measures that
trade-off on any corpus, synthetic or real.

Usage:
    python scripts/make_synthetic_corpus.py out/corpus --dictionary out/lemmas.tsv
    python scripts/run_timing_benchmark.py out/corpus \
        --modes raw,fix:6,stem,lemma --dictionary out/lemmas.tsv \
        --repetitions 5 --out out/bench
"""

from __future__ import annotations

import argparse
from pathlib import Path

from artex.runner import CorpusSpec, benchmark, benchmark_summary, parse_mode


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("corpus", type=Path, help="corpus directory")
    parser.add_argument(
        "--layout", choices=("flat", "clusters"), default="flat", help="corpus layout"
    )
    parser.add_argument("--language", default="en", help="corpus language code")
    parser.add_argument(
        "--modes",
        default="raw,fix:6,stem",
        help="comma-separated normalization modes (raw, lemma, stem, fix:N)",
    )
    parser.add_argument(
        "--dictionary",
        type=Path,
        default=None,
        help="word-to-lemma TSV, required when modes include lemma",
    )
    parser.add_argument("--repetitions", type=int, default=5, help="repetitions per mode")
    parser.add_argument(
        "--out", type=Path, default=None, help="directory for the raw timings.csv"
    )
    args = parser.parse_args()

    modes = [
        parse_mode(label.strip(), dictionary_path=args.dictionary)
        for label in args.modes.split(",")
        if label.strip()
    ]
    spec = CorpusSpec(root=args.corpus, layout=args.layout, language=args.language)
    records = benchmark(spec, modes, repetitions=args.repetitions, out_dir=args.out)

    header = f"{'mode':<10} {'reps':>4} {'median s':>10} {'min s':>10} {'max s':>10} {'vocab':>8}"
    print(header)
    print("-" * len(header))
    for row in benchmark_summary(records):
        print(
            f"{row['normalization']:<10} {row['repetitions']:>4} "
            f"{row['median_seconds']:>10.3f} {row['min_seconds']:>10.3f} "
            f"{row['max_seconds']:>10.3f} {row['vocabulary_size']:>8}"
        )
    if args.out is not None:
        print(f"raw timings written to {Path(args.out) / 'timings.csv'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
