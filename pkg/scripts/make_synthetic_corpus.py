#!/usr/bin/env python3
"""Generate a synthetic benchmark corpus and its lemma dictionary.

The corpus is a flat directory of pseudo-word documents with planted
topical structure (see artex.synthetic). It is fully determined by the
seed, so two runs with the same arguments produce byte-identical trees.
The dictionary maps every inflected pool form to its stem and pads the
rest with inert entries, which makes dictionary load time realistic for
the normalization benchmark.

Usage:
    python scripts/make_synthetic_corpus.py out/corpus
    python scripts/make_synthetic_corpus.py out/corpus --documents 10 \
        --words 500 --dictionary out/lemmas.tsv
"""

from __future__ import annotations

import argparse
from pathlib import Path

from artex.synthetic import generate_corpus, generate_lemma_dictionary


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("root", type=Path, help="output directory for the documents")
    parser.add_argument("--documents", type=int, default=100, help="number of documents")
    parser.add_argument("--words", type=int, default=2000, help="approximate words per document")
    parser.add_argument("--seed", type=int, default=0, help="corpus generator seed")
    parser.add_argument(
        "--dictionary",
        type=Path,
        default=None,
        help="also write a word-to-lemma TSV at this path",
    )
    parser.add_argument(
        "--dictionary-entries",
        type=int,
        default=1_000_000,
        help="total dictionary lines including padding",
    )
    args = parser.parse_args()

    paths = generate_corpus(
        args.root,
        documents=args.documents,
        words_per_document=args.words,
        seed=args.seed,
    )
    total_words = sum(len(path.read_text(encoding="utf-8").split()) for path in paths)
    print(f"wrote {len(paths)} documents ({total_words} words) under {args.root}")

    if args.dictionary is not None:
        generate_lemma_dictionary(
            args.dictionary, entries=args.dictionary_entries, seed=args.seed
        )
        print(f"wrote {args.dictionary_entries} dictionary entries to {args.dictionary}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
