"""Sparse sentence-term occurrence matrix over normalized token streams.

Rows are sentences, columns are vocabulary terms in first-occurrence order,
entries are exact integer occurrence counts. The matrix is stored row-major
as one column→count mapping per sentence because most entries are zero or
one and scoring iterates rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import EmptyVocabulary
from .preprocess import Sentence


@dataclass(frozen=True)
class Vocabulary:
    """Bijection between term types and column indices.

    Column order is first-occurrence order over the sentence stream, which
    makes vocabularies and matrices reproducible byte-for-byte across runs.
    """

    terms: tuple[str, ...]
    index: Mapping[str, int]

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index

    def __getitem__(self, term: str) -> int:
        return self.index[term]

    @classmethod
    def from_terms(cls, terms: Iterable[str]) -> "Vocabulary":
        """Build a vocabulary from terms, keeping first-occurrence order."""
        index: dict[str, int] = {}
        for term in terms:
            if term not in index:
                index[term] = len(index)
        return cls(terms=tuple(index), index=index)


@dataclass(frozen=True)
class SentenceTermMatrix:
    """P x N occurrence-count matrix; absent entries mean zero.

    ``rows[i]`` maps column index j to the count of term j in sentence i.
    Stored counts are positive integers; fully-filtered sentences keep an
    empty row so that row indices line up with sentence indices.
    """

    P: int
    N: int
    rows: tuple[Mapping[int, int], ...]

    def count(self, i: int, j: int) -> int:
        return self.rows[i].get(j, 0)

    def nonzero_entries(self) -> int:
        return sum(len(row) for row in self.rows)

    def total(self) -> int:
        """Sum of all entries, i.e. the total retained token count."""
        return sum(sum(row.values()) for row in self.rows)

    def row_sum(self, i: int) -> int:
        return sum(self.rows[i].values())

    def column_sums(self) -> list[int]:
        sums = [0] * self.N
        for row in self.rows:
            for j, count in row.items():
                sums[j] += count
        return sums

    @classmethod
    def from_dense(cls, counts: Sequence[Sequence[int]]) -> "SentenceTermMatrix":
        """Build a matrix from dense nested lists; zeros are not stored."""
        n = len(counts[0]) if counts else 0
        rows = []
        for dense_row in counts:
            if len(dense_row) != n:
                raise ValueError("ragged count matrix")
            rows.append({j: int(c) for j, c in enumerate(dense_row) if c})
        return cls(P=len(counts), N=n, rows=tuple(rows))

    def to_coordinate_text(self) -> str:
        """Dump as coordinate-list text, one ``i j count`` line per entry."""
        lines = []
        for i, row in enumerate(self.rows):
            for j in sorted(row):
                lines.append(f"{i} {j} {row[j]}")
        return "\n".join(lines)


def vectorize(sentences: Sequence[Sentence]) -> tuple[Vocabulary, SentenceTermMatrix]:
    """Count term occurrences per sentence over a shared vocabulary.

    Raises EmptyVocabulary when no sentence retains any token.
    """
    vocabulary = Vocabulary.from_terms(
        token for sentence in sentences for token in sentence.tokens
    )
    if not vocabulary.terms:
        raise EmptyVocabulary("no sentence retained any token")
    rows = []
    for sentence in sentences:
        row: dict[int, int] = {}
        for token in sentence.tokens:
            j = vocabulary.index[token]
            row[j] = row.get(j, 0) + 1
        rows.append(row)
    matrix = SentenceTermMatrix(P=len(sentences), N=len(vocabulary), rows=tuple(rows))
    return vocabulary, matrix


def binarize(matrix: SentenceTermMatrix) -> SentenceTermMatrix:
    """Clamp every positive entry to 1; dimensions and sparsity unchanged."""
    rows = tuple({j: 1 for j in row} for row in matrix.rows)
    return SentenceTermMatrix(P=matrix.P, N=matrix.N, rows=rows)
