"""Reference systems for evaluator sanity checks: lead and random selection.

Both produce the same Summary type as the scorer so they can be evaluated
through the same reporting pipeline.
"""

from __future__ import annotations

import random
from typing import Sequence

from .preprocess import Sentence
from .scorer import CompressionSpec, Summary, assemble, prefix_selection


def lead_baseline(sentences: Sequence[Sentence], budget: CompressionSpec) -> Summary:
    """Select the leading sentences until the budget is met."""
    order = list(range(len(sentences)))
    selected = prefix_selection(order, sentences, budget)
    return assemble(selected, sentences, budget)


def random_baseline(
    sentences: Sequence[Sentence],
    budget: CompressionSpec,
    seed: int,
) -> Summary:
    """Select uniformly random sentences until the budget is met.

    The random order is the full permutation drawn by
    ``random.Random(seed).sample`` (CPython's Mersenne Twister with its
    partial Fisher-Yates sampling), truncated to the budget; this pins the
    exact selection for a given seed so results replicate across machines.
    """
    p = len(sentences)
    order = random.Random(seed).sample(range(p), p)
    selected = prefix_selection(order, sentences, budget)
    return assemble(selected, sentences, budget)
