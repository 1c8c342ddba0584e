"""Porter-family suffix-stripping stemmers for English, Spanish and French."""

from __future__ import annotations

from typing import Callable

from . import english, french, spanish

_STEMMERS: dict[str, Callable[[str], str]] = {
    "en": english.stem,
    "es": spanish.stem,
    "fr": french.stem,
}

SUPPORTED_LANGUAGES = tuple(sorted(_STEMMERS))


def stemmer_for(language: str) -> Callable[[str], str]:
    """Return the stem function for an ISO 639-1 language code."""
    try:
        return _STEMMERS[language]
    except KeyError:
        raise ValueError(
            f"no stemmer for language {language!r}; supported: {SUPPORTED_LANGUAGES}"
        ) from None


def stem(word: str, language: str) -> str:
    return stemmer_for(language)(word)
