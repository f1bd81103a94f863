"""Shared fixtures: the bundled corpus and the small worked examples."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from compactnfa import build_lexicon

CORPUS_PATH = Path(__file__).resolve().parent.parent / "corpora" / "english_words.txt"

# six words with heavy suffix sharing; adding "flop" afterwards exercises
# both merge passes and sweeps up a pre-existing state
SUFFIX_SHARING_WORDS = ["cut", "chat", "chop", "chip", "flat", "flip"]

# same four words, two insertion orders; the second yields a smaller automaton
ORDER_SENSITIVE_A = ["in", "it", "at", "on"]
ORDER_SENSITIVE_B = ["in", "on", "at", "it"]

# five words sharing suffixes across different prefixes
FIVE_WORDS = ["dance", "darts", "dart", "start", "smart"]


@pytest.fixture(scope="session")
def corpus_words() -> list[str]:
    text = CORPUS_PATH.read_text(encoding="utf-8")
    return [line for line in text.split("\n") if line]


@pytest.fixture()
def suffix_sharing_automaton():
    a, _ = build_lexicon(SUFFIX_SHARING_WORDS)
    return a


def random_corpus(rng: random.Random, max_words: int, alphabet: str, max_len: int = 12) -> list[str]:
    """A reproducible random word list; lengths 1..max_len, count 1..max_words."""
    count = rng.randint(1, max_words)
    words = []
    for _ in range(count):
        length = rng.randint(1, max_len)
        words.append("".join(rng.choice(alphabet) for _ in range(length)))
    return words
