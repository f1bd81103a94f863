"""Reading word files and fixing insertion order.

Input files hold one word per line, UTF-8 encoded. Blank lines are skipped
so that trailing newlines and spacing never matter; interior whitespace is
preserved verbatim because labels may be any character. Insertion order
changes the automaton the engine produces (never the language, only the
size), so the order policy is explicit and reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

ORDERS = ("given", "sorted", "shuffled")


@dataclass(frozen=True)
class WordList:
    words: tuple[str, ...]
    source_path: str = ""

    def __len__(self) -> int:
        return len(self.words)

    def distinct(self) -> int:
        return len(set(self.words))


def read_word_file(path: str) -> WordList:
    """Load words from path; strips line endings, keeps everything else."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        text = fh.read()
    words = tuple(
        line for line in text.replace("\r\n", "\n").replace("\r", "\n").split("\n") if line
    )
    return WordList(words=words, source_path=str(path))


def apply_order(wl: WordList, order: str = "given", seed: int = 0) -> WordList:
    """Reorder a word list by policy.

    "given" keeps file order, "sorted" sorts by codepoint, and "shuffled"
    permutes with a seeded generator so runs are reproducible.
    """
    if order == "given":
        return wl
    if order == "sorted":
        return WordList(words=tuple(sorted(wl.words)), source_path=wl.source_path)
    if order == "shuffled":
        shuffled = list(wl.words)
        random.Random(seed).shuffle(shuffled)
        return WordList(words=tuple(shuffled), source_path=wl.source_path)
    raise ValueError(f"order must be one of {ORDERS}, got {order!r}")
