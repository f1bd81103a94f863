#!/usr/bin/env python3
"""Regenerate corpora/english_words.txt from locally installed documentation.

The bundled corpus is the committed output of this script: every distinct
lowercase alphabetic word (3-20 chars, containing a vowel, no triple letter
runs) harvested from the pydoc text of importable top-level modules, in a
fixed shuffled order. The yield depends on what is installed, so the file is
committed rather than rebuilt at install time; rerun this only to refresh it
deliberately.
"""

import contextlib
import io
import pkgutil
import pydoc
import random
import re
import warnings
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "corpora" / "english_words.txt"
SHUFFLE_SEED = 894721

SKIP_PREFIXES = ("test", "antigravity", "this", "idlelib", "tkinter", "turtle", "lib2to3")
SKIP_HEAVY = {
    "torch", "tensorflow", "jax", "transformers", "sentence_transformers",
    "cv2", "matplotlib", "streamlit", "marimo", "IPython",
}

WORD = re.compile(r"[a-z]+")
TRIPLE = re.compile(r"(.)\1\1")
VOWELS = set("aeiouy")


def harvest() -> set[str]:
    warnings.filterwarnings("ignore")
    words: set[str] = set()
    for info in sorted(pkgutil.iter_modules(), key=lambda m: m.name):
        name = info.name
        if name.startswith(SKIP_PREFIXES) or name.startswith("_") or name in SKIP_HEAVY:
            continue
        try:
            with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
                doc = pydoc.render_doc(__import__(name))
        except BaseException:
            continue
        words.update(WORD.findall(doc.lower()))
    return words


def keep(word: str) -> bool:
    return 3 <= len(word) <= 20 and bool(set(word) & VOWELS) and not TRIPLE.search(word)


def main() -> None:
    clean = sorted(w for w in harvest() if keep(w))
    random.Random(SHUFFLE_SEED).shuffle(clean)
    OUT.write_text("\n".join(clean) + "\n", encoding="utf-8")
    print(f"wrote {len(clean)} words to {OUT}")


if __name__ == "__main__":
    main()
