"""Grow the automaton over the bundled corpus and race the minimal DFA.

Samples ten points along the build, rebuilding the minimal DFA of the
same prefix at each one. The automaton wins on states at every sample
because merging can exploit nondeterminism the DFA is denied; the DFA
usually wins on transitions, which is the price of the sharing. The last
lines fit a log log slope to the cumulative insertion time as a rough
scaling read.
"""

from __future__ import annotations

import math
import sys
from pathlib import Path

from compactnfa import growth_run, loglog_slope, read_word_file

CORPUS = Path(__file__).resolve().parent.parent / "corpora" / "english_words.txt"


def main() -> None:
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else None
    words = read_word_file(str(CORPUS)).words
    if limit is not None:
        words = words[:limit]
    step = math.ceil(len(words) / 10)
    print(f"growing over {len(words)} words, sampling every {step}:\n")
    print(f"{'words':>8} {'nfa states':>11} {'nfa trans':>10} {'dfa states':>11} {'dfa trans':>10} {'seconds':>8}")
    _, records = growth_run(words, step=step, compare_dfa=True)
    for r in records:
        print(
            f"{r.words_inserted:>8} {r.nfa_states:>11} {r.nfa_transitions:>10}"
            f" {r.dfa_states:>11} {r.dfa_transitions:>10}"
            f" {r.cumulative_insert_micros / 1e6:>8.2f}"
        )
    final = records[-1]
    saved = final.dfa_states - final.nfa_states
    print(
        f"\nfinal: {saved} states saved over the minimal DFA"
        f" ({100 * saved / final.dfa_states:.1f} percent)"
    )
    xs = [float(r.words_inserted) for r in records]
    ys = [float(r.cumulative_insert_micros) for r in records]
    print(f"cumulative insertion time slope (log log): {loglog_slope(xs, ys):.2f}")


if __name__ == "__main__":
    main()
