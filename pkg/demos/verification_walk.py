"""Catch a duplicated state with the checkers, then merge it away by hand.

Insertion normally attaches a fresh chain and immediately runs the merge
passes. This walk stops halfway: it attaches "flop" to a six word lexicon
without merging, asks both compactness checkers what they think, and
prints the witness pair they return. The fan comparison and the full
language comparison point at the same pair. Running the two passes by
hand until neither finds work then restores compactness, which is exactly
the loop insert_word runs for you.
"""

from __future__ import annotations

from compactnfa import (
    Automaton,
    attach_word,
    check_compact_by_equivalence,
    check_compact_by_similarity,
    insert_word,
    sinkward_pass,
    sourceward_pass,
)

WORDS = ["cut", "chat", "chop", "chip", "flat", "flip"]


def verdicts(a: Automaton) -> None:
    fast = check_compact_by_similarity(a)
    slow = check_compact_by_equivalence(a)
    print(f"  fan comparison:      compact={fast.compact}  witness={fast.witness}")
    print(f"  language comparison: compact={slow.compact}  witness={slow.witness}")


def main() -> None:
    a = Automaton()
    for word in WORDS:
        insert_word(a, word)
    print(f"built {len(WORDS)} words: {a.num_states} states")
    verdicts(a)

    print("\nattaching 'flop' as a raw chain, no merging:")
    mp = attach_word(a, "flop")
    print(f"  now {a.num_states} states")
    verdicts(a)

    fast = check_compact_by_similarity(a)
    first, second = fast.witness.first, fast.witness.second
    print("\nthe witness pair, fan by fan:")
    print(f"  fan out of {first}:  {sorted((e.label, e.state) for e in a.fan_out(first))}")
    print(f"  fan out of {second}: {sorted((e.label, e.state) for e in a.fan_out(second))}")

    print("\nrunning the merge passes by hand:")
    round_number = 0
    while True:
        round_number += 1
        sank = sinkward_pass(a, mp)
        rose = sourceward_pass(a, mp)
        print(
            f"  round {round_number}: sinkward merged={sank}"
            f" sourceward merged={rose} -> {a.num_states} states"
        )
        if not sank and not rose:
            break
    verdicts(a)
    print(f"\nstored language: {' '.join(sorted(a.language()))}")


if __name__ == "__main__":
    main()
