"""Build a small lexicon one word at a time and watch the automaton move.

Six words with heavy suffix sharing go in first; the seventh, "flop",
lands in the middle of existing structure and shows the interesting case:
three fresh states appear, the merge passes then fold four states away,
and the automaton ends one state smaller than before the insertion.
"""

from __future__ import annotations

from compactnfa import (
    Automaton,
    check_compact_by_equivalence,
    check_compact_by_similarity,
    insert_word,
)

WORDS = ["cut", "chat", "chop", "chip", "flat", "flip"]


def show(a: Automaton) -> None:
    print(f"    {a.num_states} states, {a.num_transitions} transitions")
    for t in a.transitions():
        print(f"      {t.from_state} -{t.label}-> {t.to_state}")


def main() -> None:
    a = Automaton()
    print("inserting the base words:")
    for word in WORDS:
        report = insert_word(a, word)
        merged = report.states_merged_sinkward + report.states_merged_sourceward
        print(
            f"  {word!r}: +{report.states_created} states, {merged} merged,"
            f" {report.rounds} round(s) -> {a.num_states} states,"
            f" {a.num_transitions} transitions"
        )

    print("\nthe automaton before 'flop':")
    show(a)

    print("\ninserting 'flop':")
    before = a.num_states
    report = insert_word(a, "flop")
    print(
        f"  created {report.states_created}, merged"
        f" {report.states_merged_sinkward} toward the sink and"
        f" {report.states_merged_sourceward} toward the source in"
        f" {report.rounds} rounds"
    )
    print(f"  state count went {before} -> {a.num_states}: adding a word shrank it")

    print("\nthe automaton after 'flop':")
    show(a)

    print("\nstored language:", " ".join(sorted(a.language())))
    fast = check_compact_by_similarity(a)
    slow = check_compact_by_equivalence(a)
    print(f"compact by fan comparison: {fast.compact}")
    print(f"compact by language comparison: {slow.compact}")


if __name__ == "__main__":
    main()
