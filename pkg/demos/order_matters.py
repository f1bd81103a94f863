"""Insert the same four words in two orders and compare the results.

The merge passes are greedy, so the automaton depends on insertion order:
both orders store exactly {in, it, at, on} and both pass the compactness
checkers, yet one order ends with five states and the other with four.
Compact means no further pairwise merge is possible; it does not mean no
smaller automaton exists, and this is the smallest example of the gap.
"""

from __future__ import annotations

from compactnfa import Automaton, build_lexicon, check_compact_by_similarity

ORDER_A = ["in", "it", "at", "on"]
ORDER_B = ["in", "on", "at", "it"]


def show(a: Automaton) -> None:
    print(f"    {a.num_states} states, {a.num_transitions} transitions")
    for t in a.transitions():
        print(f"      {t.from_state} -{t.label}-> {t.to_state}")


def main() -> None:
    for order in (ORDER_A, ORDER_B):
        a, _ = build_lexicon(order)
        print(f"order {order}:")
        show(a)
        print(f"    language: {' '.join(sorted(a.language()))}")
        print(f"    compact: {check_compact_by_similarity(a).compact}")
        print()

    first, _ = build_lexicon(ORDER_A)
    second, _ = build_lexicon(ORDER_B)
    assert first.language() == second.language()
    print(
        f"same language, {first.num_states} states against"
        f" {second.num_states}: order matters, and no order is wrong,"
        f" just bigger"
    )


if __name__ == "__main__":
    main()
