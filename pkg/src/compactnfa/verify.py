"""Compactness checking along two independent routes.

A pair of distinct states is down-similar when their out fans are equal and
up-similar when their in fans are equal. It is down-equivalent when the
label sequences reaching the sink from both states coincide, and
up-equivalent when the sequences arriving from the source do. Similarity
implies the matching equivalence, and an automaton that stores each word as
a source to sink path is compact exactly when no equivalent pair of states
exists.

The similarity checker is the fast route: it hashes fan sets and runs in
roughly linear time, and finding no similar pair already proves
compactness for automata produced by the insertion engine. The equivalence
checker is the slow route: it materializes the full path language at every
state, which can be exponential in the state count, but it tests
compactness by definition and therefore cross-checks the fast route. Both
return the same report shape with a witness pair on failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import Automaton

DOWN_SIMILAR = "down-similar"
UP_SIMILAR = "up-similar"
DOWN_EQUIVALENT = "down-equivalent"
UP_EQUIVALENT = "up-equivalent"


@dataclass(frozen=True)
class Witness:
    """A pair of distinct states proving the automaton is not compact."""

    kind: str
    first: int
    second: int

    def __str__(self) -> str:
        return f"states {self.first} and {self.second} are {self.kind}"


@dataclass(frozen=True)
class CompactnessReport:
    compact: bool
    witness: Witness | None
    method: str


def down_similar(a: Automaton, first: int, second: int) -> bool:
    """True when the two distinct states have equal out fans."""
    _require_pair(first, second)
    return a.fan_out(first) == a.fan_out(second)


def up_similar(a: Automaton, first: int, second: int) -> bool:
    """True when the two distinct states have equal in fans."""
    _require_pair(first, second)
    return a.fan_in(first) == a.fan_in(second)


def down_equivalent(a: Automaton, first: int, second: int) -> bool:
    """True when the same label sequences lead from both states to the sink."""
    _require_pair(first, second)
    return a.right_language(first) == a.right_language(second)


def up_equivalent(a: Automaton, first: int, second: int) -> bool:
    """True when the same label sequences lead from the source to both states."""
    _require_pair(first, second)
    return a.left_language(first) == a.left_language(second)


def right_languages(a: Automaton) -> dict[int, frozenset[str]]:
    """Right language of every state, computed in one sweep.

    States that cannot reach the sink get the empty set.
    """
    order = a._topo_order()
    out: dict[int, frozenset[str]] = {}
    for n in reversed(order):
        if n == a.sink:
            out[n] = frozenset({""})
            continue
        acc: set[str] = set()
        for label, targets in a._out[n].items():
            for t in targets:
                for tail in out[t]:
                    acc.add(label + tail)
        out[n] = frozenset(acc)
    return out


def left_languages(a: Automaton) -> dict[int, frozenset[str]]:
    """Left language of every state; unreachable states get the empty set."""
    order = a._topo_order()
    out: dict[int, frozenset[str]] = {}
    for n in order:
        if n == a.source:
            out[n] = frozenset({""})
            continue
        acc: set[str] = set()
        for label, sources in a._in[n].items():
            for m in sources:
                for head in out[m]:
                    acc.add(head + label)
        out[n] = frozenset(acc)
    return out


def check_compact_by_similarity(a: Automaton) -> CompactnessReport:
    """Fast compactness check through fan set collisions.

    Runs a full down-similarity sweep in ascending state order, then the
    up-similarity sweep, and reports the first collision, so a down-similar
    witness always wins and ties break toward small state ids. Only
    candidate pairs that share an adjacent (state, label) can be similar,
    which is exactly the pairs whose equal fans are non-empty; states with
    an empty fan in a direction (the sink downward, the source upward) have
    no candidates there and are skipped. No collision means no similar
    pair exists, which for automata built by the insertion engine settles
    compactness.
    """
    by_out: dict[frozenset, int] = {}
    for n in a.states():
        out_sig = a.fan_out(n)
        if not out_sig:
            continue
        if out_sig in by_out:
            return CompactnessReport(
                False, Witness(DOWN_SIMILAR, by_out[out_sig], n), "similarity"
            )
        by_out[out_sig] = n
    by_in: dict[frozenset, int] = {}
    for n in a.states():
        in_sig = a.fan_in(n)
        if not in_sig:
            continue
        if in_sig in by_in:
            return CompactnessReport(
                False, Witness(UP_SIMILAR, by_in[in_sig], n), "similarity"
            )
        by_in[in_sig] = n
    return CompactnessReport(True, None, "similarity")


def check_compact_by_equivalence(a: Automaton) -> CompactnessReport:
    """Slow compactness check straight from the definition.

    Materializes every state's path languages, so cost grows with the
    stored language and can blow up on large automata; a few thousand
    states over a natural lexicon is the practical ceiling. The sweep
    order matches the similarity checker (full down sweep, then up), so on
    an automaton whose only redundant pairs are similar pairs both
    checkers name the same witness pair.
    """
    rights = right_languages(a)
    lefts = left_languages(a)
    by_right: dict[frozenset, int] = {}
    for n in a.states():
        right = rights[n]
        if right in by_right:
            return CompactnessReport(
                False, Witness(DOWN_EQUIVALENT, by_right[right], n), "equivalence"
            )
        by_right[right] = n
    by_left: dict[frozenset, int] = {}
    for n in a.states():
        left = lefts[n]
        if left in by_left:
            return CompactnessReport(
                False, Witness(UP_EQUIVALENT, by_left[left], n), "equivalence"
            )
        by_left[left] = n
    return CompactnessReport(True, None, "equivalence")


def equivalence_propagates(a: Automaton, first: int, second: int, direction: str = "down") -> bool:
    """Whether an equivalent pair stays equivalent one step along the paths.

    For a down-equivalent pair this holds when the pair is already
    down-similar, or when both states carry the same out labels and, for
    every shared label, every two distinct targets are again
    down-equivalent; the up direction mirrors this through the in fans.
    The property is what lets a merge pass settle for comparing fans
    instead of whole languages, and it is checkable on its own, which is
    why it is exposed. It is not a theorem for arbitrary pairs of states in
    arbitrary automata, so callers assert it only where it is claimed: for
    pairs in which at least one side has a single-entry fan.

    Raises ValueError when the pair is not equivalent in the requested
    direction.
    """
    _require_pair(first, second)
    if direction == "down":
        if not down_equivalent(a, first, second):
            raise ValueError(f"states {first} and {second} are not down-equivalent")
        if down_similar(a, first, second):
            return True
        fans = (a._out[first], a._out[second])
        equivalent = down_equivalent
    elif direction == "up":
        if not up_equivalent(a, first, second):
            raise ValueError(f"states {first} and {second} are not up-equivalent")
        if up_similar(a, first, second):
            return True
        fans = (a._in[first], a._in[second])
        equivalent = up_equivalent
    else:
        raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")
    one, other = fans
    if set(one) != set(other):
        return False
    for label in one:
        for t1 in one[label]:
            for t2 in other[label]:
                if t1 != t2 and not equivalent(a, t1, t2):
                    return False
    return True


def _require_pair(first: int, second: int) -> None:
    if first == second:
        raise ValueError(f"state pair must be two distinct states, got {first} twice")
