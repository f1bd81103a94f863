"""Incremental word insertion that keeps the automaton compact.

Inserting a word first attaches a fresh chain of states spelling it between
the source and the sink. A sinkward pass then walks from the sink end of
the chain toward the source, at each step merging the state under the
cursor into an existing state with an identical out fan when one exists. A
sourceward pass mirrors this from the source end using in fans. The passes
alternate because every merge rewires fans and can enable merges in the
other direction; insertion finishes when a full round of both passes
changes nothing.

Each merge removes exactly one state and preserves the stored language, so
the automaton never grows beyond the attached chain and shrinks back to the
old size when the word was already present. Both passes keep walking after
the chain is exhausted, because merges can cascade into states that existed
before the insertion; they stop at the source and the sink respectively.

The engine checks its own bookkeeping on every merge and raises
InternalInvariantError when a rule breaks. The checks stay enabled
unconditionally; they are cheap next to the merge candidate scans.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automaton import (
    Automaton,
    AutomatonError,
    EmptyWordError,
    Transition,
)


class InternalInvariantError(AutomatonError):
    """A bookkeeping rule of the insertion engine was violated.

    This always means a defect in the engine itself, never bad input: the
    rules concern the chain of freshly created states and the two merge
    cursors, none of which the caller can touch.
    """


_checks_run = 0


def invariant_checks_run() -> int:
    """How many chain audits have executed since the last reset."""
    return _checks_run


def reset_invariant_counter() -> None:
    global _checks_run
    _checks_run = 0


@dataclass
class MarkedPath:
    """Bookkeeping for the chain created when one word is attached.

    z_states holds the chain states that have not been merged away yet, in
    source to sink order. It only ever shrinks, and only at the ends:
    sinkward merges consume the right end, sourceward merges the left end.

    last_marked is the sinkward cursor, the transition entering the most
    recent sinkward merge point; it starts at the transition entering the
    sink. first_marked is the sourceward cursor, the transition leaving the
    most recent sourceward merge point; it starts at the transition leaving
    the source. When a merge in one direction deletes a state the other
    cursor mentions, the cursor is repaired by substituting the survivor,
    which by fan equality names a transition that exists.
    """

    z_states: deque[int]
    last_marked: Transition
    first_marked: Transition
    merged_sinkward: int = 0
    merged_sourceward: int = 0


@dataclass(frozen=True)
class InsertReport:
    """What one insertion did to the automaton."""

    word: str
    already_present: bool
    states_created: int
    states_merged_sinkward: int
    states_merged_sourceward: int
    rounds: int

    @property
    def net_new_states(self) -> int:
        return (
            self.states_created
            - self.states_merged_sinkward
            - self.states_merged_sourceward
        )


def attach_word(a: Automaton, word: str) -> MarkedPath:
    """Add a fresh chain spelling word from source to sink.

    Creates len(word) - 1 states and up to len(word) transitions; for a one
    symbol word only the source to sink transition is added and both cursors
    degenerate to it, so the merge passes stop immediately.
    """
    if not word:
        raise EmptyWordError("cannot insert the empty word")
    created: list[int] = []
    prev = a.source
    for symbol in word[:-1]:
        n = a.add_state()
        a._link(prev, n, symbol)
        created.append(n)
        prev = n
    a._link(prev, a.sink, word[-1])
    first_target = created[0] if created else a.sink
    mp = MarkedPath(
        z_states=deque(created),
        last_marked=Transition(prev, a.sink, word[-1]),
        first_marked=Transition(a.source, first_target, word[0]),
    )
    _check_chain(a, mp)
    return mp


def sinkward_pass(a: Automaton, mp: MarkedPath) -> bool:
    """Merge equal out fan states walking from the sink toward the source.

    Returns True when at least one merge happened. The cursor state is
    compared against the other states that reach the cursor target under
    the cursor label; with the automaton compact before the insertion, at
    most one of them can match.
    """
    merged = False
    while True:
        cursor = mp.last_marked
        if cursor.from_state == a.source:
            return merged
        if not a.has_transition(*cursor):
            raise InternalInvariantError(f"sinkward cursor names a missing transition {cursor}")
        survivor = _find_down_survivor(a, cursor)
        if survivor is None:
            return merged
        _merge_down(a, mp, cursor.from_state, survivor)
        merged = True


def sourceward_pass(a: Automaton, mp: MarkedPath) -> bool:
    """Merge equal in fan states walking from the source toward the sink."""
    merged = False
    while True:
        cursor = mp.first_marked
        if cursor.to_state == a.sink:
            return merged
        if not a.has_transition(*cursor):
            raise InternalInvariantError(f"sourceward cursor names a missing transition {cursor}")
        survivor = _find_up_survivor(a, cursor)
        if survivor is None:
            return merged
        _merge_up(a, mp, cursor.to_state, survivor)
        merged = True


def insert_word(a: Automaton, word: str) -> InsertReport:
    """Insert word and merge until neither pass finds anything.

    Termination is guaranteed because every merge removes one state. The
    returned report accounts for the chain states created by attachment and
    for every state removed by merging, including states that predate this
    insertion and were swept up by a cascading merge.

    A word already in the language is a no-op: running the merge passes
    anyway can leave a redundant transition behind (the fresh chain may
    merge into a state whose other parents spell different prefixes), so
    idempotence requires skipping the whole attach-and-merge cycle.
    """
    if not word:
        raise EmptyWordError("cannot insert the empty word")
    if a.contains(word):
        return InsertReport(
            word=word,
            already_present=True,
            states_created=0,
            states_merged_sinkward=0,
            states_merged_sourceward=0,
            rounds=0,
        )
    mp = attach_word(a, word)
    created = len(mp.z_states)
    rounds = 0
    while True:
        rounds += 1
        down = sinkward_pass(a, mp)
        up = sourceward_pass(a, mp)
        if not down and not up:
            break
    return InsertReport(
        word=word,
        already_present=False,
        states_created=created,
        states_merged_sinkward=mp.merged_sinkward,
        states_merged_sourceward=mp.merged_sourceward,
        rounds=rounds,
    )


def build_lexicon(words: list[str]) -> tuple[Automaton, list[InsertReport]]:
    """Insert the words in the given order into a fresh automaton.

    An empty word raises EmptyWordError naming its one-based position,
    leaving whatever was built so far untouched by the offending entry.
    """
    a = Automaton()
    reports: list[InsertReport] = []
    for position, word in enumerate(words, start=1):
        if not word:
            raise EmptyWordError(f"empty word at position {position}")
        reports.append(insert_word(a, word))
    return a, reports


# ----------------------------------------------------------------------
# merge candidate scans

def _find_down_survivor(a: Automaton, cursor: Transition) -> int | None:
    """Cheapest existing state with the same out fan as the cursor state.

    Candidates are the other states with a cursor-labeled transition into
    the cursor target, pre-filtered by out degree before the fan sets are
    compared. The source can never match in a well formed automaton (its
    right language would have to absorb a nonempty prefix, forcing an
    infinite language); it is excluded anyway so that damaged input cannot
    pull incoming transitions onto it. Ties break to the smallest id.
    """
    n = cursor.from_state
    candidates = a._in[cursor.to_state].get(cursor.label, ())
    degree = a._out_deg[n]
    fan = a._out[n]
    matches = [
        m
        for m in candidates
        if m != n and m != a.source and a._out_deg[m] == degree and a._out[m] == fan
    ]
    return min(matches) if matches else None


def _find_up_survivor(a: Automaton, cursor: Transition) -> int | None:
    """Mirror of _find_down_survivor for in fans, excluding the sink."""
    n = cursor.to_state
    candidates = a._out[cursor.from_state].get(cursor.label, ())
    degree = a._in_deg[n]
    fan = a._in[n]
    matches = [
        m
        for m in candidates
        if m != n and m != a.sink and a._in_deg[m] == degree and a._in[m] == fan
    ]
    return min(matches) if matches else None


# ----------------------------------------------------------------------
# merge steps

def _merge_down(a: Automaton, mp: MarkedPath, n: int, survivor: int) -> None:
    """Absorb n into survivor, redirecting the in fan of n.

    The out transitions of n die with it; the survivor carries an identical
    out fan, which is what makes the rewrite language preserving. The
    sinkward cursor advances to the smallest redirected transition and the
    sourceward cursor is repaired when it mentioned n.
    """
    if n == a.source or n == a.sink:
        raise InternalInvariantError(f"attempted to merge endpoint state {n}")
    if mp.z_states and n == mp.z_states[-1]:
        if a._in_deg[n] != 1 or a._out_deg[n] != 1:
            raise InternalInvariantError(
                f"chain state {n} has fan degrees in={a._in_deg[n]} out={a._out_deg[n]}, expected 1 and 1"
            )
        mp.z_states.pop()
    elif n in mp.z_states:
        raise InternalInvariantError(f"sinkward merge reached mid-chain state {n}")
    if survivor in mp.z_states:
        raise InternalInvariantError(f"merge survivor {survivor} is an unmerged chain state")
    in_entries = sorted(
        (src, label)
        for label, sources in a._in[n].items()
        for src in sources
    )
    if not in_entries:
        raise InternalInvariantError(f"merged state {n} has no incoming transitions")
    for src, label in in_entries:
        a._unlink(src, n, label)
        a._link(src, survivor, label)
    a._drop_state(n)
    src, label = in_entries[0]
    mp.last_marked = Transition(src, survivor, label)
    mp.first_marked = _substitute(mp.first_marked, n, survivor)
    mp.merged_sinkward += 1
    _check_chain(a, mp)


def _merge_up(a: Automaton, mp: MarkedPath, n: int, survivor: int) -> None:
    """Mirror of _merge_down: absorb n into survivor via the out fan of n."""
    if n == a.source or n == a.sink:
        raise InternalInvariantError(f"attempted to merge endpoint state {n}")
    if mp.z_states and n == mp.z_states[0]:
        if a._in_deg[n] != 1 or a._out_deg[n] != 1:
            raise InternalInvariantError(
                f"chain state {n} has fan degrees in={a._in_deg[n]} out={a._out_deg[n]}, expected 1 and 1"
            )
        mp.z_states.popleft()
    elif n in mp.z_states:
        raise InternalInvariantError(f"sourceward merge reached mid-chain state {n}")
    if survivor in mp.z_states:
        raise InternalInvariantError(f"merge survivor {survivor} is an unmerged chain state")
    out_entries = sorted(
        (dst, label)
        for label, targets in a._out[n].items()
        for dst in targets
    )
    if not out_entries:
        raise InternalInvariantError(f"merged state {n} has no outgoing transitions")
    for dst, label in out_entries:
        a._unlink(n, dst, label)
        a._link(survivor, dst, label)
    a._drop_state(n)
    dst, label = out_entries[0]
    mp.first_marked = Transition(survivor, dst, label)
    mp.last_marked = _substitute(mp.last_marked, n, survivor)
    mp.merged_sourceward += 1
    _check_chain(a, mp)


def _substitute(t: Transition, old: int, new: int) -> Transition:
    if t.from_state != old and t.to_state != old:
        return t
    return Transition(
        new if t.from_state == old else t.from_state,
        new if t.to_state == old else t.to_state,
        t.label,
    )


def _check_chain(a: Automaton, mp: MarkedPath) -> None:
    """Audit the unmerged chain states after every structural step.

    Each one must have exactly one incoming and one outgoing transition,
    and at most one may receive from outside the chain while at most one
    may send outside it. Violations mean a merge rewired something it
    should not have.
    """
    global _checks_run
    _checks_run += 1
    chain = set(mp.z_states)
    external_in = 0
    external_out = 0
    for z in mp.z_states:
        if a._in_deg[z] != 1 or a._out_deg[z] != 1:
            raise InternalInvariantError(
                f"chain state {z} has fan degrees in={a._in_deg[z]} out={a._out_deg[z]}, expected 1 and 1"
            )
        (src,) = (s for sources in a._in[z].values() for s in sources)
        (dst,) = (t for targets in a._out[z].values() for t in targets)
        if src not in chain:
            external_in += 1
        if dst not in chain:
            external_out += 1
    if external_in > 1 or external_out > 1:
        raise InternalInvariantError(
            f"chain has {external_in} external entries and {external_out} external exits, expected at most one each"
        )
