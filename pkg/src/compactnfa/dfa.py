"""Minimal deterministic baseline for size comparisons.

The incremental engine targets a nondeterministic automaton, which can be
smaller than the minimal DFA for the same words. This module provides that
DFA as the yardstick: build a trie, then fold equal subtrees bottom up,
which is minimization for acyclic deterministic automata. A subset
construction bridges the two worlds, and to_single_sink rewires a DFA's
final states into the one-source one-sink shape so that sizes can be
compared convention for convention.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .automaton import Automaton, CycleError, EmptyWordError
from .insertion import build_lexicon


class Dfa:
    """Deterministic automaton with dense integer states and final flags.

    State ids index into the edge table, so they are always 0..n-1. The
    structure is write-once in practice: words are added as trie paths and
    minimization produces a fresh instance.
    """

    def __init__(self) -> None:
        self.start = 0
        self._edges: list[dict[str, int]] = [{}]
        self.finals: set[int] = set()

    @property
    def num_states(self) -> int:
        return len(self._edges)

    @property
    def num_transitions(self) -> int:
        return sum(len(by_label) for by_label in self._edges)

    def labels(self) -> set[str]:
        return {label for by_label in self._edges for label in by_label}

    def transitions(self) -> Iterator[tuple[int, str, int]]:
        """All (from, label, to) edges sorted for deterministic output."""
        triples = [
            (src, label, dst)
            for src, by_label in enumerate(self._edges)
            for label, dst in by_label.items()
        ]
        triples.sort()
        return iter(triples)

    def add_word(self, word: str) -> None:
        """Extend the trie with word and mark its end state final."""
        if not word:
            raise EmptyWordError("cannot add the empty word")
        n = self.start
        for symbol in word:
            nxt = self._edges[n].get(symbol)
            if nxt is None:
                nxt = len(self._edges)
                self._edges.append({})
                self._edges[n][symbol] = nxt
            n = nxt
        self.finals.add(n)

    def contains(self, word: str) -> bool:
        n = self.start
        for symbol in word:
            nxt = self._edges[n].get(symbol)
            if nxt is None:
                return False
            n = nxt
        return n in self.finals

    def language(self) -> set[str]:
        """Every accepted word; requires the automaton to be acyclic."""
        out: set[str] = set()
        stack: list[tuple[int, str]] = [(self.start, "")]
        budget = 0
        while stack:
            n, prefix = stack.pop()
            budget += 1
            if budget > 10_000_000:
                raise CycleError("language enumeration exceeded its budget; input is cyclic or huge")
            if n in self.finals:
                out.add(prefix)
            for label, dst in self._edges[n].items():
                stack.append((dst, prefix + label))
        return out


def build_trie(words: list[str]) -> Dfa:
    """One trie path per word; rejects empty words."""
    d = Dfa()
    for word in words:
        d.add_word(word)
    return d


def minimize(d: Dfa) -> Dfa:
    """Fold equal subtrees of an acyclic DFA into one state each.

    Works bottom up over a depth-first postorder: a state's identity is its
    final flag plus its label-to-canonical-target map, and two states with
    the same identity collapse. For acyclic input this yields the unique
    minimal DFA of the language, restricted to states reachable from the
    start. Output ids are assigned in postorder, so the result is
    deterministic; raises CycleError on cyclic input.
    """
    WHITE, GREY, BLACK = 0, 1, 2
    color = {d.start: WHITE}
    postorder: list[int] = []
    stack: list[tuple[int, bool]] = [(d.start, False)]
    while stack:
        n, done = stack.pop()
        if done:
            color[n] = BLACK
            postorder.append(n)
            continue
        if color.get(n, WHITE) == BLACK:
            continue
        if color.get(n) == GREY:
            raise CycleError("minimization requires an acyclic automaton")
        color[n] = GREY
        stack.append((n, True))
        for label in sorted(d._edges[n], reverse=True):
            child = d._edges[n][label]
            state = color.get(child, WHITE)
            if state == GREY:
                raise CycleError("minimization requires an acyclic automaton")
            if state == WHITE:
                stack.append((child, False))

    out = Dfa()
    out._edges = []
    canon: dict[int, int] = {}
    table: dict[tuple[bool, frozenset], int] = {}
    for n in postorder:
        mapped = {label: canon[t] for label, t in d._edges[n].items()}
        sig = (n in d.finals, frozenset(mapped.items()))
        known = table.get(sig)
        if known is not None:
            canon[n] = known
            continue
        nid = len(out._edges)
        out._edges.append(mapped)
        if n in d.finals:
            out.finals.add(nid)
        table[sig] = nid
        canon[n] = nid
    out.start = canon[d.start]
    return out


def build_minimal_dfa(words: list[str]) -> Dfa:
    """The minimal DFA of the given words."""
    return minimize(build_trie(words))


def determinize(a: Automaton) -> Dfa:
    """Subset construction over the source-reachable part of an automaton.

    A subset is final when it contains the sink, which matches the path
    reading of the stored language. On acyclic input the result is acyclic,
    so it can be fed straight into minimize.
    """
    d = Dfa()
    start_key = frozenset({a.source})
    ids: dict[frozenset[int], int] = {start_key: 0}
    if a.sink in start_key:
        d.finals.add(0)
    queue: deque[frozenset[int]] = deque([start_key])
    while queue:
        subset = queue.popleft()
        sid = ids[subset]
        labels = sorted({label for n in subset for label in a._out[n]})
        for label in labels:
            target: set[int] = set()
            for n in subset:
                target |= a._out[n].get(label, set())
            key = frozenset(target)
            tid = ids.get(key)
            if tid is None:
                tid = len(d._edges)
                d._edges.append({})
                ids[key] = tid
                if a.sink in key:
                    d.finals.add(tid)
                queue.append(key)
            d._edges[sid][label] = tid
    return d


def to_single_sink(d: Dfa) -> tuple[Automaton, str]:
    """Rewire a DFA into the one-source one-sink shape.

    Adds a synthetic sink and one transition from every final state to it,
    labeled with an end marker, the smallest codepoint the DFA does not
    use. The result stores each accepted word with the marker appended, at
    a cost of exactly one extra state and one extra transition per final
    state, which is the honest way to compare sizes across the two
    conventions. The input must be acyclic with no transitions into its
    start state, which holds for every DFA this module builds.

    Returns the automaton and the marker character.
    """
    used = d.labels()
    marker = next(chr(cp) for cp in range(0x110000) if chr(cp) not in used)
    sink = d.num_states
    states = list(range(d.num_states + 1))
    transitions = [(src, dst, label) for src, label, dst in d.transitions()]
    transitions.extend((final, sink, marker) for final in sorted(d.finals))
    return Automaton._raw(d.start, sink, states, transitions), marker


@dataclass(frozen=True)
class SizeComparison:
    """State and transition counts for the same words under both models.

    By default the DFA columns count the minimal DFA as is, with its final
    flags (so the empty word list gives one DFA state against the NFA's
    obligatory two). Pass single_sink_dfa to compare_sizes to count the
    end-marker rewrite instead, which prices the DFA in the NFA's own
    one-source one-sink currency.
    """

    word_count: int
    nfa_states: int
    nfa_transitions: int
    dfa_states: int
    dfa_transitions: int

    @property
    def state_savings(self) -> int:
        return self.dfa_states - self.nfa_states

    @property
    def transition_savings(self) -> int:
        return self.dfa_transitions - self.nfa_transitions


def compare_sizes(words: list[str], single_sink_dfa: bool = False) -> SizeComparison:
    """Build both automata for words, in the given order, and tally sizes.

    The DFA counts never depend on the word order; the NFA counts can.
    """
    nfa, _ = build_lexicon(words)
    d = build_minimal_dfa(words)
    if single_sink_dfa:
        single, _ = to_single_sink(d)
        dfa_states, dfa_transitions = single.num_states, single.num_transitions
    else:
        dfa_states, dfa_transitions = d.num_states, d.num_transitions
    return SizeComparison(
        word_count=len(set(words)),
        nfa_states=nfa.num_states,
        nfa_transitions=nfa.num_transitions,
        dfa_states=dfa_states,
        dfa_transitions=dfa_transitions,
    )
