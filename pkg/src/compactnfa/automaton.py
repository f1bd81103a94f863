"""Acyclic nondeterministic finite automaton with one source and one sink.

States are opaque integer ids. Transitions are (from, to, label) triples with
set semantics: adding a triple twice is a no-op. Every word stored in the
automaton is the label sequence of some path from the source to the sink, so
the structure has no final-state flags and no epsilon moves.

Transitions are indexed in both directions, keyed by label, so fan-in and
fan-out queries cost time proportional to the degree of the state.
"""

from __future__ import annotations

import heapq
from typing import Iterator, NamedTuple


class AutomatonError(Exception):
    """Base for all errors raised by this package."""


class UnknownStateError(AutomatonError):
    """A state id that is not part of the automaton."""


class ProtectedStateError(AutomatonError):
    """Attempt to delete the source or the sink."""


class CycleError(AutomatonError):
    """An operation would create, or has found, a directed cycle."""


class EmptyWordError(AutomatonError):
    """Words must contain at least one symbol."""


class Transition(NamedTuple):
    from_state: int
    to_state: int
    label: str


class FanEntry(NamedTuple):
    state: int
    label: str


class Automaton:
    """Mutable acyclic NFA over single-character labels.

    A fresh automaton holds exactly the source and the sink and stores the
    empty language. State ids grow monotonically and are never reused, even
    after deletion.
    """

    def __init__(self) -> None:
        self.source = 0
        self.sink = 1
        self._next_id = 2
        # state -> label -> set of neighbor states; empty label buckets are
        # pruned eagerly so two fan dicts compare equal iff the fan sets do.
        self._out: dict[int, dict[str, set[int]]] = {0: {}, 1: {}}
        self._in: dict[int, dict[str, set[int]]] = {0: {}, 1: {}}
        self._out_deg: dict[int, int] = {0: 0, 1: 0}
        self._in_deg: dict[int, int] = {0: 0, 1: 0}
        self._n_transitions = 0

    # ------------------------------------------------------------------
    # basic queries

    @property
    def num_states(self) -> int:
        return len(self._out)

    @property
    def num_transitions(self) -> int:
        return self._n_transitions

    def states(self) -> tuple[int, ...]:
        """All state ids in ascending order."""
        return tuple(sorted(self._out))

    def has_state(self, n: int) -> bool:
        return n in self._out

    def has_transition(self, from_state: int, to_state: int, label: str) -> bool:
        targets = self._out.get(from_state, {}).get(label)
        return targets is not None and to_state in targets

    def transitions(self) -> Iterator[Transition]:
        """All transitions, sorted by (from, to, label)."""
        triples = [
            Transition(src, dst, label)
            for src, by_label in self._out.items()
            for label, targets in by_label.items()
            for dst in targets
        ]
        triples.sort()
        return iter(triples)

    def alphabet(self) -> tuple[str, ...]:
        """Sorted labels that occur on at least one transition."""
        labels = {label for by_label in self._out.values() for label in by_label}
        return tuple(sorted(labels))

    def fan_in(self, n: int) -> frozenset[FanEntry]:
        """Incoming (predecessor, label) pairs of n."""
        self._require_state(n)
        return frozenset(
            FanEntry(src, label)
            for label, sources in self._in[n].items()
            for src in sources
        )

    def fan_out(self, n: int) -> frozenset[FanEntry]:
        """Outgoing (successor, label) pairs of n."""
        self._require_state(n)
        return frozenset(
            FanEntry(dst, label)
            for label, targets in self._out[n].items()
            for dst in targets
        )

    def in_degree(self, n: int) -> int:
        self._require_state(n)
        return self._in_deg[n]

    def out_degree(self, n: int) -> int:
        self._require_state(n)
        return self._out_deg[n]

    # ------------------------------------------------------------------
    # mutation

    def add_state(self) -> int:
        """Create a fresh isolated state and return its id."""
        n = self._next_id
        self._next_id += 1
        self._out[n] = {}
        self._in[n] = {}
        self._out_deg[n] = 0
        self._in_deg[n] = 0
        return n

    def add_transition(self, from_state: int, to_state: int, label: str) -> bool:
        """Add a transition; return False when it was already present.

        Raises CycleError when the edge would close a directed cycle,
        including the self-loop case.
        """
        self._require_state(from_state)
        self._require_state(to_state)
        if len(label) != 1:
            raise ValueError(f"label must be a single character, got {label!r}")
        if from_state == to_state:
            raise CycleError(f"self-loop on state {from_state}")
        if self._reaches(to_state, from_state):
            raise CycleError(
                f"transition {from_state}->{to_state} would close a cycle"
            )
        return self._link(from_state, to_state, label)

    def remove_state(self, n: int) -> None:
        """Delete n together with every transition touching it."""
        self._require_state(n)
        if n == self.source or n == self.sink:
            raise ProtectedStateError(f"state {n} is the source or the sink")
        self._drop_state(n)

    # ------------------------------------------------------------------
    # language operations

    def contains(self, word: str) -> bool:
        """Frontier walk; true iff some path from source spells word into sink."""
        if not word:
            raise EmptyWordError("cannot look up the empty word")
        frontier = {self.source}
        for c in word:
            step: set[int] = set()
            for n in frontier:
                step.update(self._out[n].get(c, ()))
            if not step:
                return False
            frontier = step
        return self.sink in frontier

    def right_language(self, n: int) -> frozenset[str]:
        """Label sequences of all paths from n to the sink.

        The sink itself carries the empty sequence, so direct predecessors of
        the sink compare cleanly. Raises CycleError on cyclic input.
        """
        self._require_state(n)
        order = self._topo_order()
        reachable = self._forward_closure(n)
        suffixes: dict[int, frozenset[str]] = {}
        for s in reversed(order):
            if s not in reachable:
                continue
            if s == self.sink:
                suffixes[s] = frozenset({""})
                continue
            acc: set[str] = set()
            for label, targets in self._out[s].items():
                for t in targets:
                    for tail in suffixes[t]:
                        acc.add(label + tail)
            suffixes[s] = frozenset(acc)
        return suffixes[n]

    def left_language(self, n: int) -> frozenset[str]:
        """Label sequences of all paths from the source to n."""
        self._require_state(n)
        order = self._topo_order()
        reachable = self._backward_closure(n)
        prefixes: dict[int, frozenset[str]] = {}
        for s in order:
            if s not in reachable:
                continue
            if s == self.source:
                prefixes[s] = frozenset({""})
                continue
            acc: set[str] = set()
            for label, sources in self._in[s].items():
                for m in sources:
                    for head in prefixes[m]:
                        acc.add(head + label)
            prefixes[s] = frozenset(acc)
        return prefixes[n]

    def language(self) -> set[str]:
        """Every stored word; empty set for the fresh automaton."""
        return set(self.right_language(self.source))

    # ------------------------------------------------------------------
    # structural predicates

    def is_acyclic(self) -> bool:
        try:
            self._topo_order()
        except CycleError:
            return False
        return True

    def is_deterministic(self) -> bool:
        """True iff no state has two out-transitions sharing a label."""
        return all(
            len(targets) <= 1
            for by_label in self._out.values()
            for targets in by_label.values()
        )

    def structure_problems(self) -> list[str]:
        """Well-formedness violations, empty when the automaton is sound.

        Checks the fan rules at the endpoints and that every state lies on
        some source-to-sink path. Acyclicity is reported separately by
        is_acyclic because the reachability walks do not depend on it.
        """
        problems: list[str] = []
        if self._in_deg[self.source]:
            problems.append("source has incoming transitions")
        if self._out_deg[self.sink]:
            problems.append("sink has outgoing transitions")
        if self._n_transitions == 0:
            # the empty language is stored as the bare endpoint pair
            for n in self.states():
                if n != self.source and n != self.sink:
                    problems.append(f"isolated state {n}")
            return problems
        from_source = self._forward_closure(self.source)
        to_sink = self._backward_closure(self.sink)
        for n in self.states():
            if n != self.source and n not in from_source:
                problems.append(f"state {n} unreachable from source")
            if n != self.sink and n not in to_sink:
                problems.append(f"state {n} cannot reach sink")
        return problems

    def __repr__(self) -> str:
        return (
            f"<Automaton states={self.num_states} "
            f"transitions={self.num_transitions}>"
        )

    # ------------------------------------------------------------------
    # internal plumbing; no cycle guards, used by the insertion engine,
    # the file loader and test harnesses

    @classmethod
    def _raw(
        cls,
        source: int,
        sink: int,
        states: Iterator[int] | list[int],
        transitions: list[tuple[int, int, str]],
    ) -> "Automaton":
        """Assemble an automaton verbatim, without structural guards."""
        a = cls.__new__(cls)
        a.source = source
        a.sink = sink
        a._out = {}
        a._in = {}
        a._out_deg = {}
        a._in_deg = {}
        a._n_transitions = 0
        for n in states:
            a._out[n] = {}
            a._in[n] = {}
            a._out_deg[n] = 0
            a._in_deg[n] = 0
        for n in (source, sink):
            if n not in a._out:
                raise UnknownStateError(f"endpoint state {n} not in state list")
        a._next_id = max(a._out) + 1
        for src, dst, label in transitions:
            if src not in a._out or dst not in a._out:
                raise UnknownStateError(f"transition {(src, dst, label)} references unknown state")
            a._link(src, dst, label)
        return a

    def _require_state(self, n: int) -> None:
        if n not in self._out:
            raise UnknownStateError(f"unknown state {n}")

    def _link(self, src: int, dst: int, label: str) -> bool:
        targets = self._out[src].setdefault(label, set())
        if dst in targets:
            return False
        targets.add(dst)
        self._in[dst].setdefault(label, set()).add(src)
        self._out_deg[src] += 1
        self._in_deg[dst] += 1
        self._n_transitions += 1
        return True

    def _unlink(self, src: int, dst: int, label: str) -> None:
        targets = self._out[src][label]
        targets.remove(dst)
        if not targets:
            del self._out[src][label]
        sources = self._in[dst][label]
        sources.remove(src)
        if not sources:
            del self._in[dst][label]
        self._out_deg[src] -= 1
        self._in_deg[dst] -= 1
        self._n_transitions -= 1

    def _drop_state(self, n: int) -> None:
        for label, targets in list(self._out[n].items()):
            for dst in list(targets):
                self._unlink(n, dst, label)
        for label, sources in list(self._in[n].items()):
            for src in list(sources):
                self._unlink(src, n, label)
        del self._out[n]
        del self._in[n]
        del self._out_deg[n]
        del self._in_deg[n]

    def _reaches(self, start: int, goal: int) -> bool:
        """True iff goal is start or a successor of start."""
        if start == goal:
            return True
        seen = {start}
        stack = [start]
        while stack:
            n = stack.pop()
            for targets in self._out[n].values():
                for t in targets:
                    if t == goal:
                        return True
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
        return False

    def _forward_closure(self, start: int) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            n = stack.pop()
            for targets in self._out[n].values():
                for t in targets:
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
        return seen

    def _backward_closure(self, start: int) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            n = stack.pop()
            for sources in self._in[n].values():
                for s in sources:
                    if s not in seen:
                        seen.add(s)
                        stack.append(s)
        return seen

    def _topo_order(self) -> list[int]:
        """States in a deterministic topological order; CycleError if cyclic."""
        indeg = dict(self._in_deg)
        ready = [n for n in self._out if indeg[n] == 0]
        heapq.heapify(ready)
        order: list[int] = []
        while ready:
            n = heapq.heappop(ready)
            order.append(n)
            for targets in self._out[n].values():
                for t in targets:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        heapq.heappush(ready, t)
        if len(order) != len(self._out):
            raise CycleError("automaton contains a directed cycle")
        return order
