"""Plain-text serialization of automata, format version NFAv1.

The layout is line oriented and fully deterministic, so saving a loaded
automaton reproduces the file byte for byte:

    NFAv1
    source 0
    sink 1
    states 3
    0
    1
    2
    transitions 2
    0 2 U+0063
    2 1 U+0061

State ids are listed in ascending order. Transition lines are sorted by
(from, to, codepoint) and spell the label in U+XXXX notation, which keeps
files readable for labels outside ASCII and unambiguous for whitespace
labels. The parser is strict: unknown headers, bad counts, unsorted or
duplicate entries and malformed codepoints are all rejected.

Loading performs only syntactic checks. Semantic damage such as cycles or
unreachable states passes through on purpose, so the verification commands
can be pointed at corrupted files.
"""

from __future__ import annotations

import re

from .automaton import Automaton, AutomatonError

MAGIC = "NFAv1"

_LABEL_RE = re.compile(r"U\+([0-9A-Fa-f]{4,6})\Z")


class FormatError(AutomatonError):
    """Malformed NFAv1 text; the message names the offending line."""


def dumps(a: Automaton) -> str:
    states = a.states()
    triples = sorted(
        (t.from_state, t.to_state, ord(t.label)) for t in a.transitions()
    )
    lines = [
        MAGIC,
        f"source {a.source}",
        f"sink {a.sink}",
        f"states {len(states)}",
    ]
    lines.extend(str(n) for n in states)
    lines.append(f"transitions {len(triples)}")
    lines.extend(f"{src} {dst} U+{cp:04X}" for src, dst, cp in triples)
    return "\n".join(lines) + "\n"


def save(a: Automaton, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(a))


def loads(text: str) -> Automaton:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    def fail(index: int, message: str) -> FormatError:
        return FormatError(f"line {index + 1}: {message}")

    def line(index: int) -> str:
        if index >= len(lines):
            raise FormatError(f"line {index + 1}: unexpected end of file")
        return lines[index]

    def keyed_int(index: int, key: str) -> int:
        parts = line(index).split(" ")
        if len(parts) != 2 or parts[0] != key:
            raise fail(index, f"expected '{key} <n>', got {line(index)!r}")
        try:
            value = int(parts[1])
        except ValueError:
            raise fail(index, f"{key} is not an integer") from None
        if value < 0 or parts[1] != str(value):
            raise fail(index, f"{key} must be a canonical non-negative integer")
        return value

    if line(0) != MAGIC:
        raise fail(0, f"expected header {MAGIC!r}, got {line(0)!r}")
    source = keyed_int(1, "source")
    sink = keyed_int(2, "sink")
    if source == sink:
        raise fail(2, "source and sink must be distinct states")
    n_states = keyed_int(3, "states")
    if n_states < 2:
        raise fail(3, "state count must be at least 2")

    states: list[int] = []
    for i in range(n_states):
        index = 4 + i
        raw = line(index)
        try:
            n = int(raw)
        except ValueError:
            raise fail(index, f"state id is not an integer: {raw!r}") from None
        if n < 0 or raw != str(n):
            raise fail(index, "state id must be a canonical non-negative integer")
        if states and n <= states[-1]:
            raise fail(index, "state ids must be strictly ascending")
        states.append(n)
    state_set = set(states)
    if source not in state_set:
        raise fail(1, f"source {source} is not in the state list")
    if sink not in state_set:
        raise fail(2, f"sink {sink} is not in the state list")

    header_index = 4 + n_states
    n_transitions = keyed_int(header_index, "transitions")
    triples: list[tuple[int, int, str]] = []
    previous: tuple[int, int, int] | None = None
    for i in range(n_transitions):
        index = header_index + 1 + i
        parts = line(index).split(" ")
        if len(parts) != 3:
            raise fail(index, f"expected '<from> <to> U+XXXX', got {line(index)!r}")
        try:
            src, dst = int(parts[0]), int(parts[1])
        except ValueError:
            raise fail(index, "transition endpoints must be integers") from None
        match = _LABEL_RE.match(parts[2])
        if match is None:
            raise fail(index, f"bad label notation {parts[2]!r}")
        cp = int(match.group(1), 16)
        if cp > 0x10FFFF:
            raise fail(index, f"codepoint U+{cp:X} is outside the Unicode range")
        if src not in state_set or dst not in state_set:
            raise fail(index, f"transition references unknown state {src if src not in state_set else dst}")
        key = (src, dst, cp)
        if previous is not None and key <= previous:
            raise fail(index, "transitions must be strictly sorted by (from, to, codepoint)")
        previous = key
        triples.append((src, dst, chr(cp)))

    tail = header_index + 1 + n_transitions
    if tail != len(lines):
        raise FormatError(f"line {tail + 1}: trailing content after transition list")

    return Automaton._raw(source, sink, states, triples)


def load(path: str) -> Automaton:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        text = fh.read()
    if "\r" in text:
        raise FormatError("file contains carriage returns; NFAv1 uses LF line endings")
    return loads(text)
