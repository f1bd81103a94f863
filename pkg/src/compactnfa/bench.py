"""Growth measurements: sizes and insertion time as the lexicon fills up.

A growth run inserts words one at a time and samples the automaton at a
fixed stride. Timing covers only the insert calls, accumulated in integer
nanoseconds and reported in microseconds, so file parsing and the optional
per-sample checks never pollute the numbers. Samples go to CSV for
plotting, and a log-log regression summarizes how size and cumulative time
scale with the word count.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .automaton import Automaton
from .dfa import build_minimal_dfa, to_single_sink
from .insertion import insert_word
from .verify import check_compact_by_similarity

CSV_HEADER = "words,nfa_states,nfa_transitions,dfa_states,dfa_transitions,cumulative_us"


class VerificationFailure(Exception):
    """A per-sample audit failed during a growth run."""


@dataclass(frozen=True)
class GrowthRecord:
    """One sample: sizes after words_inserted insertions.

    The DFA columns are None when the run skips the baseline. They count
    the minimal DFA with its final flags by default; the single-sink
    rewrite can be requested to make both column pairs use the same
    convention.
    """

    words_inserted: int
    nfa_states: int
    nfa_transitions: int
    dfa_states: int | None
    dfa_transitions: int | None
    cumulative_insert_micros: int


def growth_run(
    words: list[str],
    step: int = 1,
    compare_dfa: bool = False,
    verify_each: bool = False,
    dfa_single_sink: bool = False,
) -> tuple[Automaton, list[GrowthRecord]]:
    """Insert words in order, sampling every step insertions and at the end.

    With compare_dfa the minimal DFA is rebuilt from scratch at every
    sample, which is quadratic overall; keep the stride coarse on large
    inputs. With verify_each each sample also audits structure, acyclicity
    and compactness, raising VerificationFailure on the first problem.
    """
    if step < 1:
        raise ValueError(f"step must be at least 1, got {step}")
    a = Automaton()
    records: list[GrowthRecord] = []
    elapsed_ns = 0
    for count, word in enumerate(words, start=1):
        begin = time.perf_counter_ns()
        insert_word(a, word)
        elapsed_ns += time.perf_counter_ns() - begin
        if count % step == 0 or count == len(words):
            dfa_states = dfa_transitions = None
            if compare_dfa:
                d = build_minimal_dfa(words[:count])
                if dfa_single_sink:
                    single, _ = to_single_sink(d)
                    dfa_states = single.num_states
                    dfa_transitions = single.num_transitions
                else:
                    dfa_states = d.num_states
                    dfa_transitions = d.num_transitions
            if verify_each:
                _audit(a, count)
            records.append(
                GrowthRecord(
                    words_inserted=count,
                    nfa_states=a.num_states,
                    nfa_transitions=a.num_transitions,
                    dfa_states=dfa_states,
                    dfa_transitions=dfa_transitions,
                    cumulative_insert_micros=elapsed_ns // 1000,
                )
            )
    return a, records


def _audit(a: Automaton, count: int) -> None:
    problems = a.structure_problems()
    if problems:
        raise VerificationFailure(f"after {count} words: {problems[0]}")
    if not a.is_acyclic():
        raise VerificationFailure(f"after {count} words: automaton has a cycle")
    report = check_compact_by_similarity(a)
    if not report.compact:
        raise VerificationFailure(f"after {count} words: {report.witness}")


def records_to_csv(records: list[GrowthRecord]) -> str:
    lines = [CSV_HEADER]
    for r in records:
        dfa_states = "" if r.dfa_states is None else str(r.dfa_states)
        dfa_transitions = "" if r.dfa_transitions is None else str(r.dfa_transitions)
        lines.append(
            f"{r.words_inserted},{r.nfa_states},{r.nfa_transitions},"
            f"{dfa_states},{dfa_transitions},{r.cumulative_insert_micros}"
        )
    return "\n".join(lines) + "\n"


def write_csv(records: list[GrowthRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(records_to_csv(records))


def loglog_slope(xs: list[float], ys: list[float]) -> float:
    """Least squares slope of log(y) against log(x).

    Points with a nonpositive coordinate are dropped (the first samples of
    a timing series can be zero microseconds); with fewer than two distinct
    surviving points the slope is undefined and nan is returned.
    """
    pairs = [(x, y) for x, y in zip(xs, ys) if x > 0 and y > 0]
    if len({x for x, _ in pairs}) < 2:
        return math.nan
    log_x = np.log([x for x, _ in pairs])
    log_y = np.log([y for _, y in pairs])
    slope, _ = np.polyfit(log_x, log_y, 1)
    return float(slope)


def growth_slopes(records: list[GrowthRecord]) -> dict[str, float]:
    """Log-log slopes of states, transitions and cumulative time vs words."""
    xs = [float(r.words_inserted) for r in records]
    return {
        "states": loglog_slope(xs, [float(r.nfa_states) for r in records]),
        "transitions": loglog_slope(xs, [float(r.nfa_transitions) for r in records]),
        "time": loglog_slope(xs, [float(r.cumulative_insert_micros) for r in records]),
    }
