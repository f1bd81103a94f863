"""Command line front end.

One executable, one subcommand per task:

    compactnfa build INPUT OUTPUT [--order ...] [--seed N]
    compactnfa add FILE WORD
    compactnfa query FILE WORD
    compactnfa verify FILE [--words INPUT] [--equivalence-limit N]
    compactnfa enumerate FILE
    compactnfa bench INPUT --csv PATH [--step N] [--compare-dfa] [--verify-each]
    compactnfa export-dot FILE

Exit codes: 0 success (for query, word found), 1 a verification check
failed or the queried word is absent, 2 unreadable or malformed files,
3 usage errors and invalid input such as an empty word.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import fileformat
from .automaton import (
    Automaton,
    CycleError,
    EmptyWordError,
    UnknownStateError,
)
from .bench import VerificationFailure, growth_run, growth_slopes, write_csv
from .fileformat import FormatError
from .insertion import InternalInvariantError, build_lexicon, insert_word
from .verify import check_compact_by_equivalence, check_compact_by_similarity
from .wordlist import ORDERS, apply_order, read_word_file


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit code 2; this front end uses 3."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="compactnfa",
        description="Store word lists as compact acyclic automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build an automaton from a word file")
    p.add_argument("input", help="word file, one word per line, UTF-8")
    p.add_argument("output", help="automaton file to write")
    p.add_argument("--order", choices=ORDERS, default="given", help="insertion order (default: given)")
    p.add_argument("--seed", type=int, default=0, help="seed for --order shuffled (default: 0)")
    p.set_defaults(handler=cmd_build)

    p = sub.add_parser("add", help="insert one word into an automaton file")
    p.add_argument("file", help="automaton file to update in place")
    p.add_argument("word", help="word to insert")
    p.set_defaults(handler=cmd_add)

    p = sub.add_parser("query", help="test whether a word is stored")
    p.add_argument("file", help="automaton file")
    p.add_argument("word", help="word to look up")
    p.set_defaults(handler=cmd_query)

    p = sub.add_parser("verify", help="run structural and compactness checks")
    p.add_argument("file", help="automaton file")
    p.add_argument("--words", help="word file to compare the stored language against")
    p.add_argument(
        "--equivalence-limit",
        type=int,
        default=2000,
        metavar="N",
        help="skip the language equivalence check above N states (default: 2000)",
    )
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("enumerate", help="print every stored word, sorted")
    p.add_argument("file", help="automaton file")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("bench", help="measure growth while inserting a word file")
    p.add_argument("input", help="word file, one word per line, UTF-8")
    p.add_argument("--csv", required=True, help="where to write the samples")
    p.add_argument("--step", type=int, default=100, help="sample every N insertions (default: 100)")
    p.add_argument("--compare-dfa", action="store_true", help="also size the minimal DFA at each sample")
    p.add_argument(
        "--dfa-single-sink",
        action="store_true",
        help="count the DFA in single-sink form instead of with final flags",
    )
    p.add_argument("--verify-each", action="store_true", help="audit the automaton at each sample")
    p.set_defaults(handler=cmd_bench)

    p = sub.add_parser("export-dot", help="write the automaton as Graphviz dot to stdout")
    p.add_argument("file", help="automaton file")
    p.set_defaults(handler=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code else 0
    try:
        return int(args.handler(args))
    except InternalInvariantError:
        raise
    except (FormatError, UnknownStateError, CycleError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EmptyWordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


def cmd_build(args: argparse.Namespace) -> int:
    wl = apply_order(read_word_file(args.input), args.order, args.seed)
    a, _ = build_lexicon(list(wl.words))
    fileformat.save(a, args.output)
    print(f"words={wl.distinct()} states={a.num_states} transitions={a.num_transitions}")
    return 0


def cmd_add(args: argparse.Namespace) -> int:
    a = fileformat.load(args.file)
    report = insert_word(a, args.word)
    _atomic_save(a, args.file)
    print(
        f"word={report.word} already_present={report.already_present} "
        f"states_created={report.states_created} "
        f"states_merged_sinkward={report.states_merged_sinkward} "
        f"states_merged_sourceward={report.states_merged_sourceward} "
        f"rounds={report.rounds} "
        f"states={a.num_states} transitions={a.num_transitions}"
    )
    return 0


def cmd_query(args: argparse.Namespace) -> int:
    a = fileformat.load(args.file)
    if a.contains(args.word):
        print("FOUND")
        return 0
    print("NOT FOUND")
    return 1


def cmd_verify(args: argparse.Namespace) -> int:
    a = fileformat.load(args.file)
    failed = False

    problems = a.structure_problems()
    if problems:
        failed = True
        print(f"structure: FAIL ({problems[0]}; {len(problems)} problem(s))")
    else:
        print("structure: PASS")

    acyclic = a.is_acyclic()
    if acyclic:
        print("acyclic: PASS")
    else:
        failed = True
        print("acyclic: FAIL (automaton contains a directed cycle)")

    similarity = check_compact_by_similarity(a)
    if similarity.compact:
        print("compact-similarity: PASS")
    else:
        failed = True
        print(f"compact-similarity: FAIL ({similarity.witness})")

    if not acyclic:
        print("compact-equivalence: SKIP (needs an acyclic automaton)")
    elif a.num_states > args.equivalence_limit:
        print(
            f"compact-equivalence: SKIP ({a.num_states} states exceeds "
            f"--equivalence-limit {args.equivalence_limit})"
        )
    else:
        equivalence = check_compact_by_equivalence(a)
        if equivalence.compact:
            print("compact-equivalence: PASS")
        else:
            failed = True
            print(f"compact-equivalence: FAIL ({equivalence.witness})")

    if args.words is None:
        print("language: SKIP (no word file given)")
    elif not acyclic:
        failed = True
        print("language: FAIL (cannot enumerate a cyclic automaton)")
    else:
        expected = set(read_word_file(args.words).words)
        stored = a.language()
        if stored == expected:
            print(f"language: PASS ({len(expected)} words)")
        else:
            failed = True
            missing = len(expected - stored)
            extra = len(stored - expected)
            print(f"language: FAIL ({missing} missing, {extra} extra)")

    return 1 if failed else 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    a = fileformat.load(args.file)
    for word in sorted(a.language()):
        print(word)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    wl = read_word_file(args.input)
    a, records = growth_run(
        list(wl.words),
        step=args.step,
        compare_dfa=args.compare_dfa,
        verify_each=args.verify_each,
        dfa_single_sink=args.dfa_single_sink,
    )
    write_csv(records, args.csv)
    slopes = growth_slopes(records)
    print(f"words={len(wl)} states={a.num_states} transitions={a.num_transitions}")
    print(
        "slopes: states={states:.3f} transitions={transitions:.3f} time={time:.3f}".format(
            **slopes
        )
    )
    print(f"csv: {args.csv} ({len(records)} samples)")
    return 0


def cmd_export_dot(args: argparse.Namespace) -> int:
    a = fileformat.load(args.file)
    sys.stdout.write(to_dot(a))
    return 0


def to_dot(a: Automaton) -> str:
    """Graphviz rendering with deterministic node and edge order."""
    lines = [
        "digraph automaton {",
        "  rankdir=LR;",
        "  node [shape=circle];",
        f"  {a.source} [penwidth=2];",
        f"  {a.sink} [shape=doublecircle];",
    ]
    lines.extend(
        f"  {t.from_state} -> {t.to_state} [label=\"{_dot_label(t.label)}\"];"
        for t in a.transitions()
    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_label(label: str) -> str:
    if label == '"':
        return '\\"'
    if label == "\\":
        return "\\\\"
    if label.isprintable():
        return label
    return f"U+{ord(label):04X}"


def _atomic_save(a: Automaton, path: str) -> None:
    """Write to a sibling temp file and rename, so readers never see a torn file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".compactnfa-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(fileformat.dumps(a))
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise


if __name__ == "__main__":
    sys.exit(main())
