"""End-to-end runs of every subcommand through main()."""

from __future__ import annotations

import pytest

from compactnfa import Automaton, attach_word, build_lexicon, load, save
from compactnfa.cli import main, to_dot
from conftest import FIVE_WORDS, ORDER_SENSITIVE_A, ORDER_SENSITIVE_B, SUFFIX_SHARING_WORDS

CYCLIC_TEXT = (
    "NFAv1\n"
    "source 0\n"
    "sink 1\n"
    "states 3\n"
    "0\n"
    "1\n"
    "2\n"
    "transitions 3\n"
    "0 2 U+0061\n"
    "2 1 U+0062\n"
    "2 2 U+0063\n"
)


def word_file(tmp_path, words, name="words.txt"):
    path = tmp_path / name
    path.write_text("".join(w + "\n" for w in words), encoding="utf-8")
    return str(path)


def built_file(tmp_path, words, name="lex.nfa"):
    a, _ = build_lexicon(list(words))
    path = tmp_path / name
    save(a, path)
    return str(path)


class TestUsage:
    def test_no_arguments(self, capsys):
        assert main([]) == 3
        assert "usage" in capsys.readouterr().err

    def test_unknown_command(self, capsys):
        assert main(["polish"]) == 3

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        assert "build" in capsys.readouterr().out

    def test_bench_requires_csv(self, tmp_path, capsys):
        words = word_file(tmp_path, ["at"])
        assert main(["bench", words]) == 3

    def test_bad_order_choice(self, tmp_path, capsys):
        words = word_file(tmp_path, ["at"])
        assert main(["build", words, str(tmp_path / "o.nfa"), "--order", "random"]) == 3


class TestBuild:
    def test_build_writes_file_and_stats(self, tmp_path, capsys):
        words = word_file(tmp_path, SUFFIX_SHARING_WORDS)
        out = tmp_path / "lex.nfa"
        assert main(["build", words, str(out)]) == 0
        assert capsys.readouterr().out == "words=6 states=8 transitions=12\n"
        a = load(out)
        assert a.language() == set(SUFFIX_SHARING_WORDS)

    def test_blank_lines_and_duplicates(self, tmp_path, capsys):
        path = tmp_path / "w.txt"
        path.write_text("at\n\nat\non\n\n", encoding="utf-8")
        out = tmp_path / "lex.nfa"
        assert main(["build", str(path), str(out)]) == 0
        assert capsys.readouterr().out.startswith("words=2 ")
        assert load(out).language() == {"at", "on"}

    def test_empty_input_builds_empty_automaton(self, tmp_path, capsys):
        words = word_file(tmp_path, [])
        out = tmp_path / "empty.nfa"
        assert main(["build", words, str(out)]) == 0
        assert capsys.readouterr().out == "words=0 states=2 transitions=0\n"
        a = load(out)
        assert a.language() == set()

    def test_missing_input_file(self, tmp_path, capsys):
        assert main(["build", str(tmp_path / "absent.txt"), str(tmp_path / "o.nfa")]) == 2
        assert "error" in capsys.readouterr().err

    def test_order_flag_changes_insertion_sequence(self, tmp_path, capsys):
        # sorted order inserts a different sequence; language never moves
        a_words = word_file(tmp_path, ORDER_SENSITIVE_A, "a.txt")
        out_given = tmp_path / "given.nfa"
        out_sorted = tmp_path / "sorted.nfa"
        assert main(["build", a_words, str(out_given), "--order", "given"]) == 0
        first = capsys.readouterr().out
        assert main(["build", a_words, str(out_sorted), "--order", "sorted"]) == 0
        assert first == "words=4 states=5 transitions=7\n"
        assert load(out_given).language() == load(out_sorted).language()

    def test_insertion_order_changes_file_bytes(self, tmp_path, capsys):
        a_words = word_file(tmp_path, ORDER_SENSITIVE_A, "a.txt")
        b_words = word_file(tmp_path, ORDER_SENSITIVE_B, "b.txt")
        out_a = tmp_path / "a.nfa"
        out_b = tmp_path / "b.nfa"
        assert main(["build", a_words, str(out_a)]) == 0
        assert main(["build", b_words, str(out_b)]) == 0
        capsys.readouterr()
        assert out_a.read_bytes() != out_b.read_bytes()
        assert load(out_a).language() == load(out_b).language()

    def test_shuffled_builds_are_seed_deterministic(self, tmp_path, capsys):
        words = word_file(tmp_path, FIVE_WORDS + SUFFIX_SHARING_WORDS)
        out1 = tmp_path / "one.nfa"
        out2 = tmp_path / "two.nfa"
        assert main(["build", words, str(out1), "--order", "shuffled", "--seed", "9"]) == 0
        assert main(["build", words, str(out2), "--order", "shuffled", "--seed", "9"]) == 0
        capsys.readouterr()
        assert out1.read_bytes() == out2.read_bytes()


class TestAdd:
    def test_add_merges_and_reports(self, tmp_path, capsys):
        lex = built_file(tmp_path, SUFFIX_SHARING_WORDS)
        assert main(["add", lex, "flop"]) == 0
        out = capsys.readouterr().out
        assert out == (
            "word=flop already_present=False states_created=3 "
            "states_merged_sinkward=2 states_merged_sourceward=2 rounds=3 "
            "states=7 transitions=10\n"
        )
        assert load(lex).language() == set(SUFFIX_SHARING_WORDS) | {"flop"}

    def test_add_existing_word_leaves_file_identical(self, tmp_path, capsys):
        lex = built_file(tmp_path, SUFFIX_SHARING_WORDS)
        before = (tmp_path / "lex.nfa").read_bytes()
        assert main(["add", lex, "chat"]) == 0
        out = capsys.readouterr().out
        assert "already_present=True" in out
        assert "states=8 transitions=12" in out
        assert (tmp_path / "lex.nfa").read_bytes() == before

    def test_add_to_empty_automaton(self, tmp_path, capsys):
        lex = built_file(tmp_path, [])
        assert main(["add", lex, "cat"]) == 0
        assert load(lex).language() == {"cat"}

    def test_add_empty_word(self, tmp_path, capsys):
        lex = built_file(tmp_path, ["at"])
        before = (tmp_path / "lex.nfa").read_bytes()
        assert main(["add", lex, ""]) == 3
        assert "error" in capsys.readouterr().err
        assert (tmp_path / "lex.nfa").read_bytes() == before

    def test_add_to_missing_file(self, tmp_path, capsys):
        assert main(["add", str(tmp_path / "absent.nfa"), "cat"]) == 2

    def test_add_to_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "broken.nfa"
        path.write_text("NFAv1\nsource 0\n", encoding="utf-8")
        assert main(["add", str(path), "cat"]) == 2
        assert "error" in capsys.readouterr().err


class TestQuery:
    def test_found(self, tmp_path, capsys):
        lex = built_file(tmp_path, FIVE_WORDS)
        assert main(["query", lex, "start"]) == 0
        assert capsys.readouterr().out == "FOUND\n"

    def test_not_found_prefix(self, tmp_path, capsys):
        lex = built_file(tmp_path, FIVE_WORDS)
        assert main(["query", lex, "star"]) == 1
        assert capsys.readouterr().out == "NOT FOUND\n"

    def test_empty_word(self, tmp_path, capsys):
        lex = built_file(tmp_path, FIVE_WORDS)
        assert main(["query", lex, ""]) == 3

    def test_empty_automaton(self, tmp_path, capsys):
        lex = built_file(tmp_path, [])
        assert main(["query", lex, "cat"]) == 1

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "broken.nfa"
        path.write_text("not an automaton\n", encoding="utf-8")
        assert main(["query", str(path), "cat"]) == 2


class TestVerify:
    def test_clean_file_passes_all_checks(self, tmp_path, capsys):
        lex = built_file(tmp_path, SUFFIX_SHARING_WORDS)
        words = word_file(tmp_path, SUFFIX_SHARING_WORDS)
        assert main(["verify", lex, "--words", words]) == 0
        out = capsys.readouterr().out
        assert out == (
            "structure: PASS\n"
            "acyclic: PASS\n"
            "compact-similarity: PASS\n"
            "compact-equivalence: PASS\n"
            "language: PASS (6 words)\n"
        )

    def test_language_check_skipped_without_words(self, tmp_path, capsys):
        lex = built_file(tmp_path, FIVE_WORDS)
        assert main(["verify", lex]) == 0
        assert "language: SKIP (no word file given)" in capsys.readouterr().out

    def test_corrupted_file_fails_with_witness(self, tmp_path, capsys):
        # freeze the automaton mid-insertion, before the merge passes run
        a, _ = build_lexicon(SUFFIX_SHARING_WORDS)
        attach_word(a, "flop")
        path = tmp_path / "stuck.nfa"
        save(a, path)
        assert main(["verify", str(path)]) == 1
        out = capsys.readouterr().out
        assert "compact-similarity: FAIL" in out
        assert "down-similar" in out
        assert "compact-equivalence: FAIL" in out

    def test_cyclic_file(self, tmp_path, capsys):
        path = tmp_path / "cyclic.nfa"
        path.write_text(CYCLIC_TEXT, encoding="utf-8")
        assert main(["verify", str(path)]) == 1
        out = capsys.readouterr().out
        assert "acyclic: FAIL" in out
        assert "compact-equivalence: SKIP (needs an acyclic automaton)" in out

    def test_language_mismatch(self, tmp_path, capsys):
        lex = built_file(tmp_path, ["at", "on"])
        words = word_file(tmp_path, ["at", "in"])
        assert main(["verify", lex, "--words", words]) == 1
        assert "language: FAIL (1 missing, 1 extra)" in capsys.readouterr().out

    def test_equivalence_limit_skips(self, tmp_path, capsys):
        lex = built_file(tmp_path, FIVE_WORDS)
        assert main(["verify", lex, "--equivalence-limit", "3"]) == 0
        out = capsys.readouterr().out
        assert "compact-equivalence: SKIP" in out
        assert "--equivalence-limit 3" in out

    def test_empty_automaton_verifies(self, tmp_path, capsys):
        lex = built_file(tmp_path, [])
        words = word_file(tmp_path, [])
        assert main(["verify", lex, "--words", words]) == 0
        assert "language: PASS (0 words)" in capsys.readouterr().out


class TestEnumerate:
    def test_sorted_output(self, tmp_path, capsys):
        lex = built_file(tmp_path, FIVE_WORDS)
        assert main(["enumerate", lex]) == 0
        assert capsys.readouterr().out == "".join(w + "\n" for w in sorted(FIVE_WORDS))

    def test_empty_automaton(self, tmp_path, capsys):
        lex = built_file(tmp_path, [])
        assert main(["enumerate", lex]) == 0
        assert capsys.readouterr().out == ""

    def test_round_trips_the_corpus(self, tmp_path, capsys):
        words = sorted(set(SUFFIX_SHARING_WORDS + FIVE_WORDS))
        lex = built_file(tmp_path, words)
        assert main(["enumerate", lex]) == 0
        assert capsys.readouterr().out.splitlines() == words


class TestBench:
    def test_bench_writes_csv_and_summary(self, tmp_path, capsys):
        words = word_file(tmp_path, FIVE_WORDS + SUFFIX_SHARING_WORDS)
        csv_path = tmp_path / "growth.csv"
        assert main(["bench", str(words), "--csv", str(csv_path), "--step", "4"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("words=11 states=")
        assert "slopes: states=" in out
        assert f"csv: {csv_path} (3 samples)" in out
        lines = csv_path.read_text(encoding="utf-8").strip().split("\n")
        assert lines[0] == (
            "words,nfa_states,nfa_transitions,dfa_states,dfa_transitions,cumulative_us"
        )
        assert len(lines) == 4
        assert [int(line.split(",")[0]) for line in lines[1:]] == [4, 8, 11]
        # no baseline requested: the DFA cells stay empty
        assert all(line.split(",")[3] == "" for line in lines[1:])

    def test_bench_with_dfa_columns(self, tmp_path, capsys):
        words = word_file(tmp_path, SUFFIX_SHARING_WORDS)
        csv_path = tmp_path / "growth.csv"
        assert (
            main(["bench", str(words), "--csv", str(csv_path), "--step", "6", "--compare-dfa"])
            == 0
        )
        capsys.readouterr()
        lines = csv_path.read_text(encoding="utf-8").strip().split("\n")
        final = lines[-1].split(",")
        assert final[0] == "6"
        assert final[1] == "8" and final[2] == "12"
        assert final[3] != "" and final[4] != ""

    def test_bench_verify_each(self, tmp_path, capsys):
        words = word_file(tmp_path, SUFFIX_SHARING_WORDS)
        csv_path = tmp_path / "growth.csv"
        assert (
            main(["bench", str(words), "--csv", str(csv_path), "--step", "2", "--verify-each"])
            == 0
        )

    def test_bench_missing_input(self, tmp_path, capsys):
        assert main(["bench", str(tmp_path / "absent.txt"), "--csv", str(tmp_path / "o.csv")]) == 2


class TestExportDot:
    def test_empty_automaton_golden(self, tmp_path, capsys):
        lex = built_file(tmp_path, [])
        assert main(["export-dot", lex]) == 0
        assert capsys.readouterr().out == (
            "digraph automaton {\n"
            "  rankdir=LR;\n"
            "  node [shape=circle];\n"
            "  0 [penwidth=2];\n"
            "  1 [shape=doublecircle];\n"
            "}\n"
        )

    def test_edges_rendered_sorted(self, tmp_path, capsys):
        lex = built_file(tmp_path, ["ca"])
        assert main(["export-dot", lex]) == 0
        out = capsys.readouterr().out
        assert '  0 -> 2 [label="c"];\n' in out
        assert '  2 -> 1 [label="a"];\n' in out
        assert out.index('label="c"') < out.index('label="a"')

    def test_deterministic_across_runs(self, tmp_path, capsys):
        lex = built_file(tmp_path, FIVE_WORDS)
        assert main(["export-dot", lex]) == 0
        first = capsys.readouterr().out
        assert main(["export-dot", lex]) == 0
        assert capsys.readouterr().out == first

    def test_label_escaping(self):
        a, _ = build_lexicon(['a"b', "x\\y", "p\x07q"])
        dot = to_dot(a)
        assert '\\"' in dot
        assert "\\\\" in dot
        assert "U+0007" in dot
        assert dot.count("->") == a.num_transitions
