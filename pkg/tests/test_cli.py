import json
import re

import pytest

from dynauto.__main__ import EXIT_INPUT, EXIT_LIMIT, EXIT_NO, EXIT_OK, main
from dynauto.engines import ENGINE_NAMES
from dynauto.persistence import from_dict

ALWAYS_NEXT = "<(([step*] b)?) ; step> a"


@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("NO_COLOR", "1")
    return tmp_path


@pytest.fixture
def write(workdir):
    def make(name, text):
        path = workdir / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return make


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestFormulaCommands:

    def test_parse(self, capsys, write):
        assert run(capsys, "parse", write("f.ldl", "a   &  b\n")) == (EXIT_OK, "a & b\n")

    def test_parse_theory(self, capsys, write):
        path = write("f.ldl", "*&t .>? a")
        assert run(capsys, "--dialect", "theory", "parse", path) == (EXIT_OK, "*&t .>? a\n")

    def test_nnf(self, capsys, write):
        assert run(capsys, "nnf", write("f.ldl", "!(a & b)")) == (EXIT_OK, "!a | !b\n")

    def test_closure(self, capsys, write):
        code, out = run(capsys, "closure", write("f.ldl", ALWAYS_NEXT))
        lines = out.splitlines()
        assert code == EXIT_OK
        assert len(lines) == 7
        assert lines[0] == f"0: {ALWAYS_NEXT}"
        assert lines[2] == "2: [step*] b"

    def test_closure_with_negations(self, capsys, write):
        code, out = run(capsys, "closure", "--negations", write("f.ldl", ALWAYS_NEXT))
        assert len(out.splitlines()) == 14

    def test_syntax_error(self, capsys, write):
        assert main(["parse", write("f.ldl", "a &")]) == EXIT_INPUT
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "1:4" in captured.err

    def test_missing_file(self, capsys):
        assert run(capsys, "parse", "nowhere.ldl")[0] == EXIT_INPUT

    def test_unknown_dialect(self, capsys, write):
        assert run(capsys, "--dialect", "klingon", "parse", write("f.ldl", "a"))[0] == EXIT_INPUT


class TestCompile:

    def test_minimal_dfa_summary(self, capsys, write):
        code, out = run(capsys, "compile", write("f.ldl", ALWAYS_NEXT), "--target", "dfa-min", "--format", "text")
        assert code == EXIT_OK
        assert out.startswith("dfa-min: 4 states")

    @pytest.mark.parametrize("target", ["afw", "nfa", "dfa", "dfa-min"])
    def test_true_has_one_state(self, capsys, write, target):
        code, out = run(capsys, "compile", write("f.ldl", "tt"), "--target", target, "--format", "text")
        assert out.startswith(f"{target}: 1 states")

    def test_afw_facts_by_default(self, capsys, write):
        code, out = run(capsys, "compile", write("f.ldl", ALWAYS_NEXT))
        assert out.startswith("prop(1,a).\nprop(2,b).\nprop(3,last).\n")
        assert "initial_state(0)." in out

    def test_json(self, capsys, write):
        code, out = run(capsys, "compile", write("f.ldl", ALWAYS_NEXT), "--target", "dfa-min", "--format", "json")
        assert from_dict(json.loads(out)).size == 4

    def test_dot(self, capsys, write):
        code, out = run(capsys, "compile", write("f.ldl", ALWAYS_NEXT), "--target", "dfa", "--format", "dot")
        assert out.startswith("digraph dfa {")

    def test_out_file(self, capsys, write, workdir):
        code, out = run(capsys, "--out", "dfa.dot", "compile", write("f.ldl", ALWAYS_NEXT),
                        "--target", "dfa-min", "--format", "dot")
        assert out == ""
        assert (workdir / "dfa.dot").read_text().startswith("digraph dfa {")

    def test_nfa_has_no_facts(self, capsys, write):
        assert run(capsys, "compile", write("f.ldl", ALWAYS_NEXT), "--target", "nfa")[0] == EXIT_INPUT

    def test_mona_needs_a_dfa_target(self, capsys, write):
        assert run(capsys, "compile", write("f.ldl", ALWAYS_NEXT), "--mona")[0] == EXIT_INPUT

    def test_state_cap(self, capsys, write):
        code, _ = run(capsys, "compile", write("f.ldl", ALWAYS_NEXT), "--target", "dfa", "--state-cap", "1")
        assert code == EXIT_LIMIT

    def test_repeatable(self, capsys, write):
        path = write("f.ldl", ALWAYS_NEXT)
        first = run(capsys, "compile", path, "--target", "dfa-min", "--format", "json")
        again = run(capsys, "compile", path, "--target", "dfa-min", "--format", "json")
        assert first == again


class TestCheck:

    @pytest.mark.parametrize("engine", ["direct", "afw", "nfa", "dfa", "dfa-min", "mso-st", "mso-enc"])
    def test_worked_example(self, capsys, write, engine):
        formula = write("f.ldl", ALWAYS_NEXT)
        accepted = write("accepted.json", '[["b"], ["a", "b"], ["b"]]')
        rejected = write("rejected.json", '[["b"], ["a"], ["b"]]')
        code, out = run(capsys, "check", formula, accepted, "--engine", engine)
        assert code == EXIT_OK
        assert re.fullmatch(rf"ACCEPTED \(engine: {engine}, \d+\.\d{{4}}s\)\n", out)
        code, out = run(capsys, "check", formula, rejected, "--engine", engine)
        assert code == EXIT_NO
        assert out.startswith(f"REJECTED (engine: {engine}, ")

    def test_facts_trace(self, capsys, write):
        trace = write("accepted.lp", "trace(2,0).\ntrace(1,1).\ntrace(2,1).\ntrace(2,2).\ntrace(3,2).\n")
        code, out = run(capsys, "check", write("f.ldl", ALWAYS_NEXT), trace, "--trace-format", "facts")
        assert code == EXIT_OK

    def test_malformed_trace(self, capsys, write):
        code, _ = run(capsys, "check", write("f.ldl", ALWAYS_NEXT), write("t.json", "[[1]]"))
        assert code == EXIT_INPUT


class TestXcheck:

    def test_single_formula(self, capsys, write):
        code, out = run(capsys, "xcheck", write("f.txt", "a\n"), "--alphabet", "a", "--max-len", "2")
        assert code == EXIT_OK
        assert out.splitlines() == ["f1: 6 traces, 3 accepted, unanimous",
                                    "1 formulas, 6 checks, 0 disagreements"]

    def test_named_entries_and_comments(self, capsys, write):
        path = write("f.txt", "# corpus\nfirst: a\nsecond: X b\n")
        code, out = run(capsys, "xcheck", path, "--max-len", "2")
        lines = out.splitlines()
        assert lines[0].startswith("first: 20 traces")
        assert lines[1].startswith("second: 20 traces")

    def test_mso_engines(self, capsys, write):
        code, out = run(capsys, "xcheck", write("f.txt", ALWAYS_NEXT + "\n"), "--max-len", "3",
                        "--engines", "direct,afw,mso-st,mso-enc")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "f1: 84 traces, 6 accepted, unanimous"

    def test_builtin(self, capsys):
        code, out = run(capsys, "xcheck", "builtin", "--max-len", "2")
        assert code == EXIT_OK
        assert out.splitlines()[-1].endswith("0 disagreements")

    def test_metrics(self, capsys, write, workdir):
        run(capsys, "xcheck", write("f.txt", "a\n"), "--max-len", "1", "--metrics", "m.jsonl")
        record = json.loads((workdir / "m.jsonl").read_text().splitlines()[0])
        assert record["unanimous"] is True
        assert record["traces"] == 2

    def test_random_traces(self, capsys, write):
        code, out = run(capsys, "xcheck", write("f.txt", "a U b\n"), "--max-len", "1",
                        "--random", "10", "--seed", "1")
        assert code == EXIT_OK
        assert out.splitlines()[0].startswith("f1: 14 traces")

    def test_every_engine_runs_by_default(self, capsys, write, workdir):
        run(capsys, "xcheck", write("f.txt", "a\n"), "--max-len", "1", "--metrics", "m.jsonl")
        record = json.loads((workdir / "m.jsonl").read_text().splitlines()[0])
        assert sorted(record["accepted"]) == sorted(ENGINE_NAMES)
        assert record["accepted"]["mso-st"] == record["accepted"]["direct"] == 1

    def test_unknown_engine(self, capsys, write):
        assert run(capsys, "xcheck", write("f.txt", "a\n"), "--engines", "oracle")[0] == EXIT_INPUT


class TestEmitMso:

    def test_standard_translation(self, capsys, write):
        code, out = run(capsys, "emit-mso", write("f.ldl", ALWAYS_NEXT))
        assert out.startswith("m2l-str;\nvar2 a, b;\n")
        assert out.count("ex2 ") == 1
        assert "var1" not in out

    def test_closure_encoding(self, capsys, write):
        code, out = run(capsys, "emit-mso", write("f.ldl", ALWAYS_NEXT), "--flavor", "enc")
        assert out.count("ex2 ") == 5

    def test_atom(self, capsys, write):
        code, out = run(capsys, "emit-mso", write("f.ldl", "a"))
        assert "ex2" not in out


class TestConfig:

    def test_missing_config_file(self, capsys, write):
        assert run(capsys, "--config", "absent.yaml", "parse", write("f.ldl", "a"))[0] == EXIT_INPUT

    def test_config_bounds_enumeration(self, capsys, write):
        pytest.importorskip("yaml")
        config = write("dynauto.yaml", "MAX_TRACE_LEN: 1\nUNKNOWN_KEY: 3\n")
        code, out = run(capsys, "--config", config, "xcheck", write("f.txt", "a\n"), "--alphabet", "a")
        assert out.splitlines()[0] == "f1: 2 traces, 1 accepted, unanimous"

    def test_random_count_defaults_to_config(self, capsys, write):
        pytest.importorskip("yaml")
        config = write("dynauto.yaml", "RANDOM_TRACES: 5\n")
        code, out = run(capsys, "--config", config, "xcheck", write("f.txt", "a U b\n"),
                        "--max-len", "1", "--random", "--seed", "1")
        assert code == EXIT_OK
        assert out.splitlines()[0].startswith("f1: 9 traces")

    def test_log_file(self, capsys, write, workdir):
        run(capsys, "--log-file", "run.log", "compile", write("f.ldl", ALWAYS_NEXT), "--target", "dfa-min")
        assert "event=MINIMIZE" in (workdir / "run.log").read_text()
