import json

import pytest

from course_advisor import parse_records
from course_advisor.cli import (
    EXIT_IO,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_UNKNOWN_STUDENT,
    EXIT_USAGE,
    main,
)
from course_advisor.ingest import CSV_HEADER


@pytest.fixture
def table1_path(tmp_path, table1_csv):
    path = tmp_path / "table1.csv"
    path.write_text(table1_csv, encoding="utf-8")
    return path


class TestMine:
    def test_table1_rule_file_holds_exactly_the_two_rules(self, table1_path, tmp_path, capsys):
        out = tmp_path / "rules.txt"
        code = main(
            [
                "mine",
                str(table1_path),
                "--min-support", "0.33",
                "--min-confidence", "0.7",
                "--major", "CIT",
                "--out", str(out),
            ]
        )
        assert code == EXIT_OK
        assert out.read_text(encoding="utf-8") == (
            "D-->F-----100%|support=1/3|confidence=1/1\n"
            "F-->D-----100%|support=1/3|confidence=1/1\n"
        )
        printed = capsys.readouterr().out
        assert "transactions: 6" in printed
        assert "items: 9" in printed
        assert "level 1: 5" in printed
        assert "level 2: 1" in printed
        assert "rules: 2" in printed

    def test_min_support_above_one_is_a_usage_error_before_any_work(self, table1_path, tmp_path):
        out = tmp_path / "rules.txt"
        with pytest.raises(SystemExit) as excinfo:
            main(
                [
                    "mine",
                    str(table1_path),
                    "--min-support", "1.1",
                    "--min-confidence", "0.7",
                    "--major", "CIT",
                    "--out", str(out),
                ]
            )
        assert excinfo.value.code == EXIT_USAGE
        assert not out.exists()

    def test_unknown_major_warns_and_writes_empty_file(self, table1_path, tmp_path, capsys):
        out = tmp_path / "rules.txt"
        code = main(
            [
                "mine",
                str(table1_path),
                "--min-support", "0.33",
                "--min-confidence", "0.7",
                "--major", "XX",
                "--out", str(out),
            ]
        )
        assert code == EXIT_OK
        assert out.read_text(encoding="utf-8") == ""
        captured = capsys.readouterr()
        assert "warning" in captured.err
        assert "transactions: 0" in captured.out


class TestAdvise:
    def test_text_format_mirrors_the_display_convention(self, tmp_path):
        # Pre-mined rule at confidence 48/100 for a student who passed the
        # antecedent: the printed line is course----pct%.
        csv = tmp_path / "data.csv"
        csv.write_text(
            f"{CSV_HEADER}\nst1,CS,Sem-1,1741500,80\n", encoding="utf-8"
        )
        rules = tmp_path / "rules.txt"
        rules.write_text(
            "1741500-->801012-----48%|support=12/100|confidence=48/100\n", encoding="utf-8"
        )
        code = main(
            [
                "advise",
                str(csv),
                "--student", "st1",
                "--min-support", "0.1",
                "--min-confidence", "0.4",
                "--rules", str(rules),
            ]
        )
        assert code == EXIT_OK

    def test_text_line_golden(self, tmp_path, capsys):
        csv = tmp_path / "data.csv"
        csv.write_text(f"{CSV_HEADER}\nst1,CS,Sem-1,1741500,80\n", encoding="utf-8")
        rules = tmp_path / "rules.txt"
        rules.write_text(
            "1741500-->801012-----48%|support=12/100|confidence=48/100\n", encoding="utf-8"
        )
        main(
            [
                "advise", str(csv),
                "--student", "st1",
                "--min-support", "0.1",
                "--min-confidence", "0.4",
                "--rules", str(rules),
            ]
        )
        assert capsys.readouterr().out == "801012----48%\n"

    def test_no_suggestions_message(self, table1_path, capsys):
        code = main(
            [
                "advise",
                str(table1_path),
                "--student", "1",
                "--min-support", "0.33",
                "--min-confidence", "0.7",
            ]
        )
        assert code == EXIT_OK
        assert capsys.readouterr().out == "no suggestions\n"

    def test_top_k_zero_is_valid_and_empty(self, table1_path, capsys):
        code = main(
            [
                "advise",
                str(table1_path),
                "--student", "2",
                "--min-support", "0.33",
                "--min-confidence", "0.7",
                "--top-k", "0",
            ]
        )
        assert code == EXIT_OK
        assert "no suggestions" in capsys.readouterr().out

    def test_structured_format_is_json_with_exact_rationals(self, table1_path, capsys):
        code = main(
            [
                "advise",
                str(table1_path),
                "--student", "1",
                "--min-support", "0.33",
                "--min-confidence", "0.7",
                "--format", "structured",
            ]
        )
        assert code == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["student_id"] == "1"
        assert data["params"]["min_support"] == "33/100"
        assert data["params"]["min_confidence"] == "7/10"
        assert data["kept_rules"] == []
        assert data["suggestions"] == []

    def test_unknown_student_exit_code(self, table1_path, capsys):
        code = main(
            [
                "advise",
                str(table1_path),
                "--student", "99",
                "--min-support", "0.33",
                "--min-confidence", "0.7",
            ]
        )
        assert code == EXIT_UNKNOWN_STUDENT
        assert "unknown student" in capsys.readouterr().err


class TestGen:
    def test_gen_writes_parseable_csv(self, tmp_path, capsys):
        out = tmp_path / "synth.csv"
        code = main(
            [
                "gen",
                "--out", str(out),
                "--seed", "42",
                "--students", "30",
                "--majors", "CS,IT",
                "--semesters", "2:4",
                "--courses", "2:4",
                "--pool", "12",
            ]
        )
        assert code == EXIT_OK
        records = parse_records(out.read_text(encoding="utf-8"))
        assert len({r.student_id for r in records}) == 30
        assert "wrote" in capsys.readouterr().out

    def test_gen_is_byte_identical_for_a_fixed_seed(self, tmp_path):
        args = ["--seed", "42", "--students", "20", "--pool", "10", "--courses", "2:3"]
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        assert main(["gen", "--out", str(first)] + args) == EXIT_OK
        assert main(["gen", "--out", str(second)] + args) == EXIT_OK
        assert first.read_bytes() == second.read_bytes()

    def test_cluster_flag(self, tmp_path):
        out = tmp_path / "synth.csv"
        code = main(
            [
                "gen",
                "--out", str(out),
                "--seed", "7",
                "--students", "25",
                "--majors", "CS",
                "--pool", "10",
                "--courses", "2:3",
                "--cluster", "1000000:1000001:1.0",
            ]
        )
        assert code == EXIT_OK
        text = out.read_text(encoding="utf-8")
        assert "1000001" in text

    def test_bad_cluster_course_is_a_usage_error(self, tmp_path, capsys):
        code = main(
            [
                "gen",
                "--out", str(tmp_path / "x.csv"),
                "--seed", "7",
                "--students", "5",
                "--cluster", "zzz:1000001:1.0",
            ]
        )
        assert code == EXIT_USAGE
        assert "outside" in capsys.readouterr().err


class TestStats:
    def test_table1_summary(self, table1_path, capsys):
        code = main(["stats", str(table1_path)])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "students: 2" in out
        assert "majors: CIT: 2" in out
        assert "transactions: 6" in out
        assert "items: 9" in out
        assert "transaction lengths: 1: 1, 2: 3, 3: 1, 4: 1" in out

    def test_verbose_dumps_transactions_with_identifiers(self, table1_path, capsys):
        main(["stats", str(table1_path), "--verbose"])
        out = capsys.readouterr().out
        assert "CIT 1 1 First-Semester-2010-2011 A,B" in out
        assert "CIT 6 2 Summer-Semester-2010- L,Z" in out

    def test_empty_dataset_is_all_zero(self, tmp_path, capsys):
        path = tmp_path / "empty.csv"
        path.write_text(f"{CSV_HEADER}\n", encoding="utf-8")
        code = main(["stats", str(path)])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "students: 0" in out
        assert "transactions: 0" in out
        assert "items: 0" in out


class TestExitCodes:
    def test_parse_error(self, tmp_path, capsys):
        path = tmp_path / "bad.csv"
        path.write_text(f"{CSV_HEADER}\n1,CS,Sem-1,B,101\n", encoding="utf-8")
        assert main(["stats", str(path)]) == EXIT_PARSE
        assert "line 2" in capsys.readouterr().err

    def test_io_error_on_missing_file(self, tmp_path, capsys):
        assert main(["stats", str(tmp_path / "absent.csv")]) == EXIT_IO
        assert "error" in capsys.readouterr().err

    def test_usage_error_on_bad_flag(self, table1_path):
        with pytest.raises(SystemExit) as excinfo:
            main(["mine", str(table1_path), "--min-support", "abc",
                  "--min-confidence", "0.5", "--major", "CIT", "--out", "x"])
        assert excinfo.value.code == EXIT_USAGE

    def test_duplicate_row_is_a_parse_error(self, tmp_path):
        path = tmp_path / "dup.csv"
        path.write_text(
            f"{CSV_HEADER}\n1,CS,Sem-1,B,78\n1,CS,Sem-1,B,80\n", encoding="utf-8"
        )
        assert main(["stats", str(path)]) == EXIT_PARSE

    def test_non_utf8_input_is_a_parse_error(self, tmp_path, capsys):
        path = tmp_path / "latin1.csv"
        path.write_bytes(f"{CSV_HEADER}\n1,CS,Sem-1,B\xe9,78\n".encode("latin-1"))
        assert main(["stats", str(path)]) == EXIT_PARSE
        assert "UTF-8" in capsys.readouterr().err
