import io

import pytest

import sortlab.heap_core as heap_core
from sortlab.cli import main, parse_sizes


def run_cli(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        assert monkeypatch is not None
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParseSizes:
    def test_doubling_ladder(self):
        assert parse_sizes("2^8..2^11") == [256, 512, 1024, 2048]
        assert parse_sizes("4..32") == [4, 8, 16, 32]

    def test_comma_list(self):
        assert parse_sizes("100,200,2^10") == [100, 200, 1024]
        assert parse_sizes("7") == [7]

    def test_rejects_garbage(self):
        import argparse

        for bad in ("", "abc", "2^", "10..2", "-4"):
            with pytest.raises(argparse.ArgumentTypeError):
                parse_sizes(bad)


class TestSortCommand:
    def test_stdin_to_stdout(self, capsys, monkeypatch):
        code, out, err = run_cli(capsys, ["sort"], "5\n3\n9\n1\n", monkeypatch)
        assert code == 0
        assert out == "1\n3\n5\n9\n"
        assert err == ""

    def test_blank_lines_skipped(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["sort"], "2\n\n1\n  \n", monkeypatch)
        assert code == 0 and out == "1\n2\n"

    def test_descending_with_stats(self, capsys, monkeypatch):
        code, out, err = run_cli(
            capsys, ["sort", "-a", "merge", "--order", "desc", "--stats"],
            "1\n3\n2\n", monkeypatch,
        )
        assert code == 0
        assert out == "3\n2\n1\n"
        assert "comparisons=" in err and "aux_peak_slots=3" in err

    def test_file_roundtrip(self, capsys, tmp_path):
        src = tmp_path / "in.txt"
        dst = tmp_path / "out.txt"
        src.write_text("4\n-2\n10\n")
        code, out, _ = run_cli(capsys, ["sort", "-i", str(src), "-o", str(dst)])
        assert code == 0 and out == ""
        assert dst.read_text() == "-2\n4\n10\n"

    def test_every_algorithm_available(self, capsys, monkeypatch):
        for algorithm in ("insertion", "merge", "quick", "radix", "bubble", "uhs"):
            code, out, _ = run_cli(capsys, ["sort", "-a", algorithm], "3\n1\n2\n", monkeypatch)
            assert code == 0, algorithm
            assert out == "1\n2\n3\n"

    def test_bucket_requires_float_flag(self, capsys, monkeypatch):
        code, _, err = run_cli(capsys, ["sort", "-a", "bucket"], "0.5\n", monkeypatch)
        assert code == 2
        assert "--float" in err

    def test_bucket_sorts_floats(self, capsys, monkeypatch):
        code, out, _ = run_cli(
            capsys, ["sort", "-a", "bucket", "--float"], "0.5\n0.25\n0.75\n", monkeypatch
        )
        assert code == 0 and out == "0.25\n0.5\n0.75\n"

    def test_radix_rejects_float_flag(self, capsys, monkeypatch):
        code, _, err = run_cli(capsys, ["sort", "-a", "radix", "--float"], "1\n", monkeypatch)
        assert code == 2 and "integer" in err

    def test_radix_rejects_negative_keys(self, capsys, monkeypatch):
        code, _, err = run_cli(capsys, ["sort", "-a", "radix"], "5\n-3\n", monkeypatch)
        assert code == 2 and "-3" in err

    def test_parse_error_names_line(self, capsys, monkeypatch):
        code, _, err = run_cli(capsys, ["sort"], "5\nxyz\n1\n", monkeypatch)
        assert code == 2
        assert "line 2" in err and "xyz" in err

    def test_missing_input_file(self, capsys):
        code, _, err = run_cli(capsys, ["sort", "-i", "/nonexistent/path.txt"])
        assert code == 2 and "cannot read" in err

    def test_unknown_algorithm_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, ["sort", "-a", "nosuch"])
        assert code == 2

    def test_empty_input_is_fine(self, capsys, monkeypatch):
        code, out, _ = run_cli(capsys, ["sort"], "", monkeypatch)
        assert code == 0 and out == ""


class TestBenchCommand:
    def test_default_sweep_shape(self, capsys):
        code, out, _ = run_cli(
            capsys, ["bench", "--algorithms", "uhs,merge,radix", "--sizes", "2^5..2^7"]
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == (
            "algorithm,n,distribution,trial,comparisons,swaps,"
            "element_moves,aux_peak_slots,recursion_peak,wall_nanos"
        )
        assert len(lines) == 1 + 3 * 3 * 1 * 1
        assert all(len(line.split(",")) == 10 for line in lines[1:])

    def test_deterministic_modulo_wall_nanos(self, capsys):
        argv = ["bench", "--algorithms", "uhs,quick", "--sizes", "2^6..2^8",
                "--distributions", "random,few-unique", "--trials", "2"]
        _, out1, _ = run_cli(capsys, argv)
        _, out2, _ = run_cli(capsys, argv)
        strip = lambda text: [ln.rsplit(",", 1)[0] for ln in text.strip().split("\n")]
        assert strip(out1) == strip(out2)
        assert out1.strip() != ""

    def test_csv_file_output(self, capsys, tmp_path):
        path = tmp_path / "bench.csv"
        code, out, _ = run_cli(
            capsys, ["bench", "--algorithms", "bubble", "--sizes", "64", "--csv", str(path)]
        )
        assert code == 0 and out == ""
        lines = path.read_text().splitlines()
        assert len(lines) == 2 and lines[1].startswith("bubble,64,random,0,")

    def test_bucket_gets_float_rendition(self, capsys):
        code, out, _ = run_cli(
            capsys, ["bench", "--algorithms", "bucket", "--sizes", "128",
                     "--distributions", "sorted,few-unique"]
        )
        assert code == 0
        assert len(out.strip().split("\n")) == 3

    def test_radix_with_uniform01_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, ["bench", "--algorithms", "radix", "--distributions", "uniform01"]
        )
        assert code == 2 and "uniform01" in err

    def test_bad_sizes_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, ["bench", "--sizes", "banana"])
        assert code == 2

    def test_unknown_algorithm_in_list(self, capsys):
        code, _, _ = run_cli(capsys, ["bench", "--algorithms", "uhs,warp"])
        assert code == 2

    def test_zero_trials_rejected(self, capsys):
        code, _, err = run_cli(capsys, ["bench", "--trials", "0", "--algorithms", "uhs",
                                        "--sizes", "16"])
        assert code == 2 and "--trials" in err


class TestStabilityCommand:
    def test_verdict_lines_and_exit_zero(self, capsys):
        code, out, _ = run_cli(capsys, ["stability", "--trials", "150"])
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 7
        by_alg = dict(line.split(": ", 1) for line in lines)
        assert by_alg["merge"].startswith("STABLE(trials=")
        assert by_alg["quick"].startswith("UNSTABLE witness=")
        assert by_alg["uhs"].startswith("UNSTABLE witness=")

    def test_algorithm_filter(self, capsys):
        code, out, _ = run_cli(capsys, ["stability", "--algorithms", "merge,uhs",
                                        "--trials", "100"])
        assert code == 0
        assert len(out.strip().split("\n")) == 2


class TestVerifyCommand:
    def test_fast_checks_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, ["verify", "--only", "build-cost,heap-invariants,differential,dynamic"]
        )
        assert code == 0
        for name in ("build-cost", "heap-invariants", "differential", "dynamic"):
            assert f"{name}: PASS" in out
        assert "FAIL" not in out

    def test_injected_fault_is_caught(self, capsys):
        code, out, _ = run_cli(
            capsys, ["verify", "--only", "heap-invariants", "--inject-fault"]
        )
        assert code == 1
        assert "heap-invariants: FAIL" in out
        # the fault switch must not leak into later runs
        assert heap_core._FAULT_SIFT_DOWN_BLIND_RIGHT is False
        code, out, _ = run_cli(capsys, ["verify", "--only", "heap-invariants"])
        assert code == 0 and "PASS" in out

    def test_unknown_check_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, ["verify", "--only", "nosuch"])
        assert code == 2


def test_no_subcommand_is_usage_error(capsys):
    assert main([]) == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "sort" in capsys.readouterr().out
