import json

import pytest

from ddhooks.v1 import verification
from ddhooks.v1.cli import build_parser, invocation, main
from ddhooks.v1.resources import IncompatibleStatistic

ALL_OF_TEN_CSV = ("t,size,class,stat,value,count,probability\n"
             "3,10,all,nt,0,2,1/21\n"
             "3,10,all,nt,1,18,3/7\n"
             "3,10,all,nt,2,21,1/2\n"
             "3,10,all,nt,3,1,1/42\n")


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ("DDHOOKS_PRECISION", "DDHOOKS_WORKERS", "DDHOOKS_ORACLE_LIMIT"):
        monkeypatch.delenv(name, raising=False)


def error_document(err: str) -> dict:
    return json.loads(err.strip().splitlines()[-1])


def test_all_partitions_of_ten_csv(capsys):
    assert main(["dist", "--t", "3", "--size", "10", "--class", "all", "--stat", "nt"]) == 0
    assert capsys.readouterr().out == ALL_OF_TEN_CSV


def test_doubled_distinct_of_twenty_json(capsys):
    assert main(["dist", "--t", "3", "--size", "20", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert [row["probability"] for row in document["rows"]] == ["1/5", "2/5", "1/5", "1/5"]
    assert document["invocation"].startswith("ddhooks dist ")
    assert "--class dd" in document["invocation"]
    assert "--size 20" in document["invocation"]


def test_summary_row(capsys):
    assert main(["dist", "--t", "3", "--size", "20", "--summary", "--format", "json"]) == 0
    (row,) = json.loads(capsys.readouterr().out)["rows"]
    assert row["mean"] == "12/5"
    assert row["variance"] == "26/25"
    assert row["total_count"] == 10
    assert row["mgf_plus"] is not None and row["kolmogorov"] is not None


def test_halves_doubles_the_sizes(capsys):
    assert main(["dist", "--t", "3", "--size", "10", "--halves", "--summary", "--format", "json"]) == 0
    (row,) = json.loads(capsys.readouterr().out)["rows"]
    assert row["size"] == 20
    assert row["class"] == "dd"


def test_output_file(tmp_path, capsys):
    out = tmp_path / "table.csv"
    assert main(["dist", "--t", "3", "--size", "10", "--class", "all", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert out.read_text(encoding="utf-8") == ALL_OF_TEN_CSV


def test_hooks(capsys):
    assert main(["hooks", "--partition", "5", "4", "1", "--t", "3", "--format", "json"]) == 0
    (row,) = json.loads(capsys.readouterr().out)["rows"]
    assert row["hooks"] == [[7, 5, 4, 3, 1], [5, 3, 2, 1], [1]]
    assert row["shifted_hooks"] == [[9, 6, 5, 3, 2], [5, 4, 2, 1], [1]]
    assert (row["n_t"], row["nhat_t"], row["s_t"]) == (2, 1, 1)


def test_hooks_csv_cells_are_compact_json(capsys):
    assert main(["hooks", "--partition", "2", "1"]) == 0
    header, line = capsys.readouterr().out.splitlines()
    assert header == "partition,size,hooks,t,shifted_hooks"
    assert line == '"[2,1]",3,"[[3,1],[1]]",,"[[3,2],[1]]"'


def test_decompose(capsys):
    assert main(["decompose", "--partition", "8", "7", "7", "4", "4", "2", "--t", "3", "--format", "json"]) == 0
    (row,) = json.loads(capsys.readouterr().out)["rows"]
    assert row["frobenius_top"] == [7, 5, 4, 0]
    assert row["frobenius_bottom"] == [5, 4, 2, 1]
    assert row["charges"] == [-1, 0, 1]
    assert row["core"] == [3, 1, 1]
    assert row["quotient"] == [[2], [3, 3], [1]]
    assert row["dd_properties"] is None


def test_series(capsys):
    assert main(["series", "--gen", "F", "--t", "3", "--order", "20", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert len(rows) == 21
    assert rows[20]["coefficient"] == ["0/1", "2/1", "4/1", "2/1", "2/1"]


def test_specialized_series(capsys):
    assert main(["series", "--gen", "han", "--t", "3", "--order", "10", "--x", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "gen,t,x,m,coefficient"
    assert lines[-1] == "han,3,1/1,10,42/1"


def test_moments(capsys):
    assert main(["moments", "--t", "3", "--n", "10", "--format", "json"]) == 0
    (row,) = json.loads(capsys.readouterr().out)["rows"]
    assert row["exact_mean"] == "12/5"


def test_asymp(capsys):
    assert main(["asymp", "--t", "1", "--n", "10", "40", "--x", "9/10"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "t,n,x,exact,estimate,log_ratio"
    assert [line.split(",")[1] for line in lines[1:]] == ["10", "40"]


def test_verify(capsys):
    assert main(["verify", "--sweep", "parity", "--max-size", "6", "--max-t", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "sweep,t,max_size,checks,mismatches"
    assert [line.split(",")[-1] for line in lines[1:]] == ["0", "0"]


def test_incompatible_statistic_exit_code(capsys):
    assert main(["dist", "--t", "3", "--size", "10", "--class", "all", "--stat", "nhat"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    document = error_document(captured.err)
    assert document["code"] == "incompatible_statistic"
    assert set(document) == {"code", "message", "context"}


def test_hypothesis_exit_code(capsys):
    assert main(["asymp", "--t", "3", "--n", "10", "--x", "1/2", "--strict"]) == 2
    assert error_document(capsys.readouterr().err)["code"] == "hypothesis_violated"


def test_verification_exit_code(monkeypatch, capsys):
    def broken(t, max_size):
        tally = verification._Tally("parity", t)
        tally.expect("always", False)
        return tally

    monkeypatch.setitem(verification._CELLS, "parity", broken)
    assert main(["verify", "--sweep", "parity", "--max-size", "4", "--max-t", "1"]) == 3
    assert error_document(capsys.readouterr().err)["code"] == "verification_failed"


@pytest.mark.parametrize("argv", [
    ["dist", "--t", "3"],
    ["dist", "--t", "3", "--size", "20", "--precision", "10"],
])
def test_invalid_argument_exit_code(argv, capsys):
    assert main(argv) == 1
    assert error_document(capsys.readouterr().err)["code"] == "invalid_argument"


def test_invalid_environment(monkeypatch, capsys):
    monkeypatch.setenv("DDHOOKS_WORKERS", "0")
    assert main(["hooks", "--partition", "1"]) == 1


def test_debug_reraises():
    with pytest.raises(IncompatibleStatistic):
        main(["dist", "--t", "3", "--size", "10", "--class", "all", "--stat", "nhat", "--debug"])


def test_parser_rejects_bad_choices():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["dist", "--t", "3", "--stat", "median"])
    with pytest.raises(SystemExit):
        build_parser().parse_args(["asymp", "--t", "1", "--n", "10", "--x", "one"])


def test_invocation_skips_output_flags():
    args = build_parser().parse_args(["asymp", "--t", "1", "--n", "10", "40", "--x", "0.9", "--out", "a.csv", "-v",
                                      "--threads", "4"])
    assert str(invocation(args)) == "ddhooks asymp --format csv --n 10 40 --t 1 --x 9/10"
