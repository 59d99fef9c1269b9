import io
import json

import pytest

from holeforge.cli import main
from holeforge.graph6 import write_graph6
from holeforge.graphs import (
    antihole,
    complete,
    cycle,
    grotzsch,
    line_graph,
    path,
)


def _json_rows(capsys):
    out = capsys.readouterr().out
    return [json.loads(line) for line in out.strip().splitlines()]


def test_analyze_inline_json(capsys):
    assert main(["analyze", "-g", write_graph6(complete(5)), "--format", "json"]) == 0
    (row,) = _json_rows(capsys)
    assert row["schema"] == "holeforge/1"
    assert (row["omega"], row["chi"], row["alpha"], row["theta"]) == (5, 5, 1, 1)
    assert (row["n"], row["m"], row["index"]) == (5, 10, 0)


def test_classify_output_is_byte_stable(tmp_path, capsys):
    f = tmp_path / "graphs.g6"
    f.write_text(
        "\n".join(write_graph6(g) for g in (cycle(6), complete(4), antihole(7)))
        + "\n"
    )
    assert main(["classify", str(f), "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["classify", str(f), "--format", "json"]) == 0
    assert capsys.readouterr().out == first
    rows = [json.loads(line) for line in first.strip().splitlines()]
    assert rows[0]["long_hole_free"] is False
    assert rows[1]["chordal"] is True and rows[1]["perfect"] is True
    assert rows[2]["long_hole_free"] is True and rows[2]["perfect"] is False
    for line in first.strip().splitlines():
        keys = list(json.loads(line))
        assert keys == sorted(keys)


def test_color_verify_column(tmp_path, capsys):
    f = tmp_path / "lhf.g6"
    f.write_text(
        "\n".join(
            write_graph6(g) for g in (complete(4), cycle(4), antihole(7))
        )
        + "\n"
    )
    assert main(["color", str(f), "--verify", "--format", "json"]) == 0
    rows = _json_rows(capsys)
    assert len(rows) == 3
    assert all(row["proper"] is True for row in rows)
    assert all(row["colors_used"] <= row["palette_bound"] for row in rows)


def test_exit_code_input_error(capsys):
    assert main(["analyze", "-g", "!!"]) == 1
    assert "input error" in capsys.readouterr().err
    assert main(["analyze", "/nonexistent/path.g6"]) == 1
    capsys.readouterr()


def test_exit_code_limit(capsys):
    assert main(["nice", "-g", write_graph6(complete(6)), "--vcap", "5"]) == 2
    assert "limit reached" in capsys.readouterr().err
    assert (
        main(
            [
                "analyze",
                "-g",
                write_graph6(line_graph(complete(8))),
                "--timeout",
                "0.0001",
            ]
        )
        == 2
    )
    capsys.readouterr()


def test_exit_code_long_hole(capsys):
    c5 = write_graph6(cycle(5))
    assert main(["color", "-g", c5]) == 1
    assert main(["color", "-g", c5, "--trust"]) == 3
    assert "invariant violation" in capsys.readouterr().err
    # C_6 colors fine even under --trust: the steps happen to succeed
    assert main(["color", "-g", write_graph6(cycle(6)), "--trust"]) == 0
    capsys.readouterr()


def test_usage_errors_exit_1():
    with pytest.raises(SystemExit) as info:
        main(["analyze", "--no-such-flag"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 1


def test_tsv_header_and_rows(tmp_path, capsys):
    f = tmp_path / "two.g6"
    f.write_text(write_graph6(path(3)) + "\n" + write_graph6(complete(3)) + "\n")
    assert main(["analyze", str(f), "--format", "tsv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split("\t") == [
        "index",
        "graph6",
        "n",
        "m",
        "code",
        "omega",
        "chi",
        "alpha",
        "theta",
    ]
    assert len(lines) == 3
    assert lines[2].split("\t")[5] == "3"  # omega of the triangle


def test_chip_row(capsys):
    assert main(["chip", "-g", write_graph6(antihole(7)), "--format", "json"]) == 0
    (row,) = _json_rows(capsys)
    assert (row["chi_p"], row["lower"], row["upper"]) == (2, 2, 2)


def test_nice_row(capsys):
    assert main(["nice", "-g", write_graph6(grotzsch()), "--format", "json"]) == 0
    (row,) = _json_rows(capsys)
    assert row["nice"] is False
    assert row["witness"] == ",".join(str(v) for v in range(11))


def test_slack_row_with_odd_holes(capsys):
    g6 = write_graph6(cycle(5))
    assert main(["slack", "-g", g6, "--odd-holes", "--format", "json"]) == 0
    (row,) = _json_rows(capsys)
    assert row["slack"] == 1
    assert row["anticomplete_odd_holes"] == 1
    assert row["hole_family"] == "0,1,2,3,4"


def test_search_row(capsys):
    assert main(["search", "-g", write_graph6(cycle(4)), "--format", "json"]) == 0
    (row,) = _json_rows(capsys)
    assert row["bipartition_found"] is True
    assert row["chi_le_omega_sq"] is True
    assert sorted(row["side_a"].split(",") + row["side_b"].split(",")) == [
        "0",
        "1",
        "2",
        "3",
    ]


def test_search_f4(capsys):
    assert (
        main(
            [
                "search",
                "--f4",
                "--target-omega",
                "4",
                "--trials",
                "0",
                "--exhaustive-n",
                "4",
                "--format",
                "json",
            ]
        )
        == 0
    )
    (row,) = _json_rows(capsys)
    assert row["best_chi"] == 5
    assert row["witness_source"].startswith("join")
    assert row["graph6"]


def test_antichain_command(tmp_path, capsys):
    f = tmp_path / "chain.g6"
    f.write_text(
        "\n".join(write_graph6(cycle(k)) for k in range(3, 7)) + "\n"
    )
    assert main(["antichain", str(f), "--format", "json"]) == 0
    (row,) = _json_rows(capsys)
    assert row["is_antichain"] is True and row["count"] == 4

    f2 = tmp_path / "nested.g6"
    f2.write_text(write_graph6(path(3)) + "\n" + write_graph6(path(4)) + "\n")
    assert main(["antichain", str(f2), "--format", "json"]) == 0
    (row,) = _json_rows(capsys)
    assert row["is_antichain"] is False and row["offending"] == "0->1"


def test_repeated_inline_graphs(capsys):
    # -g must accumulate, not keep the last occurrence only
    argv = ["antichain", "--format", "json"]
    for k in range(3, 7):
        argv += ["-g", write_graph6(cycle(k))]
    assert main(argv) == 0
    (row,) = _json_rows(capsys)
    assert row["is_antichain"] is True and row["count"] == 4

    assert main(["analyze", "-g", "Dhc", "-g", "D~{", "--format", "json"]) == 0
    rows = _json_rows(capsys)
    assert [r["index"] for r in rows] == [0, 1]
    assert [r["chi"] for r in rows] == [3, 5]


def test_corpus_deterministic(capsys):
    argv = ["corpus", "--kind", "random_chordal", "--count", "5", "--seed", "9"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    assert len(first.strip().splitlines()) == 5

    assert main(["corpus", "--kind", "exhaustive", "--n", "4"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 11


def test_convert_round_trip(tmp_path, capsys):
    g = antihole(7)
    assert main(["convert", "-g", write_graph6(g), "--to", "edges"]) == 0
    edges_text = capsys.readouterr().out
    f = tmp_path / "g.edges"
    f.write_text(edges_text)
    assert main(["convert", str(f), "--source", "edges", "--to", "graph6"]) == 0
    assert capsys.readouterr().out.strip() == write_graph6(g)


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr(
        "sys.stdin", io.StringIO(write_graph6(complete(3)) + "\n")
    )
    assert main(["analyze", "--format", "json"]) == 0
    (row,) = _json_rows(capsys)
    assert row["omega"] == 3


def test_jobs_match_serial(tmp_path, capsys):
    f = tmp_path / "many.g6"
    graphs = [cycle(4), complete(5), path(6), antihole(7), complete(2)] * 3
    f.write_text("\n".join(write_graph6(g) for g in graphs) + "\n")
    assert main(["analyze", str(f), "--format", "json", "--jobs", "1"]) == 0
    serial = capsys.readouterr().out
    assert main(["analyze", str(f), "--format", "json", "--jobs", "2"]) == 0
    assert capsys.readouterr().out == serial
