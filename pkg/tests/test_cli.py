import json
import subprocess
import sys

import pytest

from chemindex import cli
from chemindex.graphs import cycle_graph, format_edge_list


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_indices_by_name(capsys):
    code, out, err = run(capsys, "indices", "--name", "Octane")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "name,n,m,mu,tau,degrees,J,EE,RVa,RVb"
    assert lines[1].startswith("Octane,8,7,0,0,2-2-2-2-2-2-1-1,2.53006,")


def test_indices_from_edge_file(capsys, tmp_path):
    path = tmp_path / "c5.edges"
    path.write_text("# five-cycle\n" + format_edge_list(cycle_graph(5)))
    code, out, _ = run(capsys, "indices", "--edges", str(path))
    assert code == 0
    assert "edges-1,5,5,1,0,2-2-2-2-2,2.08333,2.29924,2.29924,2.29924" in out


def test_indices_requires_a_source(capsys):
    code, _, err = run(capsys, "indices")
    assert code == 1
    assert "error:" in err


def test_indices_json_format(capsys):
    code, out, _ = run(capsys, "indices", "--name", "Nonane", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["rows"][0]["n"] == 9


def test_missing_edge_file(capsys):
    code, _, err = run(capsys, "indices", "--edges", "/no/such/file")
    assert code == 1
    assert "cannot read" in err


def test_enumerate_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--alkanes", "8")
    assert code == 0
    assert len(out.splitlines()) == 19  # header + 18 rows

    code, out, _ = run(capsys, "enumerate", "--cyclic", "6", "--complete")
    assert code == 0
    assert len(out.splitlines()) == 70


def test_usage_errors_exit_one():
    # includes the mutually exclusive enumerate flags; argparse errors
    # leave through SystemExit, remapped from 2 to 1
    for argv in (
        ["enumerate"],
        ["enumerate", "--alkanes", "8", "--cyclic", "5"],
        ["rank", "--alkanes", "8", "--index", "XX"],
    ):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 1, argv


def test_parse_name_text_and_exit_codes(capsys):
    code, out, _ = run(capsys, "parse-name", "Isooctane", "--show-edges")
    assert code == 0
    assert out.splitlines()[0].startswith("ok\tIsooctane\tn=8")
    assert "8 7" in out

    code, out, _ = run(capsys, "parse-name", "Octane", "2-Bogusane")
    assert code == 1
    assert "fail\t2-Bogusane" in out


def test_parse_name_from_file(capsys, tmp_path):
    names = tmp_path / "names.txt"
    names.write_text("# two names\nOctane\n2-Methylheptane\n")
    code, out, _ = run(capsys, "parse-name", "--names", str(names))
    assert code == 0
    assert len(out.splitlines()) == 2


def test_rank_output(capsys):
    code, out, _ = run(
        capsys,
        "rank", "--name", "Octane", "--name", "2-Methylheptane", "--index", "J",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "position,name,J"
    assert lines[1].startswith('1,"Octane"')


def test_correlate_output(capsys):
    code, out, _ = run(capsys, "correlate", "--cyclic", "5", "--digits", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x,y,r_squared"
    assert len(lines) == 7


def test_degeneracy_output(capsys):
    code, out, _ = run(capsys, "degeneracy", "--alkanes", "9", "--index", "EE")
    assert code == 0
    assert len(out.splitlines()) == 5
    assert all(" | " in line for line in out.splitlines())

    code, out, _ = run(capsys, "degeneracy", "--alkanes", "8", "--index", "RVb")
    assert code == 0
    assert "no RVb ties" in out


def test_cospectral_output(capsys):
    code, out, _ = run(capsys, "cospectral", "--alkanes", "10")
    assert code == 0
    assert len(out.splitlines()) == 2


def test_plot_writes_svg(capsys, tmp_path):
    target = tmp_path / "scatter.svg"
    code, out, _ = run(
        capsys, "plot", "--cyclic", "5", "--x", "EE", "--y", "RVa",
        "--out", str(target),
    )
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("<svg ")


def test_reproduce_ok(capsys):
    code, out, _ = run(capsys, "reproduce", "--tables", "4")
    assert code == 0
    assert "overall: OK" in out


def test_reproduce_mismatch_exits_two(capsys, monkeypatch):
    monkeypatch.setattr(
        cli,
        "_request",
        lambda *a, **k: {"ok": False, "text": "overall: MISMATCHES FOUND", "tables": []},
    )
    code, out, _ = run(capsys, "reproduce")
    assert code == 2
    assert "MISMATCHES" in out


def test_reproduce_rejects_garbage_tables(capsys):
    code, _, err = run(capsys, "reproduce", "--tables", "one,two")
    assert code == 1
    assert "bad --tables" in err


def test_ron_output(capsys):
    code, out, _ = run(capsys, "ron", "--digits", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,slope,intercept,r_squared,count"
    assert lines[1] == "J,100.9301,-257.5058,0.8691,17"


def test_unreachable_url_is_an_input_error(capsys):
    code, _, err = run(
        capsys, "indices", "--name", "Octane", "--url", "http://127.0.0.1:9"
    )
    assert code == 1
    assert "cannot reach" in err


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chemindex.cli", "indices", "--name", "Octane"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert "Octane,8,7" in proc.stdout
