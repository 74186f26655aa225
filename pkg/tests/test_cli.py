"""Command-line interface: subcommands, formats, exit codes."""

import json
import os

import pytest

from gqcensus.cli import main
from gqcensus.graphs import Graph, decode_graph6, encode_graph6
from gqcensus.voltage import cyclic_voltage


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_graph6(capsys):
    code, out, _ = run(capsys, "construct", "gp", "8", "3")
    assert code == 0
    g = decode_graph6(out.strip())
    assert g.n == 16 and g.degree(0) == 3


def test_construct_json(capsys):
    code, out, _ = run(capsys, "construct", "kxy", "4", "2", "--format", "json")
    assert code == 0
    g = Graph.from_json(out)
    assert g.n == 8 and g.degree(0) == 6


def test_construct_errors(capsys):
    code, _, err = run(capsys, "construct", "nosuch")
    assert code == 2 and "unknown family" in err
    code, _, err = run(capsys, "construct", "gp", "4", "2")
    assert code == 2  # r = n/2 rejected by the constructor


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["census", "--dedup", "bogus"])
    assert exc.value.code == 1


def test_check_report_and_iso(tmp_path, capsys):
    x1 = tmp_path / "x1.g6"
    gp = tmp_path / "gp.g6"
    assert main(["construct", "x1", "3", "--out", str(x1)]) == 0
    assert main(["construct", "gp", "8", "3", "--out", str(gp)]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "check", str(x1), "--iso", str(gp))
    assert code == 0
    report = json.loads(out)
    assert report["iso_to"] is True
    assert report["aut_order"] == 96
    assert report["two_arc_transitive"] is True
    assert report["2_distance_transitive"] is True


def test_check_gp72_not_arc_transitive(tmp_path, capsys):
    path = tmp_path / "gp72.g6"
    assert main(["construct", "gp", "7", "2", "--out", str(path)]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    assert json.loads(out)["arc_transitive"] is False


def test_check_c4_two_distance_transitive(tmp_path, capsys):
    path = tmp_path / "c4.g6"
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    path.write_text(encode_graph6(c4) + "\n")
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    report = json.loads(out)
    assert report["diameter"] == 2
    assert report["2_distance_transitive"] is True


def test_check_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.g6"
    bad.write_text("C~\x01\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "byte" in err


def test_census_cli_and_figures(tmp_path, capsys):
    out_csv = tmp_path / "census.csv"
    code, _, err = run(capsys, "census", "--n", "2", "--out", str(out_csv))
    assert code == 0
    lines = out_csv.read_text().splitlines()
    assert lines[0].startswith("n,setsize,set")
    assert len(lines) == 9  # header + 8 candidates
    assert "unmatched=0" in err
    pngs = [p for p in os.listdir(tmp_path) if p.endswith(".png")]
    assert len(pngs) == 3


def test_census_cli_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["census", "--n", "2", "--n", "3", "--dedup", "aut",
                 "--out", str(a), "--no-figures"]) == 0
    assert main(["census", "--n", "2", "--n", "3", "--dedup", "aut",
                 "--out", str(b), "--no-figures"]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_quotient_and_cover_roundtrip(tmp_path, capsys):
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    base = tmp_path / "c4.g6"
    base.write_text(encode_graph6(c4) + "\n")
    volt = tmp_path / "volt.json"
    volt.write_text(cyclic_voltage(c4, 2, {(3, 0): 1}).to_json())
    code, out, _ = run(capsys, "cover", str(base), str(volt), "--group-order", "2")
    assert code == 0
    cover = decode_graph6(out.strip())
    assert cover.n == 8 and cover.girth() == 8  # C_8
    # quotient the cover back down by the deck transformation (u,g) -> (u,g+1)
    perm = tmp_path / "perm.json"
    perm.write_text(json.dumps([x ^ 1 for x in range(8)]))
    cov_file = tmp_path / "cover.g6"
    cov_file.write_text(out)
    code, out2, _ = run(capsys, "quotient", str(cov_file), str(perm))
    assert code == 0
    assert decode_graph6(out2.strip()).n == 4


def test_quotient_rejects_non_automorphism(tmp_path, capsys):
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    base = tmp_path / "c4.g6"
    base.write_text(encode_graph6(c4) + "\n")
    perm = tmp_path / "perm.json"
    perm.write_text("[1,0,2,3]")
    code, _, err = run(capsys, "quotient", str(base), str(perm))
    assert code == 2


def test_aut_command(tmp_path, capsys):
    path = tmp_path / "k42.g6"
    assert main(["construct", "kxy", "4", "2", "--out", str(path)]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "aut", str(path))
    assert code == 0
    cert = json.loads(out)
    assert cert["order"] == 384
    assert cert["pair_orbit_counts"] == {"1": 1, "2": 1}
