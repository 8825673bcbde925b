"""CLI behavior: reports, formats, exit codes, determinism, round trips."""

import json
import math
from fractions import Fraction

import numpy as np
import pytest

from resistnet import assemble_laplacian, build_network
from resistnet.cli import (
    main,
    network_to_json,
    parse_network_json,
    parse_network_text,
)
from resistnet.exact import FREE_5X4


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run_cli(capsys, argv)
    return code, json.loads(out)


def test_lattice_both_mode(capsys):
    code, report = run_json(
        capsys,
        [
            "lattice", "--bc", "free", "--dims", "5x4",
            "--r", "1", "--s", "1",
            "--from", "0,0", "--to", "3,3", "--mode", "both",
        ],
    )
    assert code == 0
    assert report["method"] == "closed-form+oracle"
    assert Fraction(report["value_exact"]) == FREE_5X4
    assert report["value_float"] == pytest.approx(float(FREE_5X4), rel=1e-12)
    assert report["discrepancy"] <= 1e-9
    assert report["spec"]["bc"] == "free2d"


def test_lattice_one_dimensional(capsys):
    code, report = run_json(
        capsys,
        ["lattice", "--bc", "periodic", "--dims", "6", "--from", "1", "--to", "4",
         "--mode", "float"],
    )
    assert code == 0
    assert report["value_float"] == pytest.approx(1.5)


def test_graph_from_file(capsys, tmp_path):
    path = tmp_path / "net.json"
    path.write_text(json.dumps({
        "nodes": 4,
        "edges": [[0, 1, 1], [1, 2, 1], [2, 3, 1], [3, 0, 1], [1, 3, 2]],
    }))
    code, report = run_json(
        capsys,
        ["graph", "--input", str(path), "--from", "0", "--to", "2",
         "--mode", "both"],
    )
    assert code == 0
    assert Fraction(report["value_exact"]) == 1
    assert report["value_float"] == pytest.approx(1.0, rel=1e-12)


def test_graph_from_text_file(capsys, tmp_path):
    path = tmp_path / "net.txt"
    path.write_text("# a single resistor\n0 1 3/2\n")
    code, report = run_json(
        capsys,
        ["graph", "--input", str(path), "--from", "0", "--to", "1",
         "--mode", "exact"],
    )
    assert code == 0
    assert Fraction(report["value_exact"]) == Fraction(3, 2)


def test_identity_product(capsys):
    code, report = run_json(
        capsys,
        ["identity", "--which", "product-periodic", "--N", "1", "--lambda", "1.0"],
    )
    assert code == 0
    assert report["lhs"] == pytest.approx(math.cosh(1.0) - 1, rel=1e-14)
    assert report["rhs"] == pytest.approx(math.cosh(1.0) - 1, rel=1e-14)


def test_identity_sum(capsys):
    code, report = run_json(
        capsys,
        ["identity", "--which", "i1", "--N", "8", "--ell", "0", "--lambda", "1.0"],
    )
    assert code == 0
    assert abs(report["closed"] - report["direct"]) <= 1e-12


def test_infinite_command(capsys):
    code, report = run_json(capsys, ["infinite", "--delta", "1,0"])
    assert code == 0
    assert report["value_float"] == pytest.approx(0.5, abs=1e-8)


def test_reproduce_passes_and_is_byte_stable(capsys):
    code1, out1 = run_cli(capsys, ["reproduce"])
    code2, out2 = run_cli(capsys, ["reproduce"])
    assert code1 == code2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert report["passed"] is True
    assert all(row["passed"] for row in report["rows"])


def test_identical_requests_identical_bytes(capsys):
    argv = ["lattice", "--bc", "klein", "--dims", "5x4", "--from", "0,0",
            "--to", "3,3", "--mode", "both"]
    _, out1 = run_cli(capsys, argv)
    _, out2 = run_cli(capsys, argv)
    assert out1 == out2


def test_csv_and_text_formats(capsys):
    code, out = run_cli(
        capsys,
        ["lattice", "--bc", "free", "--dims", "5x4", "--from", "0,0",
         "--to", "3,3", "--format", "csv"],
    )
    assert code == 0
    header, row = out.strip().split("\n")
    assert "value_float" in header
    assert "1.70786" in row

    code, out = run_cli(
        capsys,
        ["lattice", "--bc", "free", "--dims", "5x4", "--from", "0,0",
         "--to", "3,3", "--format", "text"],
    )
    assert code == 0
    assert "value_float: 1.70786" in out


def test_exit_code_parse_error(capsys):
    code, report = run_json(
        capsys, ["graph", "--inline", "{bad json", "--from", "0", "--to", "1"]
    )
    assert code == 2
    assert report["error"]["type"] == "ParseError"


def test_exit_code_disconnected(capsys):
    code, report = run_json(
        capsys,
        ["graph", "--inline", '{"nodes": 4, "edges": [[0,1,1],[2,3,1]]}',
         "--from", "0", "--to", "3"],
    )
    assert code == 3
    assert report["error"]["type"] == "DisconnectedNetworkError"


def test_exit_code_range_error(capsys):
    code, report = run_json(
        capsys,
        ["graph", "--inline", '{"nodes": 2, "edges": [[0,1,1]]}',
         "--from", "0", "--to", "7"],
    )
    assert code == 4
    code, report = run_json(
        capsys,
        ["lattice", "--bc", "free", "--dims", "4x4", "--from", "0,0",
         "--to", "9,0"],
    )
    assert code == 4


def test_tolerance_env_var_gates_both_mode(capsys, monkeypatch):
    argv = ["graph", "--inline", '{"nodes": 3, "edges": [[0,1,3],[1,2,5],[0,2,2]]}',
            "--from", "0", "--to", "2", "--mode", "both"]
    monkeypatch.setenv("RESISTNET_TOL", "1e-30")
    code, report = run_json(capsys, argv)
    assert code == 5  # any float rounding now exceeds the tolerance
    assert report["discrepancy"] > 0.0
    monkeypatch.setenv("RESISTNET_TOL", "1e-6")
    code, report = run_json(capsys, argv)
    assert code == 0
    monkeypatch.delenv("RESISTNET_TOL")
    code, _ = run_json(capsys, argv)
    assert code == 0


def test_exact_mode_rejects_float_literals(capsys):
    code, report = run_json(
        capsys,
        ["graph", "--inline", '{"nodes": 2, "edges": [[0,1,0.25]]}',
         "--from", "0", "--to", "1", "--mode", "exact"],
    )
    assert code == 2
    # float mode accepts the same input
    code, _ = run_json(
        capsys,
        ["graph", "--inline", '{"nodes": 2, "edges": [[0,1,0.25]]}',
         "--from", "0", "--to", "1"],
    )
    assert code == 0


def test_network_json_round_trip():
    net = build_network(
        3, [(0, 1, Fraction(2, 3)), (1, 2, 4), (0, 2, 0.25), (0, 1, Fraction(2, 3))]
    )
    restored = parse_network_json(network_to_json(net))
    assert restored.n_nodes == net.n_nodes
    assert np.array_equal(
        assemble_laplacian(restored).matrix, assemble_laplacian(net).matrix
    )


def test_network_text_parsing():
    net = parse_network_text("0 1 2\n1 2 1/2  # bridge\n\n# done\n")
    assert net.n_nodes == 3
    assert net.edges[1][2] == Fraction(1, 2)
