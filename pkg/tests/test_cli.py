import json
import subprocess
import sys

import numpy as np
import pytest

from submaj import cli, report
from submaj.errors import NoConvergence
from submaj.io import read_matrix, write_matrix
from submaj.ritz import normalize_spectrum
from submaj.subspaces import principal_angles, projector_difference_singvals, subspace_from_columns
from submaj.verify import TheoremId, Trial, theorems

R2 = 2 ** -0.5


@pytest.fixture
def files(tmp_path):
    def put(name, a):
        path = tmp_path / name
        write_matrix(path, np.atleast_2d(np.asarray(a, dtype=float)))
        return str(path)

    def put_text(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    put.text = put_text
    put.dir = tmp_path
    return put


@pytest.fixture
def ritz_fixture(files):
    return (
        files("A.txt", np.diag([1.0, 2.0, 3.0])),
        files("X.txt", [[1, 0], [0, 0], [0, 1]]),
        files("Y.txt", [[1, 0], [0, R2], [0, R2]]),
    )


@pytest.fixture
def path_star(files):
    return (
        files.text("path.txt", "4 3\n2 1\n3 2\n4 3\n"),
        files.text("star.txt", "4 3\n2 1\n3 1\n4 1\n"),
    )


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_angles_identical(capsys, files):
    x = files("X.txt", np.random.default_rng(0).standard_normal((5, 2)))
    code, out, _ = run(capsys, "angles", "--json", x, x)
    assert code == 0
    np.testing.assert_allclose(json.loads(out)["angles"], [0.0, 0.0], atol=1e-15)


def test_angles_45_degrees(capsys, files):
    code, out, _ = run(capsys, "angles", files("a.txt", [[1], [0]]), files("b.txt", [[1], [1]]))
    assert code == 0
    assert "angles:  0.785398" in out


def test_angles_json_equals_library(capsys, files):
    rng = np.random.default_rng(1)
    bx, by = rng.standard_normal((9, 3)), rng.standard_normal((9, 3))
    x_path, y_path = files("X.txt", bx), files("Y.txt", by)
    code, out, _ = run(capsys, "angles", "--json", x_path, y_path)
    x = subspace_from_columns(read_matrix(x_path))
    y = subspace_from_columns(read_matrix(y_path))
    pdiff = projector_difference_singvals(x, y)
    expected = report.dumps(report.angles_payload(principal_angles(x, y), pdiff, pdiff.agrees(1e-8)))
    assert code == 0
    assert out == expected + "\n"


def test_ritz_fixture(capsys, ritz_fixture):
    code, out, _ = run(capsys, "ritz", *ritz_fixture)
    assert code == 0
    assert "|difference| sorted: 0.5 0.0" in out
    assert "1.41421 0.0" in out
    assert "verdict: holds" in out
    code, out, _ = run(capsys, "ritz", "--json", *ritz_fixture)
    data = json.loads(out)
    assert data["schema"] == 1 and data["holds"] is True
    assert data["margins"][0] == pytest.approx(0.91421, abs=1e-5)


def test_ritz_same_subspace(capsys, ritz_fixture):
    a, x, _ = ritz_fixture
    code, out, _ = run(capsys, "ritz", "--json", "--local-spread", a, x, x)
    assert code == 0
    assert json.loads(out)["lhs"] == [0.0, 0.0]


def test_ritz_asymmetric_input(capsys, files, ritz_fixture):
    _, x, y = ritz_fixture
    bad = files("bad.txt", [[1, 2, 0], [0, 1, 0], [0, 0, 1]])
    code, out, err = run(capsys, "ritz", bad, x, y)
    assert code == 2 and out == ""
    assert "AsymmetryExceedsTolerance" in err


def test_graph_compare_fixture(capsys, path_star):
    code, out, _ = run(capsys, "graph-compare", *path_star)
    assert code == 0
    assert out.rstrip("\n").splitlines()[-1] == "lhs=2.0 l=2 bound=8 holds"


def test_graph_compare_identical(capsys, path_star):
    code, out, _ = run(capsys, "graph-compare", "--json", path_star[0], path_star[0])
    assert code == 0
    data = json.loads(out)
    assert data["lhs"] == pytest.approx(0.0, abs=1e-12) and data["l"] == 0


def test_graph_compare_edge_count_mismatch(capsys, files, path_star):
    other = files.text("short.txt", "4 1\n2 1\n")
    code, _, err = run(capsys, "graph-compare", path_star[0], other)
    assert code == 2
    assert "EdgeCountMismatch" in err


def test_graph_compare_json_byte_stable(path_star):
    cmd = [sys.executable, "-m", "submaj", "graph-compare", "--json", *path_star]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["bound"] == 8


def test_dilate_roundtrip(capsys, files):
    a = np.random.default_rng(2).standard_normal((4, 4))
    a, _, _ = normalize_spectrum(a + a.T)
    src = files("A.txt", a)
    out_path = str(files.dir / "P.txt")
    code, out, _ = run(capsys, "dilate", "--json", "--out", out_path, src)
    assert code == 0
    data = json.loads(out)
    written = read_matrix(out_path)
    assert np.array_equal(written, np.array(data["projector"]))
    assert np.array_equal(written[:4, :4], 0.5 * (read_matrix(src) + read_matrix(src).T))


def test_dilate_half(capsys, files):
    out_path = str(files.dir / "P.txt")
    code, _, _ = run(capsys, "dilate", "--out", out_path, files("A.txt", [[0.5]]))
    assert code == 0
    np.testing.assert_allclose(read_matrix(out_path), 0.5 * np.ones((2, 2)), atol=1e-15)


def test_dilate_identity(capsys, files):
    code, out, _ = run(capsys, "dilate", "--json", files("I.txt", np.eye(2)))
    assert code == 0
    expected = np.zeros((4, 4))
    expected[:2, :2] = np.eye(2)
    np.testing.assert_allclose(json.loads(out)["projector"], expected, atol=1e-15)


def test_dilate_normalize_with_trial(capsys, files):
    src = files("A.txt", np.diag([1.0, 3.0]))
    code, _, err = run(capsys, "dilate", src)
    assert code == 2 and "SpectrumOutOfUnitInterval" in err
    trial = files("X.txt", [[1], [1]])
    code, out, _ = run(capsys, "dilate", "--json", "--normalize", "--trial", trial, src)
    assert code == 0
    data = json.loads(out)
    assert (data["shift"], data["scale"]) == (1.0, 0.5)
    np.testing.assert_allclose(np.array(data["projector"])[:2, :2], np.diag([0.0, 1.0]), atol=1e-15)
    assert data["ritz_check"]["max_deviation"] <= 1e-9


def test_dilate_normalize_multiple_of_identity(capsys, files):
    code, _, err = run(capsys, "dilate", "--normalize", files("c.txt", 2.0 * np.eye(3)))
    assert code == 2 and "ZeroSpread" in err


def test_verify_deterministic(capsys):
    argv = ["verify", "--theorems", "THM-3-3-SQ", "--trials", "100", "--seed", "7"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.startswith("THM-3-3-SQ trials=100 failures=0")


def test_verify_all_lists_every_theorem(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert [r["theorem"] for r in data["reports"]] == [t.value for t in TheoremId]


def test_verify_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SUBMAJ_SEED", "13")
    _, out, _ = run(capsys, "verify", "--theorems", "THM-2-1", "--trials", "3", "--json")
    assert json.loads(out)["reports"][0]["seed"] == 13
    _, out, _ = run(capsys, "verify", "--theorems", "THM-2-1", "--trials", "3", "--json", "--seed", "2")
    assert json.loads(out)["reports"][0]["seed"] == 2
    monkeypatch.setenv("SUBMAJ_SEED", "abc")
    code, _, _ = run(capsys, "verify", "--theorems", "THM-2-1", "--trials", "1")
    assert code == 2


def test_verify_unknown_theorem(capsys):
    code, _, err = run(capsys, "verify", "--theorems", "THM-0-0")
    assert code == 2 and "UnknownTheorem" in err


def test_verify_failure_exit_code_and_repro(capsys, monkeypatch, tmp_path):
    monkeypatch.setitem(theorems.REGISTRY, TheoremId.COR_2_2, lambda rng, n: Trial(-1.0, 0.0, {"n": n}))
    code, out, _ = run(
        capsys, "verify", "--theorems", "COR-2-2", "--trials", "2", "--repro-dir", str(tmp_path)
    )
    assert code == 1
    assert "failures=2" in out and "FAIL" in out
    assert sorted(p.name for p in tmp_path.iterdir()) == [
        "COR-2-2-seed0-trial0.txt",
        "COR-2-2-seed0-trial1.txt",
    ]


def test_numerical_failure_exit_code(capsys, monkeypatch, ritz_fixture):
    def boom(*args, **kwargs):
        raise NoConvergence("no convergence after 100 sweeps")

    monkeypatch.setattr(cli, "ritz_perturbation_check", boom)
    code, _, err = run(capsys, "ritz", *ritz_fixture)
    assert code == 3 and "NoConvergence" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["angles", "only-one.txt"],
        ["ritz", "--tol", "-1", "a", "b", "c"],
        ["verify", "--trials", "many"],
    ],
)
def test_usage_errors(capsys, argv):
    assert cli.main(argv) == 2


def test_missing_and_malformed_files(capsys, files):
    code, _, err = run(capsys, "angles", str(files.dir / "nope.txt"), str(files.dir / "nope.txt"))
    assert code == 2 and "ParseError" in err
    bad = files.text("bad.txt", "2 2\n1 x\n0 1\n")
    code, _, _ = run(capsys, "angles", bad, bad)
    assert code == 2


def test_help_exits_cleanly(capsys):
    assert cli.main(["--help"]) == 0
