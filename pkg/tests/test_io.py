import numpy as np
import pytest

from submaj.errors import ParseError
from submaj.graphs import Graph
from submaj.io import (
    format_edge_list,
    format_matrix,
    format_repro,
    parse_edge_list,
    parse_matrix,
    parse_repro,
    read_matrix,
    write_matrix,
)


def test_parse_matrix_with_comments():
    text = "# header comment\n2 2\n1 2  # trailing\n\n3 4.5e-1\n"
    np.testing.assert_array_equal(parse_matrix(text), [[1.0, 2.0], [3.0, 0.45]])


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2\n1 2\n",
        "2 2\n1 2\n",
        "1 2\n1 2 3\n",
        "1 1\nabc\n",
        "1 1\n1\n2\n",
        "-1 2\n",
    ],
)
def test_parse_matrix_errors(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_matrix_roundtrip_is_exact(tmp_path):
    a = np.random.default_rng(0).standard_normal((4, 3)) * 10.0 ** np.arange(-6, 6, 1).reshape(4, 3)
    path = tmp_path / "m.txt"
    write_matrix(path, a)
    assert np.array_equal(read_matrix(path), a)


def test_format_matrix_human_digits():
    assert format_matrix(np.array([[1 / 3]]), digits=6) == "1 1\n0.333333\n"


def test_missing_file_is_parse_error(tmp_path):
    with pytest.raises(ParseError):
        read_matrix(tmp_path / "absent.txt")


def test_edge_list_canonicalized():
    g = parse_edge_list("4 3\n1 2\n3 2\n1 4\n")
    assert g.edges == ((2, 1), (3, 2), (4, 1))
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize("text", ["4 2\n1 2\n", "3 1\n1 1\n", "3 1\n1 5\n", "3 2\n1 2\n2 1\n", "x y\n"])
def test_edge_list_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_edge_errors_name_the_problem():
    with pytest.raises(ParseError, match="self-loop"):
        parse_edge_list("3 1\n1 1\n")


def test_repro_roundtrip():
    header = {"theorem": "THM-2-1", "seed": 3, "trial": 17, "margin": -0.125}
    inst = {
        "A": np.array([[1.0, 0.1], [0.1, 2.0]]),
        "x": np.array([0.5, -0.25, 1e-300]),
        "G": Graph.from_edges(3, [(1, 2)]),
        "k": 2,
    }
    h, i = parse_repro(format_repro(header, inst))
    assert h == header
    assert np.array_equal(i["A"], inst["A"])
    assert np.array_equal(i["x"].ravel(), inst["x"])
    assert i["G"] == inst["G"] and i["k"] == 2


def test_repro_requires_end():
    with pytest.raises(ParseError):
        parse_repro("theorem THM-2-1\n")
