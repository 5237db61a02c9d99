"""Plain-text file formats.

Matrix file::

    # comment
    rows cols
    a11 a12 ...
    ...

Edge-list file: header ``n m`` followed by ``m`` lines ``i j`` (1-based,
any order; canonicalized on load).

Reproduction file: a header of ``key value`` lines followed by ``matrix``,
``graph`` and ``param`` blocks, written when a theorem check fails so the
instance can be replayed exactly.
"""

from pathlib import Path

import numpy as np

from .errors import InputError, ParseError
from .graphs import Graph

__all__ = [
    "fmt",
    "format_matrix",
    "parse_matrix",
    "read_matrix",
    "write_matrix",
    "format_edge_list",
    "parse_edge_list",
    "read_edge_list",
    "format_repro",
    "parse_repro",
    "write_repro",
    "read_repro",
]


def fmt(x, digits=17):
    """Format a float with ``digits`` significant digits."""
    return format(float(x), f".{digits}g")


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(line, lineno, count, what):
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"line {lineno}: expected {count} integers for {what}, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers for {what}, got {line!r}") from None


def _matrix_from_lines(lines, source):
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(f"{source}: empty matrix input") from None
    rows, cols = _ints(header, lineno, 2, "the 'rows cols' header")
    if rows < 1 or cols < 1:
        raise ParseError(f"{source}: matrix dimensions must be positive, got {rows}x{cols}")
    data = np.empty((rows, cols))
    for r in range(rows):
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise ParseError(f"{source}: expected {rows} rows, found {r}") from None
        parts = line.split()
        if len(parts) != cols:
            raise ParseError(f"{source} line {lineno}: expected {cols} entries, got {len(parts)}")
        try:
            data[r] = [float(p) for p in parts]
        except ValueError:
            raise ParseError(f"{source} line {lineno}: non-numeric entry in {line!r}") from None
    if not np.all(np.isfinite(data)):
        raise ParseError(f"{source}: matrix has NaN or infinite entries")
    return data


def parse_matrix(text, source="<matrix>"):
    lines = _content_lines(text)
    data = _matrix_from_lines(lines, source)
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(f"{source} line {extra[0]}: unexpected trailing data")
    return data


def format_matrix(a, digits=17):
    a = np.atleast_2d(np.asarray(a, dtype=float))
    rows = [f"{a.shape[0]} {a.shape[1]}"]
    rows += [" ".join(fmt(v, digits) for v in row) for row in a]
    return "\n".join(rows) + "\n"


def read_matrix(path):
    return parse_matrix(_read(path), str(path))


def write_matrix(path, a):
    Path(path).write_text(format_matrix(a))


def _edges_from_lines(lines, source):
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(f"{source}: empty edge list") from None
    n, m = _ints(header, lineno, 2, "the 'n m' header")
    edges = []
    for k in range(m):
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise ParseError(f"{source}: header announces {m} edges, found {k}") from None
        edges.append(tuple(_ints(line, lineno, 2, "an edge")))
    try:
        return Graph.from_edges(n, edges)
    except InputError as exc:
        raise ParseError(f"{source}: {exc}") from None


def parse_edge_list(text, source="<edges>"):
    lines = _content_lines(text)
    g = _edges_from_lines(lines, source)
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(f"{source} line {extra[0]}: more edges than the header announces")
    return g


def format_edge_list(g):
    return "\n".join([f"{g.n} {g.m}"] + [f"{i} {j}" for i, j in g.edges]) + "\n"


def read_edge_list(path):
    return parse_edge_list(_read(path), str(path))


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def format_repro(header, instance):
    """Serialize a failing trial.

    ``header`` maps keys to scalars; ``instance`` maps names to 2-D arrays,
    1-D arrays (stored as columns), graphs or scalars.
    """
    out = ["# submaj reproduction file"]
    for key, value in header.items():
        out.append(f"{key} {fmt(value) if isinstance(value, float) else value}")
    for name, value in instance.items():
        if isinstance(value, Graph):
            out.append(f"graph {name}")
            out.append(format_edge_list(value).rstrip("\n"))
        elif isinstance(value, np.ndarray):
            arr = value.reshape(-1, 1) if value.ndim == 1 else value
            out.append(f"matrix {name}")
            out.append(format_matrix(arr).rstrip("\n"))
        else:
            out.append(f"param {name} {fmt(value) if isinstance(value, float) else value}")
    out.append("end")
    return "\n".join(out) + "\n"


def parse_repro(text, source="<repro>"):
    """Inverse of :func:`format_repro`; returns ``(header, instance)``."""
    header = {}
    instance = {}
    lines = _content_lines(text)
    for lineno, line in lines:
        key, _, rest = line.partition(" ")
        if key == "end":
            return header, instance
        if key == "matrix":
            instance[rest] = _matrix_from_lines(lines, f"{source} matrix {rest}")
        elif key == "graph":
            instance[rest] = _edges_from_lines(lines, f"{source} graph {rest}")
        elif key == "param":
            name, _, value = rest.partition(" ")
            instance[name] = _scalar(value)
        else:
            header[key] = _scalar(rest)
    raise ParseError(f"{source}: missing 'end' marker")


def _scalar(text):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


def write_repro(path, header, instance):
    Path(path).write_text(format_repro(header, instance))


def read_repro(path):
    return parse_repro(_read(path), str(path))
