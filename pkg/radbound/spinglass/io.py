"""
Plain-text grid model format.

    rows cols
    theta_i for grid row 0 (cols values)
    ...
    theta_i for grid row rows-1
    i j theta_ij        (one line per grid edge, i < j)

Floats are written with repr() so a dump/load cycle is exact. Blank lines
and lines starting with '#' are ignored.
"""

from pathlib import Path

import numpy as np

from radbound.errors.exceptions import ParseError
from radbound.spinglass.model import GridIsingModel


def dumps(model: GridIsingModel) -> str:
    lines = [f"{model.rows} {model.cols}"]
    for row in model.fields:
        lines.append(" ".join(repr(float(value)) for value in row))
    for i, j, theta in model.edges():
        lines.append(f"{i} {j} {theta!r}")
    return "\n".join(lines) + "\n"


def _float(token: str, line_number: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"Not a number: {token!r}", line_number=line_number)


def _int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"Not an integer: {token!r}", line_number=line_number)


def loads(text: str) -> GridIsingModel:
    lines = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("Empty model file")

    header_line, header = lines[0]
    if len(header) != 2:
        raise ParseError("Header must be 'rows cols'", line_number=header_line)
    rows, cols = (_int(token, header_line) for token in header)
    if rows < 1 or cols < 1:
        raise ParseError("Grid must be at least 1x1", line_number=header_line)

    field_lines = lines[1 : 1 + rows]
    if len(field_lines) < rows:
        raise ParseError(f"Expected {rows} rows of local fields")
    fields = np.empty((rows, cols))
    for r, (number, tokens) in enumerate(field_lines):
        if len(tokens) != cols:
            raise ParseError(
                f"Expected {cols} field values, got {len(tokens)}", line_number=number
            )
        fields[r] = [_float(token, number) for token in tokens]

    horizontal = np.full((rows, cols - 1), np.nan)
    vertical = np.full((rows - 1, cols), np.nan)
    for number, tokens in lines[1 + rows :]:
        if len(tokens) != 3:
            raise ParseError("Edge line must be 'i j theta'", line_number=number)
        i, j = _int(tokens[0], number), _int(tokens[1], number)
        theta = _float(tokens[2], number)
        if not 0 <= i < j < rows * cols:
            raise ParseError(f"Invalid edge ({i}, {j})", line_number=number)
        r, c = divmod(i, cols)
        if j == i + 1 and c + 1 < cols:
            target, index = horizontal, (r, c)
        elif j == i + cols:
            target, index = vertical, (r, c)
        else:
            raise ParseError(f"({i}, {j}) is not a grid edge", line_number=number)
        if not np.isnan(target[index]):
            raise ParseError(f"Duplicate edge ({i}, {j})", line_number=number)
        target[index] = theta

    if np.isnan(horizontal).any() or np.isnan(vertical).any():
        raise ParseError("Edge list does not cover every grid edge")
    return GridIsingModel(fields, horizontal, vertical)


def save(model: GridIsingModel, path: str | Path) -> None:
    Path(path).write_text(dumps(model), encoding="utf-8")


def load(path: str | Path) -> GridIsingModel:
    return loads(Path(path).read_text(encoding="utf-8"))
