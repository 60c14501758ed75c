"""ShapeFile reading and writing.

Format::

    # optional comments
    W H
    #..        <- H grid rows of W characters, '#' occupied, '.' empty
    E x1 y1 x2 y2
    V x y

A line starting with '#' is a grid row when it consists only of '#' and '.',
and a comment otherwise. Blank lines are ignored. Row 0 is the first row.
"""

from pathlib import Path

import charset_normalizer

from .cubical import CubicalSet, build_cubical_set
from .errors import InputError
from .types import Cell, Edge, Vertex
from .utils.logger import logger

GRID_CHARS = frozenset("#.")


def _is_comment(line: str) -> bool:
    return line.startswith("#") and not set(line) <= GRID_CHARS


def _ints(fields: list[str], count: int, line_no: int, what: str) -> list[int]:
    if len(fields) != count:
        raise InputError(f"{what} needs {count} integers, got {len(fields)}", line_no)
    try:
        return [int(f) for f in fields]
    except ValueError as e:
        raise InputError(f"{what} has a non-integer coordinate", line_no) from e


def parse_shape(text: str) -> CubicalSet:
    """
    Parse ShapeFile text into a normalized cubical set.

    Args:
        text: ShapeFile contents

    Returns:
        CubicalSet

    Raises:
        InputError: On a malformed header, a row of the wrong length or
            alphabet, a missing row, or an out-of-range or non-unit extra
    """
    width = height = None
    cells: list[Cell] = []
    edges: list[Edge] = []
    vertices: list[Vertex] = []
    row = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if width is None or height is None:
            if line.startswith("#"):
                continue
            width, height = _ints(line.split(), 2, line_no, "header")
            if width < 1 or height < 1:
                raise InputError(f"grid must be at least 1x1, got {width}x{height}", line_no)
            continue
        if _is_comment(line):
            continue
        if row < height:
            if not set(line) <= GRID_CHARS:
                raise InputError(f"expected grid row {row}, got {line!r}", line_no)
            if len(line) != width:
                raise InputError(f"row {row} has length {len(line)}, expected {width}", line_no)
            cells.extend((c, row) for c, ch in enumerate(line) if ch == "#")
            row += 1
            continue

        tag, *fields = line.split()
        if tag == "E":
            x1, y1, x2, y2 = _ints(fields, 4, line_no, "edge")
            for x, y in ((x1, y1), (x2, y2)):
                if not (0 <= x <= width and 0 <= y <= height):
                    raise InputError(f"edge vertex ({x},{y}) outside the grid", line_no)
            if abs(x1 - x2) + abs(y1 - y2) != 1:
                raise InputError("edge is not a unit lattice edge", line_no)
            edges.append(((x1, y1), (x2, y2)))
        elif tag == "V":
            x, y = _ints(fields, 2, line_no, "vertex")
            if not (0 <= x <= width and 0 <= y <= height):
                raise InputError(f"vertex ({x},{y}) outside the grid", line_no)
            vertices.append((x, y))
        else:
            raise InputError(f"unexpected line {line!r}", line_no)

    if width is None or height is None:
        raise InputError("missing header")
    if row < height:
        raise InputError(f"expected {height} grid rows, found {row}")
    return build_cubical_set(width, height, cells, edges, vertices)


def format_shape(cubical: CubicalSet) -> str:
    """Serialize a cubical set; parse_shape(format_shape(s)) == s."""
    lines = [f"{cubical.width} {cubical.height}"]
    for r in range(cubical.height):
        lines.append(
            "".join("#" if (c, r) in cubical.cells else "." for c in range(cubical.width))
        )
    for (x1, y1), (x2, y2) in sorted(cubical.extra_edges):
        lines.append(f"E {x1} {y1} {x2} {y2}")
    for x, y in sorted(cubical.extra_vertices):
        lines.append(f"V {x} {y}")
    return "\n".join(lines) + "\n"


def read_shape_text(file_path: Path) -> str:
    """
    Read a ShapeFile, detecting its encoding.

    Raises:
        InputError: If the file cannot be read or decoded
    """
    try:
        raw = file_path.read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {file_path}: {e}") from e
    result = charset_normalizer.from_bytes(raw).best()
    if result is None:
        logger.warning(f"Could not detect encoding of {file_path}, assuming utf-8")
        try:
            return raw.decode("utf-8")
        except UnicodeDecodeError as e:
            raise InputError(f"{file_path} is not text") from e
    logger.debug(f"Detected encoding: {result.encoding}")
    return str(result)


def read_shape(file_path: Path) -> tuple[CubicalSet, str]:
    """Read and parse a ShapeFile; also return the text for digesting."""
    text = read_shape_text(file_path)
    return parse_shape(text), text
