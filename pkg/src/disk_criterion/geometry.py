"""Exact integer predicates on points, segments and polylines."""

from collections.abc import Sequence

from .errors import InternalInvariantViolation
from .types import Point

Segment = tuple[Point, Point]


def is_left(p0: Point, p1: Point, p2: Point) -> int:
    """>0 if p2 is left of the line p0->p1, 0 if on it, <0 if right."""
    return (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1])


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """Whether p lies on the closed segment a-b."""
    if is_left(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(
        a[1], b[1]
    )


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Whether closed segments a-b and c-d share at least one point."""
    d1 = _sign(is_left(c, d, a))
    d2 = _sign(is_left(c, d, b))
    d3 = _sign(is_left(a, b, c))
    d4 = _sign(is_left(a, b, d))
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (
        (d1 == 0 and on_segment(a, c, d))
        or (d2 == 0 and on_segment(b, c, d))
        or (d3 == 0 and on_segment(c, a, b))
        or (d4 == 0 and on_segment(d, a, b))
    )


def polyline_segments(points: Sequence[Point], closed: bool = False) -> list[Segment]:
    segments = [(points[i], points[i + 1]) for i in range(len(points) - 1)]
    if closed and len(points) > 2:
        segments.append((points[-1], points[0]))
    return segments


def self_intersections(points: Sequence[Point], closed: bool = False) -> list[tuple[int, int]]:
    """
    Index pairs of segments that meet where an injective polyline must not.

    Consecutive segments may share only their common vertex; all other pairs
    must be disjoint.
    """
    segments = polyline_segments(points, closed)
    n = len(segments)
    bad: list[tuple[int, int]] = []
    for i, (a, b) in enumerate(segments):
        if a == b:
            bad.append((i, i))
    for i in range(n):
        a, b = segments[i]
        for j in range(i + 1, n):
            c, d = segments[j]
            if j == i + 1:
                # share b == c; fold-back is the only way to overlap
                if on_segment(d, a, b) or on_segment(a, c, d):
                    bad.append((i, j))
            elif closed and i == 0 and j == n - 1:
                # share a == d
                if on_segment(c, a, b) or on_segment(b, c, d):
                    bad.append((i, j))
            elif segments_intersect(a, b, c, d):
                bad.append((i, j))
    return bad


def audit_polyline(points: Sequence[Point], closed: bool = False, what: str = "arc") -> None:
    """
    Raise if a polyline is not injective (or not a simple closed curve).

    Raises:
        InternalInvariantViolation: On any self-intersection
    """
    if len(set(points)) != len(points):
        raise InternalInvariantViolation(f"{what} repeats a vertex")
    bad = self_intersections(points, closed)
    if bad:
        i, j = bad[0]
        raise InternalInvariantViolation(
            f"{what} self-intersects between segments {i} and {j}"
        )


def polylines_meet(p: Sequence[Point], q: Sequence[Point]) -> bool:
    """Whether two polylines (at least two points each) share any point."""
    return any(
        segments_intersect(a, b, c, d)
        for a, b in polyline_segments(p)
        for c, d in polyline_segments(q)
    )


def point_on_polyline(p: Point, points: Sequence[Point], closed: bool = False) -> bool:
    return any(on_segment(p, a, b) for a, b in polyline_segments(points, closed))


def crossing_parity(p: Point, polygon: Sequence[Point]) -> int:
    """
    Crossing-number test for a point off the polygon: 1 inside, 0 outside.

    Integer-exact: crossings are decided with is_left, and the half-open
    rule on y counts each polygon vertex once.
    """
    cn = 0
    n = len(polygon)
    for i in range(n):
        a = polygon[i]
        b = polygon[(i + 1) % n]
        if a[1] <= p[1] < b[1]:
            if is_left(a, b, p) > 0:
                cn += 1
        elif b[1] <= p[1] < a[1]:
            if is_left(a, b, p) < 0:
                cn += 1
    return cn % 2


def elementary_sides(a: Point, b: Point, step: int) -> list[Segment]:
    """
    Split an axis-parallel or slope +-1 segment into pieces of extent ``step``.

    Raises:
        InternalInvariantViolation: If the segment is not on the step lattice
    """
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx and dy and abs(dx) != abs(dy):
        raise InternalInvariantViolation(f"segment {a}->{b} is neither axis nor diagonal")
    extent = max(abs(dx), abs(dy))
    if extent % step or a[0] % step or a[1] % step:
        raise InternalInvariantViolation(f"segment {a}->{b} is off the {step}-lattice")
    sx = _sign(dx) * step
    sy = _sign(dy) * step
    sides: list[Segment] = []
    x, y = a
    for _ in range(extent // step):
        nxt = (x + sx, y + sy)
        sides.append(normalize_segment((x, y), nxt))
        x, y = nxt
    return sides


def normalize_segment(a: Point, b: Point) -> Segment:
    return (a, b) if a <= b else (b, a)

