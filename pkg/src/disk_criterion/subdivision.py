"""Triangulated half-cell pieces of the padded frame, for side flood fills.

Every arc the package builds runs along half-cell lattice lines or along the
vertex-to-centre diagonals of quarter cells. Splitting each quarter cell along
that diagonal gives open triangular pieces whose sides carry every possible
arc segment, so separation by arcs reduces to flood fill over pieces.
"""

from collections import deque
from collections.abc import Iterable
from functools import lru_cache

from .cubical import CubicalSet
from .geometry import Segment, normalize_segment
from .types import HALF, UNIT, Point, Region

Piece = tuple[int, int, int]

# Stands for everything beyond the padded frame.
INFINITY: Piece = (0, 0, -1)


def _triangles(a: int, b: int) -> tuple[tuple[Point, Point, Point], tuple[Point, Point, Point]]:
    h = HALF
    if (a - b) % UNIT == 0:
        return (
            ((a, b), (a + h, b), (a + h, b + h)),
            ((a, b), (a, b + h), (a + h, b + h)),
        )
    return (
        ((a, b), (a + h, b), (a, b + h)),
        ((a + h, b), (a + h, b + h), (a, b + h)),
    )


def _sample(a: int, b: int, t: int) -> Point:
    # odd offsets in units of 2 keep samples off every half-lattice line and diagonal
    q = HALF // 4
    if (a - b) % UNIT == 0:
        return (a + 3 * q, b + q) if t == 0 else (a + q, b + 3 * q)
    return (a + q, b + q) if t == 0 else (a + 3 * q, b + 3 * q)


class Subdivision:
    """Pieces of the padded frame with side adjacency."""

    def __init__(self, cubical: CubicalSet):
        self.cubical = cubical
        (x0, y0), (x1, y1) = cubical.frame.bounds
        self.bounds = ((x0, y0), (x1, y1))
        self.pieces: list[Piece] = []
        self.corners: dict[Piece, tuple[Point, Point, Point]] = {}
        self.sides: dict[Piece, tuple[Segment, Segment, Segment]] = {}
        self.side_pieces: dict[Segment, list[Piece]] = {}
        for b in range(y0, y1, HALF):
            for a in range(x0, x1, HALF):
                for t, tri in enumerate(_triangles(a, b)):
                    piece = (a, b, t)
                    self.pieces.append(piece)
                    self.corners[piece] = tri
                    sides = (
                        normalize_segment(tri[0], tri[1]),
                        normalize_segment(tri[1], tri[2]),
                        normalize_segment(tri[2], tri[0]),
                    )
                    self.sides[piece] = sides
                    for side in sides:
                        self.side_pieces.setdefault(side, []).append(piece)
        self.outer = [
            p for p in self.pieces if any(len(self.side_pieces[s]) == 1 for s in self.sides[p])
        ]

    def sample(self, piece: Piece) -> Point:
        """Query point strictly inside a piece."""
        return _sample(*piece)

    def region(self, piece: Piece) -> Region:
        if piece == INFINITY:
            return Region.COMPLEMENT
        cell = (piece[0] // UNIT, piece[1] // UNIT)
        return Region.INTERIOR if cell in self.cubical.cells else Region.COMPLEMENT

    def pieces_at(self, point: Point) -> list[Piece]:
        """Pieces having ``point`` (on the half-cell lattice) as a corner."""
        x, y = point
        found = []
        for a in (x - HALF, x):
            for b in (y - HALF, y):
                for t in (0, 1):
                    piece = (a, b, t)
                    if piece in self.corners and point in self.corners[piece]:
                        found.append(piece)
        return found

    def _side_open_in(self, side: Segment, region: Region) -> bool:
        (ax, ay), (bx, by) = side
        return self.cubical.point_in_region(((ax + bx) // 2, (ay + by) // 2), region)

    def neighbors(
        self,
        piece: Piece,
        blocked: frozenset[Segment] | set[Segment] = frozenset(),
        region: Region | None = None,
        infinity: bool = False,
    ) -> Iterable[Piece]:
        if piece == INFINITY:
            yield from self.outer
            return
        for side in self.sides[piece]:
            if side in blocked:
                continue
            if region is not None and not self._side_open_in(side, region):
                continue
            others = self.side_pieces[side]
            if len(others) == 1:
                if infinity:
                    yield INFINITY
                continue
            yield others[0] if others[1] == piece else others[1]

    def flood(
        self,
        seeds: Iterable[Piece],
        members: set[Piece] | frozenset[Piece] | None = None,
        blocked: frozenset[Segment] | set[Segment] = frozenset(),
        region: Region | None = None,
        infinity: bool = False,
    ) -> set[Piece]:
        """
        Pieces reachable from the seeds without crossing blocked sides.

        Args:
            seeds: Starting pieces
            members: Restrict the fill to these pieces (None for all)
            blocked: Sides that cannot be crossed
            region: If given, also refuse sides not open in this region
            infinity: Join the frame's outer sides through INFINITY

        Returns:
            Set of reached pieces
        """
        seen: set[Piece] = set()
        queue: deque[Piece] = deque()
        for s in seeds:
            if (members is None or s in members) and s not in seen:
                seen.add(s)
                queue.append(s)
        while queue:
            current = queue.popleft()
            for nxt in self.neighbors(current, blocked, region, infinity):
                if nxt in seen or (members is not None and nxt not in members):
                    continue
                seen.add(nxt)
                queue.append(nxt)
        return seen

    def components(
        self,
        members: set[Piece] | frozenset[Piece],
        blocked: frozenset[Segment] | set[Segment] = frozenset(),
        region: Region | None = None,
        infinity: bool = False,
    ) -> list[set[Piece]]:
        """Connected components of ``members``, ordered by smallest piece."""
        remaining = set(members)
        found: list[set[Piece]] = []
        for piece in sorted(remaining):
            if piece not in remaining:
                continue
            comp = self.flood([piece], members, blocked, region, infinity)
            remaining -= comp
            found.append(comp)
        return found


@lru_cache(maxsize=64)
def subdivision_for(cubical: CubicalSet) -> Subdivision:
    return Subdivision(cubical)


def point_region(cubical: CubicalSet, p: Point) -> Region | None:
    """INTERIOR or COMPLEMENT for points off the boundary, None on it."""
    if cubical.point_in_region(p, Region.INTERIOR):
        return Region.INTERIOR
    if cubical.point_in_region(p, Region.COMPLEMENT):
        return Region.COMPLEMENT
    return None
