"""Order, interval sets and the diameter metric on a boundary arc."""

import threading
from fractions import Fraction
from functools import cmp_to_key
from typing import Literal

from .arcs import Arc, JordanSplit, crosscut
from .errors import ContractViolation, InternalInvariantViolation
from .subdivision import Piece
from .surd import Surd
from .types import UNIT, ArcSide, BoundaryElement, MetricAudit, Ordering, Point
from .utils.logger import log_structured, logger

# float slack below which the triangle inequality is rechecked exactly
_TRIANGLE_SLACK = 1e-9


def _diameter2(points: list[Point]) -> int:
    best = 0
    for i, (x1, y1) in enumerate(points):
        for x2, y2 in points[i + 1 :]:
            best = max(best, (x1 - x2) ** 2 + (y1 - y2) ** 2)
    return best


def _length(d2: int) -> Surd:
    """Euclidean length in cell units from a squared fixed-point distance."""
    return Surd.sqrt(d2, Fraction(1, UNIT))


class OrderedArc:
    """
    One boundary arc K of a Jordan split, with its order and metric.

    The endpoints are a = z1 and b = z2. Crosscuts, side fills and diameters
    are memoized; the memo tables are guarded by a lock so concurrent readers
    see the same results.
    """

    def __init__(self, split: JordanSplit, side: ArcSide):
        self.split = split
        self.side = side
        self.a = split.z1
        self.b = split.z2
        self.elements: frozenset[BoundaryElement] = split.arc_elements(side)
        self._lock = threading.Lock()
        self._crosscuts: dict[BoundaryElement, Arc] = {}
        self._lower: dict[BoundaryElement, frozenset[Piece]] = {}
        self._sorted: tuple[BoundaryElement, ...] | None = None
        self._index: dict[BoundaryElement, int] = {}
        self._diam2: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element: object) -> bool:
        return element in self.elements

    @property
    def side_pieces(self) -> frozenset[Piece]:
        return self.split.side_pieces(self.side)

    def require(self, *elements: BoundaryElement) -> None:
        for e in elements:
            if e not in self.elements:
                raise ContractViolation(f"{e.label} is not on arc {self.side.value}")

    def crosscut_through(self, x: BoundaryElement) -> Arc:
        with self._lock:
            cached = self._crosscuts.get(x)
        if cached is not None:
            return cached
        arc = crosscut(self.split, self.side, x)
        with self._lock:
            return self._crosscuts.setdefault(x, arc)

    def pieces_of(self, element: BoundaryElement) -> set[Piece]:
        """Processed-side pieces touching the element's representative."""
        sub = self.split.subdivision
        return {p for p in sub.pieces_at(element.representative) if p in self.side_pieces}

    def lower_side(self, x: BoundaryElement) -> frozenset[Piece]:
        """
        The side of the crosscut through x that contains z1.

        Raises:
            InternalInvariantViolation: If the crosscut fails to separate z1 from z2
        """
        with self._lock:
            cached = self._lower.get(x)
        if cached is not None:
            return cached
        cut = self.crosscut_through(x)
        sub = self.split.subdivision
        filled = frozenset(
            sub.flood(
                self.pieces_of(self.a),
                members=self.side_pieces,
                blocked=cut.sides(),
                infinity=self.side is ArcSide.K2,
            )
        )
        if filled & self.pieces_of(self.b):
            raise InternalInvariantViolation(
                f"crosscut through {x.label} does not separate the arc endpoints"
            )
        with self._lock:
            return self._lower.setdefault(x, filled)

    @property
    def is_sorted(self) -> bool:
        return self._sorted is not None

    def sorted_elements(self) -> tuple[BoundaryElement, ...]:
        if self._sorted is None:
            sort_boundary(self)
        assert self._sorted is not None
        return self._sorted

    def index(self, element: BoundaryElement) -> int:
        self.sorted_elements()
        return self._index[element]

    def set_order(self, ordered: list[BoundaryElement]) -> None:
        with self._lock:
            self._sorted = tuple(ordered)
            self._index = {e: i for i, e in enumerate(ordered)}

    def diameter2(self, i: int, j: int) -> int:
        """Squared diameter of the closure of W between sorted positions i <= j."""
        key = (i, j)
        with self._lock:
            cached = self._diam2.get(key)
        if cached is not None:
            return cached
        ordered = self.sorted_elements()
        if i == j:
            value = _diameter2(list(ordered[i].closure_points))
        else:
            # W(i, j) = W(i, j-1) plus the closure of element j
            value = self.diameter2(i, j - 1)
            seen = {p for e in ordered[i:j] for p in e.closure_points}
            for x1, y1 in ordered[j].closure_points:
                for x2, y2 in seen:
                    value = max(value, (x1 - x2) ** 2 + (y1 - y2) ** 2)
            value = max(value, _diameter2(list(ordered[j].closure_points)))
        with self._lock:
            self._diam2[key] = value
        return value


def compare(
    arc: OrderedArc,
    x: BoundaryElement,
    y: BoundaryElement,
    via: Literal["x", "y"] = "x",
) -> Ordering:
    """
    Compare two elements of a boundary arc.

    Endpoints are fixed first: a precedes and b follows everything. Otherwise
    y < x exactly when y lies on the z1 side of the crosscut through x.
    With ``via="y"`` the crosscut through y decides instead; both must agree.

    Args:
        arc: Ordered arc
        x: First element
        y: Second element
        via: Which element's crosscut decides

    Returns:
        Ordering of x relative to y

    Raises:
        ContractViolation: If x or y is not on the arc
    """
    arc.require(x, y)
    if x == y:
        return Ordering.EQUAL
    if x == arc.a or y == arc.b:
        return Ordering.LESS
    if x == arc.b or y == arc.a:
        return Ordering.GREATER
    if via == "y":
        return compare(arc, y, x).flip()
    if arc.pieces_of(y) & arc.lower_side(x):
        return Ordering.GREATER
    return Ordering.LESS


def sort_boundary(arc: OrderedArc) -> list[BoundaryElement]:
    """
    Sort the arc by the crosscut order and check it.

    Returns:
        Elements from a to b

    Raises:
        InternalInvariantViolation: If the comparator is not antisymmetric on neighbours
    """
    if arc.is_sorted:
        return list(arc.sorted_elements())

    def cmp(x: BoundaryElement, y: BoundaryElement) -> int:
        return compare(arc, x, y).sign

    ordered = sorted(sorted(arc.elements), key=cmp_to_key(cmp))
    for lo, hi in zip(ordered, ordered[1:], strict=False):
        if compare(arc, hi, lo, via="y") is not Ordering.GREATER:
            raise InternalInvariantViolation(
                f"order is not antisymmetric on {lo.label} and {hi.label}"
            )
    if ordered[0] != arc.a or ordered[-1] != arc.b:
        raise InternalInvariantViolation("sorted arc does not run from z1 to z2")
    arc.set_order(ordered)
    log_structured(logger, "debug", "Arc sorted", arc=arc.side.value, elements=len(ordered))
    return ordered


def interval_w(arc: OrderedArc, x: BoundaryElement, y: BoundaryElement) -> list[BoundaryElement]:
    """Elements z with min(x, y) <= z <= max(x, y), in arc order."""
    arc.require(x, y)
    if arc.is_sorted:
        i, j = sorted((arc.index(x), arc.index(y)))
        return list(arc.sorted_elements()[i : j + 1])
    lo, hi = (x, y) if compare(arc, x, y) is not Ordering.GREATER else (y, x)
    found = [
        z
        for z in arc.elements
        if compare(arc, lo, z) is not Ordering.GREATER
        and compare(arc, z, hi) is not Ordering.GREATER
    ]
    return sorted(found, key=cmp_to_key(lambda p, q: compare(arc, p, q).sign))


def rho(arc: OrderedArc, x: BoundaryElement, y: BoundaryElement) -> Surd:
    """Diameter of the closed interval between x and y, in cell units."""
    arc.require(x, y)
    if x == y:
        return Surd()
    i, j = sorted((arc.index(x), arc.index(y)))
    return _length(arc.diameter2(i, j))


def signed_f(
    arc: OrderedArc, z1: BoundaryElement, z2: BoundaryElement, z: BoundaryElement
) -> Surd:
    """Sum of the signed distances from z to z1 and to z2."""
    arc.require(z1, z2, z)
    total = Surd()
    for zs in (z1, z2):
        d = rho(arc, z, zs)
        total = total + (d if arc.index(z) >= arc.index(zs) else -d)
    return total


def midpoint(
    arc: OrderedArc, z1: BoundaryElement, z2: BoundaryElement
) -> BoundaryElement | None:
    """
    The element strictly between z1 and z2 where |signed_f| is smallest.

    Ties go to the order-smaller element.

    Returns:
        The midpoint, or None if nothing lies strictly between
    """
    arc.require(z1, z2)
    i, j = arc.index(z1), arc.index(z2)
    if i > j:
        raise ContractViolation(f"{z1.label} does not precede {z2.label}")
    best: BoundaryElement | None = None
    best_value: Surd | None = None
    for z in arc.sorted_elements()[i + 1 : j]:
        value = abs(signed_f(arc, z1, z2, z))
        if best_value is None or value < best_value:
            best, best_value = z, value
    return best


def audit_metric(arc: OrderedArc) -> MetricAudit:
    """
    Check the metric on every pair and triple of the arc.

    Identity, symmetry and the lower bound by the distance of representatives
    are exact. Triangle inequalities are checked in floating point and
    rechecked exactly when the slack is tiny. Nesting checks that W grows
    with the interval.
    """
    ordered = arc.sorted_elements()
    n = len(ordered)
    audit = MetricAudit(elements=n, triples_checked=0)
    # rho(x, x) is 0 even when the closure of x has positive diameter
    d2 = [
        [0 if i == j else arc.diameter2(min(i, j), max(i, j)) for j in range(n)]
        for i in range(n)
    ]
    lengths = [[float(_length(v)) for v in row] for row in d2]

    for i in range(n):
        for j in range(n):
            if (d2[i][j] == 0) != (i == j):
                audit.identity_violations += 1
            if rho(arc, ordered[i], ordered[j]) != rho(arc, ordered[j], ordered[i]):
                audit.symmetry_violations += 1
            (x1, y1), (x2, y2) = ordered[i].representative, ordered[j].representative
            if d2[i][j] < (x1 - x2) ** 2 + (y1 - y2) ** 2:
                audit.lower_bound_violations += 1
            if i < j and (d2[i][j - 1] > d2[i][j] or d2[i + 1][j] > d2[i][j]):
                audit.nesting_violations += 1

    checked = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                checked += 1
                slack = lengths[i][j] + lengths[j][k] - lengths[i][k]
                if slack > _TRIANGLE_SLACK:
                    continue
                exact = _length(d2[i][j]) + _length(d2[j][k]) - _length(d2[i][k])
                if exact.sign() < 0:
                    audit.triangle_violations += 1
    audit.triples_checked = checked
    log_structured(
        logger, "debug", "Metric audited", arc=arc.side.value, elements=n, ok=audit.ok
    )
    return audit


def audit_crosscut_pairs(arc: OrderedArc) -> int:
    """
    Route the crosscut through each middle element clear of its predecessor's.

    Returns:
        Number of disjoint pairs built

    Raises:
        InternalInvariantViolation: If some pair cannot be made disjoint
    """
    middle = arc.sorted_elements()[1:-1]
    for x, y in zip(middle, middle[1:], strict=False):
        crosscut(arc.split, arc.side, y, avoid=arc.crosscut_through(x))
    return max(len(middle) - 1, 0)
