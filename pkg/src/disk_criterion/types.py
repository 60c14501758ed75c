"""Type definitions for disk-criterion."""

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering

from pydantic import BaseModel, ConfigDict, Field, field_serializer

# Fixed-point units per cell side. Cell centres and edge midpoints land on
# multiples of UNIT // 2, so every arc vertex is an exact integer point.
UNIT = 16
HALF = UNIT // 2

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]
Cell = tuple[int, int]
Point = tuple[int, int]


class Region(str, Enum):
    """Open region an arc or check refers to."""

    INTERIOR = "interior"
    COMPLEMENT = "complement"
    MIXED = "mixed"


class ElementKind(str, Enum):
    """Kind of boundary atom."""

    VERTEX = "vertex"
    EDGE = "edge"


class Verdict(str, Enum):
    """Outcome of the criterion."""

    DISK = "disk"
    NOT_DISK = "not-disk"
    PRECONDITION_FAILED = "precondition-failed"


class ArcSide(str, Enum):
    """Which boundary arc of a Jordan split."""

    K1 = "K1"
    K2 = "K2"


class Ordering(str, Enum):
    """Result of comparing two elements of an ordered arc."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    @property
    def sign(self) -> int:
        """-1, 0 or 1, for use with functools.cmp_to_key."""
        return {"less": -1, "equal": 0, "greater": 1}[self.value]

    def flip(self) -> "Ordering":
        if self is Ordering.LESS:
            return Ordering.GREATER
        if self is Ordering.GREATER:
            return Ordering.LESS
        return self


def normalize_edge(a: Vertex, b: Vertex) -> Edge:
    """Return the edge with its endpoints in lexicographic order."""
    return (a, b) if a <= b else (b, a)


@total_ordering
@dataclass(frozen=True, slots=True, eq=True)
class BoundaryElement:
    """A lattice vertex or an open unit lattice edge.

    Coordinates are lattice coordinates; ``representative`` is in fixed-point
    units. Elements order by their representative point, which is unique.
    """

    kind: ElementKind
    start: Vertex
    end: Vertex

    @classmethod
    def vertex(cls, v: Vertex) -> "BoundaryElement":
        return cls(ElementKind.VERTEX, v, v)

    @classmethod
    def edge(cls, a: Vertex, b: Vertex) -> "BoundaryElement":
        lo, hi = normalize_edge(a, b)
        return cls(ElementKind.EDGE, lo, hi)

    @property
    def is_vertex(self) -> bool:
        return self.kind is ElementKind.VERTEX

    @property
    def representative(self) -> Point:
        """Vertex itself, or edge midpoint, in fixed-point units."""
        return (
            (self.start[0] + self.end[0]) * HALF,
            (self.start[1] + self.end[1]) * HALF,
        )

    @property
    def lattice_vertices(self) -> tuple[Vertex, ...]:
        if self.is_vertex:
            return (self.start,)
        return (self.start, self.end)

    @property
    def closure_points(self) -> tuple[Point, ...]:
        """Points spanning the closure, in fixed-point units."""
        return tuple((x * UNIT, y * UNIT) for x, y in self.lattice_vertices)

    @property
    def label(self) -> str:
        if self.is_vertex:
            return f"V({self.start[0]},{self.start[1]})"
        return (
            f"E({self.start[0]},{self.start[1]})-({self.end[0]},{self.end[1]})"
        )

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, BoundaryElement):
            return NotImplemented
        return self.representative < other.representative

    def __str__(self) -> str:
        return self.label


def element_labels(elements: "list[BoundaryElement] | None") -> list[str] | None:
    """Serialize elements as labels."""
    if elements is None:
        return None
    return [e.label for e in elements]


class CriterionReport(BaseModel):
    """Evaluation of the four disk conditions on a cubical set."""

    model_config = ConfigDict(frozen=True)

    nonempty_interior: bool = Field(description="Set has at least one cell")
    cond1_interior_connected: bool = Field(description="Interior is connected")
    cond1_components: int = Field(description="Interior component count")
    cond2_complement_connected: bool = Field(description="Complement is connected")
    cond2_components: int = Field(description="Complement component count")
    cond3_failures: list[BoundaryElement] = Field(
        default_factory=list,
        description="Boundary elements not accessible from the interior",
    )
    cond4_failures: list[BoundaryElement] = Field(
        default_factory=list,
        description="Boundary elements not accessible from the complement",
    )
    verdict: Verdict = Field(description="Overall verdict")

    @field_serializer("cond3_failures", "cond4_failures")
    def _serialize_failures(self, value: list[BoundaryElement]) -> list[str]:
        return [e.label for e in value]

    @property
    def cond3_accessible_from_interior(self) -> bool:
        return not self.cond3_failures

    @property
    def cond4_accessible_from_complement(self) -> bool:
        return not self.cond4_failures

    @property
    def failed_conditions(self) -> list[int]:
        """Numbers of the conditions that failed."""
        failed = []
        if not self.cond1_interior_connected:
            failed.append(1)
        if not self.cond2_complement_connected:
            failed.append(2)
        if self.cond3_failures:
            failed.append(3)
        if self.cond4_failures:
            failed.append(4)
        return failed


class OracleReport(BaseModel):
    """Independent combinatorial disk decision."""

    model_config = ConfigDict(frozen=True)

    connected: bool = Field(description="The complex is connected")
    vertices: int = Field(description="Vertex count V")
    edges: int = Field(description="Edge count E")
    faces: int = Field(description="Cell count F")
    euler_characteristic: int = Field(description="V - E + F")
    manifold_with_boundary: bool = Field(description="Every vertex link is an arc or cycle")
    boundary_cycle: list[BoundaryElement] | None = Field(
        default=None, description="Cyclic boundary sequence, when defined"
    )
    is_disk: bool = Field(description="Oracle verdict")

    @field_serializer("boundary_cycle")
    def _serialize_cycle(self, value: list[BoundaryElement] | None) -> list[str] | None:
        return element_labels(value)


class ParameterEntry(BaseModel):
    """One boundary element with its circle parameter."""

    element: str = Field(description="Element label")
    value: str = Field(description="Exact dyadic value, as a fraction")
    approx: float = Field(description="Float approximation of value")
    arc: ArcSide = Field(description="Arc the element was parameterized on")


class ParameterizationReport(BaseModel):
    """Cyclic boundary parameterization summary."""

    z1: str = Field(description="First split endpoint")
    z2: str = Field(description="Second split endpoint")
    k1_size: int = Field(description="Elements on K1")
    k2_size: int = Field(description="Elements on K2")
    k1_depth: int = Field(description="Dyadic net depth on K1")
    k2_depth: int = Field(description="Dyadic net depth on K2")
    parameters: list[ParameterEntry] = Field(description="Entries sorted by value")

    @property
    def cyclic_order(self) -> list[str]:
        return [p.element for p in self.parameters]


class DecayLevel(BaseModel):
    """Net diameters for one refinement level."""

    subdivision: int = Field(description="Number of 2x2 subdivisions applied")
    level_diameters: list[float] = Field(description="a_n per net level, original cell units")
    terminal: float = Field(description="Last a_n, original cell units")


class DecayReport(BaseModel):
    """Diameter decay across global subdivisions."""

    arc: ArcSide
    levels: list[DecayLevel] = Field(default_factory=list)

    @property
    def ratios(self) -> list[float]:
        terminals = [level.terminal for level in self.levels]
        return [b / a for a, b in zip(terminals, terminals[1:], strict=False)]


class MetricAudit(BaseModel):
    """Outcome of checking the arc metric exhaustively."""

    elements: int
    triples_checked: int
    identity_violations: int = 0
    symmetry_violations: int = 0
    triangle_violations: int = 0
    lower_bound_violations: int = 0
    nesting_violations: int = 0

    @property
    def ok(self) -> bool:
        return (
            self.identity_violations
            + self.symmetry_violations
            + self.triangle_violations
            + self.lower_bound_violations
            + self.nesting_violations
        ) == 0


class Disagreement(BaseModel):
    """A shape on which criterion and oracle disagree."""

    shape: str = Field(description="Shape in ShapeFile format")
    criterion_verdict: Verdict
    oracle_is_disk: bool


class CrosscheckReport(BaseModel):
    """Agreement between criterion and oracle over an enumeration."""

    width: int
    height: int
    include_extras: bool
    shapes: int = Field(description="Total shapes checked")
    disks: int = Field(description="Shapes both engines call a disk")
    disagreements: list[Disagreement] = Field(default_factory=list)

    @property
    def agreed(self) -> bool:
        return not self.disagreements


class ReportDocument(BaseModel):
    """Everything a CLI run reports about one shape."""

    tool_version: str
    input_digest: str
    criterion: CriterionReport | None = None
    oracle: OracleReport | None = None
    parameterization: ParameterizationReport | None = None
    decay: list[DecayReport] | None = None
    timing: dict[str, float] | None = None
