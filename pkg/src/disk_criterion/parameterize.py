"""Dyadic nets on ordered arcs and the boundary-to-circle parameterization."""

from dataclasses import dataclass, field
from fractions import Fraction

from .arcs import JordanSplit, jordan_split
from .cubical import CubicalSet, subdivide
from .errors import ContractViolation, IncompleteNetError, InternalInvariantViolation
from .order import OrderedArc, audit_crosscut_pairs, midpoint, rho, sort_boundary
from .surd import Surd
from .types import (
    ArcSide,
    BoundaryElement,
    DecayLevel,
    DecayReport,
    ParameterEntry,
    ParameterizationReport,
)
from .utils.logger import log_structured, logger


@dataclass
class DyadicNet:
    """Dyadic rationals in [0, 1] assigned to arc elements by recursive midpoints."""

    assignments: dict[Fraction, BoundaryElement]
    depth: int
    level_diameters: list[Surd] = field(default_factory=list)

    @property
    def terminal(self) -> Surd:
        return self.level_diameters[-1]

    def elements(self) -> set[BoundaryElement]:
        return set(self.assignments.values())


@dataclass
class Parameterization:
    """Exact dyadic value for every element of an arc, or of the whole boundary."""

    values: dict[BoundaryElement, Fraction]
    side: ArcSide | None = None
    cyclic: bool = False

    def __getitem__(self, element: BoundaryElement) -> Fraction:
        return self.values[element]

    def ordered(self) -> list[BoundaryElement]:
        """Elements by increasing value."""
        return sorted(self.values, key=self.values.__getitem__)


def build_net(arc: OrderedArc) -> DyadicNet:
    """
    Assign dyadic rationals to the arc by recursive midpoints.

    z_0 = a and z_1 = b; each level halves every interval whose open part is
    nonempty. Recursion stops when no interval can be split.

    Args:
        arc: Ordered arc with at least two elements

    Returns:
        DyadicNet with a_n, the largest interval diameter at each level
    """
    ordered = sort_boundary(arc)
    if len(ordered) < 2:
        raise ContractViolation("an arc needs at least two elements")
    assignments: dict[Fraction, BoundaryElement] = {Fraction(0): arc.a, Fraction(1): arc.b}
    partition = [Fraction(0), Fraction(1)]
    diameters = [rho(arc, arc.a, arc.b)]
    depth = 0

    while True:
        refined = [partition[0]]
        split_any = False
        for lo, hi in zip(partition, partition[1:], strict=False):
            m = midpoint(arc, assignments[lo], assignments[hi])
            if m is not None:
                q = (lo + hi) / 2
                assignments[q] = m
                refined.append(q)
                split_any = True
            refined.append(hi)
        if not split_any:
            break
        depth += 1
        partition = refined
        diameters.append(
            max(
                rho(arc, assignments[lo], assignments[hi])
                for lo, hi in zip(partition, partition[1:], strict=False)
            )
        )
        if diameters[-1] > diameters[-2]:
            raise InternalInvariantViolation(f"net diameter grew at level {depth}")

    log_structured(
        logger, "debug", "Net built", arc=arc.side.value, depth=depth, size=len(assignments)
    )
    return DyadicNet(assignments=assignments, depth=depth, level_diameters=diameters)


def parameter_function(arc: OrderedArc, net: DyadicNet) -> Parameterization:
    """
    f(x) = min{ q : x <= z_q } over the net.

    Raises:
        IncompleteNetError: If some element of the arc is not in the net
    """
    ordered = sort_boundary(arc)
    missing = [e for e in ordered if e not in net.elements()]
    if missing:
        raise IncompleteNetError(
            f"{len(missing)} elements of {arc.side.value} are not in the net, first {missing[0].label}"
        )
    # z_q is monotone in q, so the first q reaching x is the minimum
    values: dict[BoundaryElement, Fraction] = {}
    position = 0
    for q, z in sorted(net.assignments.items()):
        while position <= arc.index(z):
            values[ordered[position]] = q
            position += 1
    previous = Fraction(-1)
    for e in ordered:
        if values[e] <= previous:
            raise InternalInvariantViolation(f"parameter not increasing at {e.label}")
        previous = values[e]
    return Parameterization(values=values, side=arc.side)


def assemble_circle(
    split: JordanSplit, p1: Parameterization, p2: Parameterization
) -> Parameterization:
    """
    Glue the parameterizations of K1 and K2 into one cyclic map into [0, 1).

    K1 fills [0, 1/2] forwards and K2 fills [1/2, 1) backwards, with 1 = 0.

    Raises:
        ContractViolation: If the arcs do not both run from z1 (0) to z2 (1)
    """
    for p in (p1, p2):
        if p.values.get(split.z1) != 0 or p.values.get(split.z2) != 1:
            raise ContractViolation("both arcs must map z1 to 0 and z2 to 1")
    values: dict[BoundaryElement, Fraction] = {}
    for x, v in p1.values.items():
        values[x] = v / 2
    for x, v in p2.values.items():
        if x in (split.z1, split.z2):
            continue
        values[x] = Fraction(1, 2) + (1 - v) / 2
    if len(set(values.values())) != len(values):
        raise InternalInvariantViolation("circle parameter is not injective")
    return Parameterization(values=values, cyclic=True)


def refinement_decay(
    cubical: CubicalSet,
    side: ArcSide,
    levels: int = 1,
    decay_low: float = 0.375,
    decay_high: float = 0.625,
) -> DecayReport:
    """
    Rebuild the net after each global 2x2 subdivision and track its diameters.

    Diameters are reported in units of the original cells.

    Raises:
        InternalInvariantViolation: If a_n grows within a net, or the terminal
            diameter does not shrink by a ratio in [decay_low, decay_high]
    """
    report = DecayReport(arc=side)
    current = cubical
    for k in range(levels + 1):
        if k:
            current = subdivide(current)
        arc = OrderedArc(jordan_split(current), side)
        net = build_net(arc)
        scale = 2**k
        report.levels.append(
            DecayLevel(
                subdivision=k,
                level_diameters=[float(a) / scale for a in net.level_diameters],
                terminal=float(net.terminal) / scale,
            )
        )
    for ratio in report.ratios:
        if not decay_low <= ratio <= decay_high:
            raise InternalInvariantViolation(f"terminal diameter ratio {ratio:.3f} out of range")
    return report


@dataclass
class BoundaryParameterization:
    """Everything the constructive pipeline produces for one disk."""

    split: JordanSplit
    arcs: dict[ArcSide, OrderedArc]
    nets: dict[ArcSide, DyadicNet]
    parameterizations: dict[ArcSide, Parameterization]
    circle: Parameterization

    def to_report(self) -> ParameterizationReport:
        k1 = self.arcs[ArcSide.K1]
        entries = [
            ParameterEntry(
                element=e.label,
                value=str(v),
                approx=float(v),
                arc=ArcSide.K1 if e in k1 else ArcSide.K2,
            )
            for e, v in sorted(self.circle.values.items(), key=lambda item: item[1])
        ]
        return ParameterizationReport(
            z1=self.split.z1.label,
            z2=self.split.z2.label,
            k1_size=len(k1),
            k2_size=len(self.arcs[ArcSide.K2]),
            k1_depth=self.nets[ArcSide.K1].depth,
            k2_depth=self.nets[ArcSide.K2].depth,
            parameters=entries,
        )


def parameterize_boundary(
    cubical: CubicalSet,
    z1: BoundaryElement | None = None,
    z2: BoundaryElement | None = None,
) -> BoundaryParameterization:
    """
    Run the whole construction: split, order both arcs, nets, parameters, circle.

    Raises:
        ContractViolation: If the set is not a disk by the criterion
    """
    split = jordan_split(cubical, z1, z2)
    arcs = {side: OrderedArc(split, side) for side in ArcSide}
    nets = {side: build_net(arc) for side, arc in arcs.items()}
    pairs = sum(audit_crosscut_pairs(arc) for arc in arcs.values())
    params = {side: parameter_function(arcs[side], nets[side]) for side in ArcSide}
    circle = assemble_circle(split, params[ArcSide.K1], params[ArcSide.K2])
    logger.info(
        f"Parameterized {len(circle.values)} boundary elements "
        f"(K1 depth {nets[ArcSide.K1].depth}, K2 depth {nets[ArcSide.K2].depth}, "
        f"{pairs} disjoint crosscut pairs)"
    )
    return BoundaryParameterization(split, arcs, nets, params, circle)
