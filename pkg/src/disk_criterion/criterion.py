"""The four-condition disk criterion."""

from .cubical import CubicalSet, classify, incident_cells, region_components
from .errors import ContractViolation
from .types import BoundaryElement, CriterionReport, Region, Verdict
from .utils.logger import log_structured, logger


def check_connectivity(cubical: CubicalSet, region: Region) -> tuple[bool, int]:
    """
    Check whether an open region is connected.

    Args:
        cubical: Set to check
        region: INTERIOR or COMPLEMENT

    Returns:
        (connected, component count); an empty interior is (False, 0)
    """
    count = len(region_components(cubical, region))
    return count == 1, count


def check_accessibility(
    cubical: CubicalSet, element: BoundaryElement, region: Region
) -> bool:
    """
    Decide whether a boundary element is accessible from an open region.

    For cubical sets accessibility is local: the element is accessible iff it
    is incident to an occupied cell (interior) or to an unoccupied frame cell
    (complement).

    Raises:
        ContractViolation: If element is not a boundary element of the set
    """
    if element not in classify(cubical).boundary_set:
        raise ContractViolation(f"{element.label} is not a boundary element")
    cells = incident_cells(element)
    if region is Region.INTERIOR:
        return any(c in cubical.cells for c in cells)
    if region is Region.COMPLEMENT:
        frame = cubical.frame
        return any(frame.contains(c) and c not in cubical.cells for c in cells)
    raise ValueError(f"accessibility is undefined for region {region.value}")


def evaluate(cubical: CubicalSet) -> CriterionReport:
    """
    Evaluate the disk criterion.

    Args:
        cubical: Set to evaluate

    Returns:
        CriterionReport with per-condition results and failure witnesses
    """
    classification = classify(cubical)
    interior_ok, interior_count = check_connectivity(cubical, Region.INTERIOR)
    complement_ok, complement_count = check_connectivity(cubical, Region.COMPLEMENT)

    cond3 = [
        e
        for e in classification.boundary_elements
        if not check_accessibility(cubical, e, Region.INTERIOR)
    ]
    cond4 = [
        e
        for e in classification.boundary_elements
        if not check_accessibility(cubical, e, Region.COMPLEMENT)
    ]

    if not classification.nonempty_interior:
        verdict = Verdict.PRECONDITION_FAILED
    elif interior_ok and complement_ok and not cond3 and not cond4:
        verdict = Verdict.DISK
    else:
        verdict = Verdict.NOT_DISK

    log_structured(
        logger,
        "debug",
        "Criterion evaluated",
        verdict=verdict.value,
        interior=interior_count,
        complement=complement_count,
        cond3=len(cond3),
        cond4=len(cond4),
    )
    return CriterionReport(
        nonempty_interior=classification.nonempty_interior,
        cond1_interior_connected=interior_ok,
        cond1_components=interior_count,
        cond2_complement_connected=complement_ok,
        cond2_components=complement_count,
        cond3_failures=cond3,
        cond4_failures=cond4,
        verdict=verdict,
    )
