"""Stage orchestration behind the CLI commands."""

import time
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import TypeVar

from .arcs import JordanSplit
from .config import Config
from .criterion import evaluate
from .cubical import CubicalSet
from .oracle import is_disk_oracle
from .parameterize import Parameterization, parameterize_boundary, refinement_decay
from .report import build_document
from .types import ArcSide, DecayReport, ReportDocument, Verdict
from .utils.logger import logger

T = TypeVar("T")


@dataclass
class PipelineResult:
    """A report document plus the objects the renderer needs."""

    document: ReportDocument
    exit_code: int
    split: JordanSplit | None = None
    circle: Parameterization | None = None


@dataclass
class _Timer:
    enabled: bool
    stages: dict[str, float] = field(default_factory=dict)

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            if self.enabled:
                self.stages[name] = round(time.perf_counter() - start, 6)

    def run(self, name: str, func: Callable[[], T]) -> T:
        with self.stage(name):
            return func()

    @property
    def result(self) -> dict[str, float] | None:
        return self.stages if self.enabled else None


def check_shape(cubical: CubicalSet, shape_text: str, timing: bool = False) -> PipelineResult:
    """Criterion and oracle; exit code 0 for a disk, 1 otherwise."""
    timer = _Timer(timing)
    criterion = timer.run("criterion", lambda: evaluate(cubical))
    oracle = timer.run("oracle", lambda: is_disk_oracle(cubical))
    if (criterion.verdict is Verdict.DISK) != oracle.is_disk:
        logger.warning(
            f"Criterion says {criterion.verdict.value} but oracle says "
            f"{'disk' if oracle.is_disk else 'not disk'}"
        )
    doc = build_document(shape_text, criterion=criterion, oracle=oracle, timing=timer.result)
    return PipelineResult(doc, 0 if criterion.verdict is Verdict.DISK else 1)


def oracle_shape(cubical: CubicalSet, shape_text: str, timing: bool = False) -> PipelineResult:
    """Oracle only; exit code 0 for a disk, 1 otherwise."""
    timer = _Timer(timing)
    oracle = timer.run("oracle", lambda: is_disk_oracle(cubical))
    doc = build_document(shape_text, oracle=oracle, timing=timer.result)
    return PipelineResult(doc, 0 if oracle.is_disk else 1)


def parameterize_shape(
    cubical: CubicalSet,
    shape_text: str,
    config: Config | None = None,
    timing: bool = False,
) -> PipelineResult:
    """
    Criterion, then the constructive parameterization when it says disk.

    Args:
        cubical: Shape to process
        shape_text: ShapeFile text, for the input digest
        config: Settings for refinement levels and the decay window
        timing: Record per-stage wall times in the report

    Returns:
        PipelineResult; exit code 1 with only the criterion stage when not a disk
    """
    config = config or Config()
    timer = _Timer(timing)
    criterion = timer.run("criterion", lambda: evaluate(cubical))
    if criterion.verdict is not Verdict.DISK:
        doc = build_document(shape_text, criterion=criterion, timing=timer.result)
        return PipelineResult(doc, 1)

    oracle = timer.run("oracle", lambda: is_disk_oracle(cubical))
    result = timer.run("parameterize", lambda: parameterize_boundary(cubical))

    decay: list[DecayReport] | None = None
    levels = config.parameterize.refinement_levels
    if levels > 0:
        with timer.stage("refinement_decay"):
            decay = [
                refinement_decay(
                    cubical,
                    side,
                    levels,
                    config.parameterize.decay_low,
                    config.parameterize.decay_high,
                )
                for side in ArcSide
            ]

    doc = build_document(
        shape_text,
        criterion=criterion,
        oracle=oracle,
        parameterization=result.to_report(),
        decay=decay,
        timing=timer.result,
    )
    return PipelineResult(doc, 0, split=result.split, circle=result.circle)
