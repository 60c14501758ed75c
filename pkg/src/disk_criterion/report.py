"""Report assembly and byte-stable serialization."""

import json
import tempfile
from pathlib import Path

from pydantic import BaseModel

from . import __version__
from .types import (
    CriterionReport,
    DecayReport,
    OracleReport,
    ParameterizationReport,
    ReportDocument,
)
from .utils.logger import logger
from .utils.validation import compute_text_digest


def build_document(
    shape_text: str,
    criterion: CriterionReport | None = None,
    oracle: OracleReport | None = None,
    parameterization: ParameterizationReport | None = None,
    decay: list[DecayReport] | None = None,
    timing: dict[str, float] | None = None,
) -> ReportDocument:
    """Collect the stages that ran into one document."""
    return ReportDocument(
        tool_version=__version__,
        input_digest=compute_text_digest(shape_text),
        criterion=criterion,
        oracle=oracle,
        parameterization=parameterization,
        decay=decay,
        timing=timing,
    )


def emit_report(doc: BaseModel) -> str:
    """
    Serialize a report with sorted keys and no optional whitespace.

    Fields that are None (stages that did not run) are omitted, so identical
    inputs give identical bytes.
    """
    payload = doc.model_dump(mode="json", exclude_none=True)
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def write_report(doc: ReportDocument, output_path: Path) -> None:
    """
    Atomically write a report.

    Uses temp file + rename so readers never see a partial report.

    Args:
        doc: Report to write
        output_path: Destination file
    """
    output_path.parent.mkdir(parents=True, exist_ok=True)
    temp_fd, temp_path = tempfile.mkstemp(dir=output_path.parent, suffix=".tmp")
    try:
        with open(temp_fd, "w", encoding="utf-8") as f:
            f.write(emit_report(doc))
            f.write("\n")
        Path(temp_path).replace(output_path)
        logger.debug(f"Wrote report to {output_path}")
    except Exception:
        Path(temp_path).unlink(missing_ok=True)
        raise
