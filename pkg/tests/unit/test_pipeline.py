"""Tests for stage orchestration."""

from disk_criterion.config import Config
from disk_criterion.pipeline import check_shape, oracle_shape, parameterize_shape
from tests.helpers import SHAPES


def test_check_shape_exit_codes(lone_square, annulus):
    """Test exit codes from the criterion verdict."""
    assert check_shape(lone_square, SHAPES["lone_square"]).exit_code == 0
    assert check_shape(annulus, SHAPES["annulus"]).exit_code == 1


def test_check_shape_timing(lone_square):
    """Test that timings appear only on request."""
    plain = check_shape(lone_square, SHAPES["lone_square"])
    timed = check_shape(lone_square, SHAPES["lone_square"], timing=True)

    assert plain.document.timing is None
    assert set(timed.document.timing) == {"criterion", "oracle"}


def test_oracle_shape(shape):
    """Test the oracle-only stage."""
    result = oracle_shape(shape("diagonal_pair"), SHAPES["diagonal_pair"])

    assert result.exit_code == 1
    assert result.document.criterion is None
    assert result.document.oracle is not None


def test_parameterize_shape(lone_square):
    """Test the full pipeline on one cell."""
    result = parameterize_shape(lone_square, SHAPES["lone_square"])

    assert result.exit_code == 0
    assert result.split is not None and result.circle is not None
    assert len(result.document.parameterization.parameters) == 8
    assert len(result.document.decay) == 2


def test_parameterize_shape_without_decay(block3):
    """Test that zero refinement levels skip the decay stage."""
    config = Config()
    config.parameterize.refinement_levels = 0

    result = parameterize_shape(block3, SHAPES["block3"], config, timing=True)

    assert result.document.decay is None
    assert "refinement_decay" not in result.document.timing
    assert result.document.parameterization.k1_size + result.document.parameterization.k2_size == 26


def test_parameterize_shape_not_disk(annulus):
    """Test that a non-disk stops after the criterion."""
    result = parameterize_shape(annulus, SHAPES["annulus"])

    assert result.exit_code == 1
    assert result.split is None
    assert result.document.oracle is None
    assert result.document.criterion.failed_conditions == [2]
