"""Exception types shared across the package."""

from __future__ import annotations


class PairlearnError(Exception):
    """Base class for all package-specific errors."""


class SpaceError(PairlearnError, ValueError):
    """Attribute space or object specification is malformed."""


class ConstraintInfeasibleError(PairlearnError):
    """The attribute space cannot satisfy a pair-construction constraint."""


class ExhaustionError(PairlearnError):
    """Not enough unseen objects remain to build a test set."""


class RenderResolutionError(PairlearnError, ValueError):
    """Requested raster size is below the supported minimum."""


class ShapeMismatchError(PairlearnError, ValueError):
    """Input raster shape does not match the encoder configuration."""


class NormalizationError(PairlearnError, ValueError):
    """Latent vectors passed to the contrastive loss are not unit-norm."""


class MissingLabelsError(PairlearnError):
    """A supervised trial was processed without per-half labels."""


class CheckpointMismatchError(PairlearnError):
    """Checkpoint was produced under a different encoder configuration."""


class TrainingDiverged(PairlearnError):
    """Optimization produced a non-finite loss.

    Carries the partial run record (``.record``) as a diagnostic.
    """

    def __init__(self, message: str, record=None):
        super().__init__(message)
        self.record = record


class EmptyCellError(PairlearnError):
    """Aggregation found design cells with no run records."""

    def __init__(self, missing):
        self.missing = list(missing)
        super().__init__(f"no records for cells: {self.missing}")


class RankDeficiencyError(PairlearnError):
    """Design matrix is rank deficient."""

    def __init__(self, columns):
        self.columns = list(columns)
        super().__init__(f"design matrix rank deficient; offending columns: {self.columns}")


class SchemaError(PairlearnError, ValueError):
    """A data table violates its documented schema."""


class ConfigError(PairlearnError, ValueError):
    """Configuration file is syntactically or semantically invalid."""


class LedgerError(PairlearnError):
    """Run ledger invariant violated (duplicate key or corrupt entry)."""
