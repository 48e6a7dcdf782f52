"""Exception types shared across the toolkit.

The CLI maps these onto process exit codes: usage errors exit 2, I/O and
file-format errors exit 3, numeric/contract failures exit 4.
"""


class SarError(Exception):
    """Base class for all toolkit errors."""


class UsageError(SarError):
    """Bad command-line arguments or configuration."""


class DataIoError(SarError):
    """Underlying file could not be read or written."""


class FormatError(SarError):
    """File exists but its structure is not valid (bad magic, version,
    truncation, or a manifest/config digest mismatch)."""


class ChecksumError(FormatError):
    """Stored CRC32 does not match the payload."""


class ShapeMismatch(SarError):
    """Array dimensions incompatible with the requested operation."""


class TargetOutOfSwath(SarError):
    """Scene contains a target outside the range swath of the radar config."""


class LooksMismatch(SarError):
    """Multilook count does not divide the azimuth dimension."""


class FactorMismatch(SarError):
    """Resampling factor does not divide the matrix dimensions."""


class DegenerateData(SarError):
    """Dataset statistics are degenerate (zero max magnitude, flat images)."""


class BadSplit(SarError):
    """Requested train/validation split is impossible."""


class StaleCache(SarError):
    """backward() called without a matching train-mode forward()."""


class BadLabel(SarError):
    """Class label index out of range for the logit vector."""


class EmptySet(SarError):
    """Metric requested over an empty collection."""


class NoPeak(SarError):
    """Point-target analysis found no dominant peak in the image."""
