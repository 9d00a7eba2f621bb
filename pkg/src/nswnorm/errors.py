"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Malformed input: bad label, bad corpus line, bad model file, ..."""


class TrainingError(RuntimeError):
    """Training diverged or hit a numerical failure (NaN/inf objective)."""
