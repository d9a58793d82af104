"""Exception types shared across the package."""


class DataError(ValueError):
    """Invalid or inconsistent input data: parse failures, bad labels,
    dimension mismatches, violated interval invariants."""


class NumericError(RuntimeError):
    """Numerical failure: eigensolver non-convergence, rank deficiency."""
