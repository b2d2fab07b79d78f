"""Exception taxonomy shared by the library and the CLI.

The CLI maps these onto exit codes: UsageError -> 1, DataError -> 2,
NumericError -> 3.
"""


class UsageError(Exception):
    """Bad flags, bad config keys, or inconsistent run options."""


class DataError(Exception):
    """Malformed or inconsistent input data (files, rows, references)."""


class FormatError(DataError):
    """A binary artifact (distance matrix, model file, checkpoint) is corrupt."""


class NumericError(Exception):
    """Training or evaluation produced non-finite numbers."""
