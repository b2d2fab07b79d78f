"""Box-office prediction from actor social graphs, post sentiment, and cast features."""

__version__ = "0.1.0"

from .errors import DataError, FormatError, NumericError, UsageError

__all__ = ["DataError", "FormatError", "NumericError", "UsageError", "__version__"]
