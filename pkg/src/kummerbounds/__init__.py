"""Two-sided bounds for the Kummer confluent hypergeometric function."""

__version__ = "0.1.0"
