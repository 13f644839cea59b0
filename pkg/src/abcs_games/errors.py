"""Package-level exception types."""


class ConfigError(ValueError):
    """Raised for malformed, unknown, or out-of-range configuration."""
