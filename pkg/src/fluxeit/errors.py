class NumericsError(RuntimeError):
    """A numerical routine failed or produced results outside its tolerance."""


class ConfigError(ValueError):
    """A run configuration is malformed or violates a physical invariant."""
