"""Error types shared across the package.

The CLI maps these onto exit codes: usage / configuration problems
exit 2, resource-cap overruns exit 3, and a refuted verification
property exits 1.
"""


class ConfigError(ValueError):
    """Malformed input: bad literal, bad parameter combination,
    window too short for the requested analysis, and so on."""


class DomainError(ValueError):
    """Operation applied outside its mathematical domain, e.g. a
    rational slope where an irrational one is required."""


class ResourceCapError(RuntimeError):
    """A search exceeded its configured state cap.  `partial` holds
    whatever was collected before the cap was hit."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
