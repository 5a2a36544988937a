"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Invalid or out-of-domain input."""


class SizeMismatchError(ValidationError):
    """Partition and cycle type have different sizes."""


class FirstRowGuardError(ValidationError):
    """The first-row closed form does not apply to these inputs."""


class EnumerationLimitError(ValidationError):
    """Exhaustive enumeration was requested beyond its feasible size."""


class CrossCheckError(RuntimeError):
    """Two algorithms that must agree produced different values."""
