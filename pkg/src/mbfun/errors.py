"""Package-wide error types."""


class CapabilityError(RuntimeError):
    """Input exceeds the configured desk-scale bounds."""


class NotSpecializableError(RuntimeError):
    """Elimination returned the zero ideal at the configured degree cap."""


class ZeroSpecializationError(RuntimeError):
    """A Bernstein-Sato ideal element vanished identically on the chosen line."""


class CertificationError(RuntimeError):
    """Engine and oracle disagree; this is a bug, never shipped output."""
