"""Exception types shared by the package."""


class InvalidInput(ValueError):
    """An argument lies outside the documented domain of an operation."""


class ParityViolation(ValueError):
    """Adjunction produced a non-integral genus."""


class SequenceAssumptionViolated(RuntimeError):
    """The restriction sequence shortcut needs h1 = h2 = 0 for O_S(tH)."""


class UnknownComponent(KeyError):
    """No registered special profile for the requested component."""


class UnsupportedFormat(ValueError):
    """Render was asked for a format it does not know."""
