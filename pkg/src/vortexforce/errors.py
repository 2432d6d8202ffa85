"""Exception types shared across the package."""


class VortexForceError(Exception):
    """Base class for errors raised by this package."""


class ConfigError(VortexForceError):
    """Invalid configuration input (bad key, bad unit, bad value).

    Carries optional file/line/field context so the CLI can point at the
    offending line.
    """

    def __init__(self, message, *, path=None, line=None, field=None):
        self.path = path
        self.line = line
        self.field = field
        prefix = ""
        if path is not None:
            prefix = f"{path}:{line}: " if line is not None else f"{path}: "
        if field is not None:
            prefix += f"[{field}] "
        super().__init__(prefix + message)


class NumericsError(VortexForceError):
    """An internal numerical guard tripped (non-finite value, bad quadrature)."""


class QuadratureConvergenceError(NumericsError):
    """Power quadrature did not reach the requested relative tolerance."""


class DataFormatError(VortexForceError):
    """A dataset file does not match the expected CSV schema."""
