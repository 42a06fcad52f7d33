"""Error taxonomy shared across modules; the CLI maps these to exit codes."""


class SpinsumError(Exception):
    """Base class for everything this package raises on purpose."""


class InputError(SpinsumError):
    """Malformed or inconsistent input data (exit code 2)."""


class VerificationError(SpinsumError):
    """An axiom or identity check failed (exit code 1)."""


class CapExceeded(SpinsumError):
    """The multiplication budget ran out (exit code 3)."""
