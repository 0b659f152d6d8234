"""Exception hierarchy shared by all modules.

Exit-code mapping used by the CLI: parse failures -> 2, precondition
violations -> 3, internal re-check failures (bugs) -> 4.
"""


class UrysohnError(Exception):
    """Base class for all library errors."""


class ParseError(UrysohnError):
    """Malformed input data (JSON payloads, rational literals)."""


class StructureError(UrysohnError):
    """Structurally invalid value (e.g. matrix/label dimension mismatch).

    Distinct from a metric-axiom violation, which is reported, not raised.
    """


class PreconditionError(UrysohnError):
    """An operation was called with arguments violating its contract."""


class InternalCheckError(UrysohnError):
    """A postcondition re-check failed.  Always a bug, never expected."""
