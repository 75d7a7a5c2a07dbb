"""Exception types shared across the package."""


class ContractViolation(ValueError):
    """An operation was called outside its documented preconditions."""


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSizeError(ValueError):
    """Graph size outside the supported range."""


class TheoremViolation(RuntimeError):
    """A verified statement failed on a concrete instance.

    Raised loudly and never swallowed: either the instance is a genuine
    counterexample or, far more likely, an implementation bug upstream.
    """


class CorpusCorruptionError(RuntimeError):
    """Corpus file and its metadata sidecar disagree."""
