"""Exception hierarchy shared by all modules."""


class LmwError(Exception):
    """Base class for every error raised by :mod:`lmwidth`."""


class DomainError(LmwError, ValueError):
    """An argument lies outside the operation's domain (bad id, non-tree, ...)."""


class ResourceError(LmwError, RuntimeError):
    """A configured work limit (oracle cutoff, MIM node budget) was exceeded."""


class InternalError(LmwError, AssertionError):
    """A self-check failed. Always indicates a bug in this library."""


class CertificateError(DomainError):
    """A lower-bound certificate violates one of its hypotheses.

    ``node`` is the slash-separated path of the offending node from the root
    (``"/"`` for the root itself, ``"/children/1"`` for its second child) and
    ``condition`` a short machine-readable tag such as ``"distance"``.
    """

    def __init__(self, node: str, condition: str, message: str):
        super().__init__(f"{node}: [{condition}] {message}")
        self.node = node
        self.condition = condition
