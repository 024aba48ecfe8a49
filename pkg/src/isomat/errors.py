"""Shared exception types."""


class VerificationError(RuntimeError):
    """A computed value contradicts an identity the code relies on."""
