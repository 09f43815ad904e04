"""Exception types shared across the scheme and protocol layers."""


class FedMifeError(Exception):
    """Base class for all library-specific failures."""


class DlogNotFoundError(FedMifeError):
    """No exponent inside the requested search window matches the target."""


class NoiseOverflowError(FedMifeError):
    """Accumulated lattice noise pushed a decryption outside its result bound."""


class ResultWindowError(FedMifeError):
    """A recovered residue has no representative inside the caller's window."""


class AggregationError(FedMifeError):
    """Server-side aggregation failed; may indicate mixed-round ciphertexts."""
