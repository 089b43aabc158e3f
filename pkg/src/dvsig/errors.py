"""Exception hierarchy shared across the package."""


class DVSError(Exception):
    """Base class for every error raised by this library."""


class NonInvertible(DVSError):
    """Requested the inverse of a residue that has none (zero mod a prime)."""


class OutOfRange(DVSError):
    """A scalar fell outside its required interval."""


class GenerationTimeout(DVSError):
    """Parameter search exhausted its attempt budget without a prime pair."""


class MessageTooLong(DVSError):
    """Payload does not fit into the group's message space."""


class MalformedEncoding(DVSError):
    """A residue does not carry the expected payload framing."""


class InvalidNonce(DVSError):
    """A signing nonce violated its domain (e.g. zero where Z_q* is required)."""


class InvalidRandomness(DVSError):
    """Simulator randomness violated its domain."""


class DegenerateHash(DVSError):
    """The hash landed on a value the simulator cannot invert (r = 0)."""


class InvalidSignature(DVSError):
    """Verification failed: hash mismatch or fields out of range."""


class InvalidPVSignature(InvalidSignature):
    """The publicly verifiable signature handed to the designator is invalid."""


class GroupTooLarge(DVSError):
    """Exhaustive enumeration was asked to iterate an infeasible group."""


class SchemeMismatch(DVSError):
    """Two signature multisets with different scheme tags were compared."""


class Malformed(DVSError):
    """A wire blob or armored file does not parse."""
