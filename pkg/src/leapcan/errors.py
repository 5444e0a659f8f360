"""Exception hierarchy shared across the package."""


class LeapcanError(Exception):
    """Base class for every error raised by leapcan."""


class FrameError(LeapcanError):
    """Malformed CAN identifier, frame, or data-field access."""


class PayloadOverflowError(LeapcanError):
    """Payload does not fit in the data field next to the identifier tag."""


class KeyLengthError(LeapcanError):
    """Cryptographic key has an unsupported length."""


class AuthenticationError(LeapcanError):
    """A MAC check on key-management material failed."""


class RekeyRequiredError(LeapcanError):
    """Per-session message limit reached; a key update is due first."""


class ProvisioningError(LeapcanError):
    """Key-store lookup failed: unknown ECU, missing key, or unknown pair."""


class ReassemblyError(LeapcanError):
    """Fragmented key-management payload could not be reassembled."""


class ProtocolError(LeapcanError):
    """Endpoint state used in a way its role does not allow."""


class SimulationError(LeapcanError):
    """Invalid simulation setup or impossible bus state."""


class ConfigError(LeapcanError):
    """Bad scenario, key-store, or CLI configuration."""
