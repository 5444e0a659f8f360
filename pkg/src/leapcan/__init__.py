"""leapcan: lightweight encryption and authentication for CAN traffic.

Per-message RC4-keystream protection of CAN data fields, a session-key
update/distribution protocol run by a Secure ECU, an AES+MAC baseline for
comparison, a deterministic discrete-event bus simulator, an attack
harness, and analysis tooling. See README.md for the CLI.
"""

__version__ = "0.1.0"
