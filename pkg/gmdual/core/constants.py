"""
Constants for the gmdual package.

This module provides constants used throughout the gmdual package.
These constants can be easily changed in one place.
"""

# Report formats
DEFAULT_REPORT_FORMAT = "text"
SUPPORTED_REPORT_FORMATS = ["text", "json"]

# Bases of the Gauss-Manin system
BASIS_OMEGA = "omega"
BASIS_OMEGA_TILDE = "omega_tilde"
SUPPORTED_BASES = [BASIS_OMEGA, BASIS_OMEGA_TILDE]

# Lattices
LATTICE_G0_STAR = "G0star"
LATTICE_G0_LOG = "G0log"

# Check statuses
STATUS_PASS = "PASS"
STATUS_FAIL = "FAIL"
STATUS_ERROR = "ERROR"

# Exit codes
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT_ERROR = 2

# Pairing solver
DEFAULT_MAX_TILDE_SHIFT = 2
DEFAULT_LATTICE_TRIALS = 100
DEFAULT_RANDOM_SEED = 20240101

# Operator language
DEFAULT_MAX_EXPONENT = 64

# Suite runner
DEFAULT_SUITE_JOBS = 1
DEFAULT_INSTANCE_PATTERNS = ["*.json", "*.yaml", "*.yml"]

# Convention labels recorded in reports
IOTA_VARIABLE = "theta"  # iota acts by theta -> -theta, dtheta -> -dtheta
P1_PRIME_CONSTANT = "c/n^n"
