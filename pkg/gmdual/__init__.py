"""
gmdual - Exact verification of self-duality for Gauss-Manin systems of
linear free divisors.

Works in the Ore algebra Q[theta^+-1, t^+-1]<dtheta, dt> with exact rational
arithmetic: builds the two-generator presentation of a spectrum, checks its
holonomic self-duality identities and solves for the flat pairing.
"""

__version__ = "0.1.0"

# Import main components for easier access
from gmdual.ore.algebra import OreOperator, mul, transpose, iota
from gmdual.oplang import parse_operator, to_text
from gmdual.presentation import SpectrumInstance, InstanceLoader, build_generators, build_connection, normal_form
from gmdual.pairing import solve_flat_gram
from gmdual.pipeline import VerificationRunner, SuiteRunner
