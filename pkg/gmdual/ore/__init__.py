"""
Exact arithmetic in the two-variable Ore algebra Q[theta^±1, t^±1]<dtheta, dt>.
"""

from gmdual.ore.algebra import (
    OreOperator,
    mul,
    commutator,
    transpose,
    iota,
    ZERO,
    ONE,
    THETA,
    T,
    DTHETA,
    DT,
)
from gmdual.ore.weights import (
    WeightVector,
    WeightedDegree,
    SymbolPolynomial,
    weighted_degree,
    symbol,
    is_regular_symbol_pair,
)
from gmdual.ore.sympy_bridge import THETA_SYMBOL, T_SYMBOL, to_sympy, from_sympy
from gmdual.ore.oracle import apply
