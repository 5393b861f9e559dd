"""
The flat, (-1)^(n-1)-symmetric pairing: solving for its Gram matrix and
checking its structure.
"""

from gmdual.pairing.gram_solver import (
    CONVENTIONS,
    FlatGramSolution,
    GramMatrix,
    solve_flat_gram,
    verify_flatness,
)
from gmdual.pairing.gram_checks import (
    InducedPairing,
    check_symmetry,
    check_homogeneity,
    check_lattice_compat,
    is_lattice_vector,
    induced_S0,
    check_pole_orders,
    check_nondegenerate,
)
