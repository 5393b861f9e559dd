"""
Self-duality of the Gauss-Manin system: resolution, dual presentation and
the twisted isomorphism given by right multiplication with theta^(n+2)*t.
"""

from gmdual.duality.checks import (
    IdentityCheck,
    PhiWellDefinedResult,
    check_commutator,
    check_resolution_complex,
    check_symbol_regularity,
    check_dual_generator,
    check_phi_welldefined,
    check_diagram8,
    check_p1prime,
    duality_sign,
    duality_results,
)
