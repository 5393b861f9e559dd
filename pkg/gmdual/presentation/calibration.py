"""
Matching the operator presentation against the connection matrices.

The class Q_i corresponds to n^-i * omega_(i+1). For D in {dt, dtheta} the
Q-coefficients h of D*Q_j must then satisfy h_i = n^(i-j) * M[i, j], where M
is the matching connection component. The corner constant of the matrices
is tried with both signs and the one that matches is reported.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import sympy

from gmdual.core.constants import BASIS_OMEGA
from gmdual.core.error_handler import VerificationError
from gmdual.core.logging_config import get_logger
from gmdual.ore.algebra import DT, DTHETA, mul
from gmdual.ore.sympy_bridge import to_sympy
from gmdual.presentation.connection import build_connection
from gmdual.presentation.generators import GeneratorSet, build_generators
from gmdual.presentation.normal_form import Presentation, QCoefficients, normal_form, presentation_of
from gmdual.presentation.spectrum import SpectrumInstance

logger = get_logger(__name__)

CANDIDATE_SIGNS = (1, -1)


@dataclass
class CalibrationResult:
    """
    Attributes:
        sign: The corner sign s that makes presentation and connection agree
        mismatches: For every tried sign, the entries that disagreed
    """

    sign: int
    mismatches: Dict[int, List[str]] = field(default_factory=dict)

    @property
    def residual_zero(self) -> bool:
        return not self.mismatches.get(self.sign)


def derivative_actions(gens: GeneratorSet, presentation: Optional[Presentation] = None) -> Dict[str, List[QCoefficients]]:
    """normal_form(D * Q_j) for D = dt, dtheta and every j."""
    presentation = presentation or presentation_of(gens)
    return {
        name: [normal_form(mul(derivation, q), gens, presentation) for q in gens.Q]
        for name, derivation in (("dt", DT), ("dtheta", DTHETA))
    }


def compare_with_connection(instance: SpectrumInstance, actions: Dict[str, List[QCoefficients]], sign: int) -> List[str]:
    """Entries where the module action and the matrix action disagree."""
    n = instance.n
    conn = build_connection(instance, BASIS_OMEGA, c_sign=sign)
    matrices = {"dt": conn.t_component(), "dtheta": conn.theta_component()}

    mismatches = []
    for name, columns in actions.items():
        matrix = matrices[name]
        for j, coefficients in enumerate(columns):
            for i in range(n):
                expected = sympy.Rational(n) ** (i - j) * matrix[i, j]
                difference = sympy.cancel(to_sympy(coefficients[i]) - expected)
                if difference != 0:
                    mismatches.append(f"{name}*Q_{j}, coefficient of Q_{i}: residual {difference}")
    return mismatches


def phi_calibrate(instance: SpectrumInstance, gens: Optional[GeneratorSet] = None,
                  presentation: Optional[Presentation] = None) -> CalibrationResult:
    """
    Find the sign s for which the presentation matches the connection with
    corner s*c*t.

    Args:
        instance: Validated spectral data
        gens: Pre-built generators, built on demand if omitted
        presentation: Pre-built presentation (P1, P2)

    Returns:
        CalibrationResult: The sign and the mismatches of every tried sign

    Raises:
        VerificationError: "presentation/connection incompatible" when no sign matches
    """
    gens = gens or build_generators(instance)
    actions = derivative_actions(gens, presentation)

    mismatches: Dict[int, List[str]] = {}
    for sign in CANDIDATE_SIGNS:
        mismatches[sign] = compare_with_connection(instance, actions, sign)
        if not mismatches[sign]:
            logger.info(f"phi calibrated with corner sign {sign:+d}")
            return CalibrationResult(sign=sign, mismatches={s: m for s, m in mismatches.items() if m})

    detail = "; ".join(f"s={s:+d}: {m[0]}" for s, m in mismatches.items())
    logger.error(f"No corner sign matches: {detail}")
    raise VerificationError("presentation/connection incompatible", check="phi_calibrate", detail=detail)
