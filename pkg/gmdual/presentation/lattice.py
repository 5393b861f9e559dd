"""
Lattice statements about the Gauss-Manin system.

- G0star: the Brieskorn lattice, spanned by the Q_i over Q[theta, t, t^-1]
- G0log: the logarithmic lattice, spanned by the Q_i over Q[theta, t]

Also the Jacobian-algebra relation (theta*t*dt)^n == (c/n^n)*t modulo theta
and the homogeneity bookkeeping of the generators.
"""

from typing import List, NamedTuple, Optional

import sympy

from gmdual.core.constants import LATTICE_G0_LOG, LATTICE_G0_STAR
from gmdual.core.error_handler import ValidationError
from gmdual.core.logging_config import get_logger
from gmdual.core.results import CheckResult
from gmdual.ore.algebra import DT, DTHETA, THETA, OreOperator, mul
from gmdual.ore.sympy_bridge import to_sympy
from gmdual.ore.weights import WeightVector, weighted_degree
from gmdual.presentation.generators import EULER, GeneratorSet
from gmdual.presentation.normal_form import Presentation, normal_form, presentation_of

logger = get_logger(__name__)

STABILITY_OPERATORS = {
    LATTICE_G0_STAR: (("theta^2*dtheta", mul(THETA ** 2, DTHETA)), ("theta*dt", mul(THETA, DT))),
    LATTICE_G0_LOG: (("theta^2*dtheta", mul(THETA ** 2, DTHETA)), ("theta*t*dt", mul(THETA, EULER))),
}


class LatticeMembership(NamedTuple):
    member: bool
    witness: Optional[str] = None


def _offending_monomial(coefficient: OreOperator, which: str) -> Optional[str]:
    for (a, b, _, _), c in sorted(coefficient.terms.items()):
        if a < 0 or (which == LATTICE_G0_LOG and b < 0):
            return str(OreOperator.monomial(c, a, b))
    return None


def lattice_membership(op: OreOperator, gens: GeneratorSet, which: str = LATTICE_G0_STAR,
                       presentation: Optional[Presentation] = None) -> LatticeMembership:
    """
    Whether the class of ``op`` lies in the lattice ``which``.

    Args:
        op: Any operator
        gens: Generators of the instance
        which: "G0star" (coefficients in Q[theta, t, t^-1]) or "G0log"
            (coefficients in Q[theta, t])

    Returns:
        LatticeMembership: The verdict and the first offending monomial
    """
    if which not in STABILITY_OPERATORS:
        raise ValidationError(f"Unknown lattice {which!r}", field="which", value=which)

    for coefficient in normal_form(op, gens, presentation):
        witness = _offending_monomial(coefficient, which)
        if witness is not None:
            return LatticeMembership(False, witness)
    return LatticeMembership(True)


def lattice_stability_check(gens: GeneratorSet, presentation: Optional[Presentation] = None) -> List[CheckResult]:
    """
    G0star is stable under theta^2*dtheta and theta*dt, G0log under
    theta^2*dtheta and theta*t*dt; checked on every Q_i.
    """
    presentation = presentation or presentation_of(gens)
    results = []
    for which, operators in STABILITY_OPERATORS.items():
        failures = []
        for name, operator in operators:
            for i, q in enumerate(gens.Q):
                membership = lattice_membership(mul(operator, q), gens, which, presentation)
                if not membership.member:
                    failures.append(f"{name}*Q_{i}: {membership.witness}")
        results.append(CheckResult(f"lattice_stability_{which}", not failures, "; ".join(failures)))
    return results


def jacobian_identity_check(gens: GeneratorSet, presentation: Optional[Presentation] = None) -> CheckResult:
    """
    (theta*t*dt)^n == (c/n^n)*t*Q_0 modulo theta times the lattice, and the
    classes of (theta*t*dt)^i for i < n reduce to the unit vectors modulo
    theta, so the quotient at theta = 0 has rank n.
    """
    presentation = presentation or presentation_of(gens)
    n = gens.n
    theta_euler = mul(THETA, EULER)
    problems = []

    top = normal_form(theta_euler ** n, gens, presentation)
    expected = OreOperator.monomial(gens.instance.k, 0, 1)
    for i, coefficient in enumerate(top):
        correction = coefficient - expected if i == 0 else coefficient
        bad = [e for e in correction.terms if e[0] < 1]
        if bad:
            problems.append(f"coefficient {i} of (theta*t*dt)^{n} - (c/n^n)*t is not divisible by theta: {correction}")

    rows = []
    for i in range(n):
        coefficients = normal_form(theta_euler ** i, gens, presentation)
        if any(a < 0 for h in coefficients for (a, _, _, _) in h.terms):
            problems.append(f"(theta*t*dt)^{i} is not in the lattice")
        rows.append([to_sympy(h.part(lambda e: e[0] == 0)) for h in coefficients])
    rank = sympy.Matrix(rows).rank()
    if rank != n:
        problems.append(f"rank of the quotient at theta = 0 is {rank}, expected {n}")

    logger.info(f"Jacobian identity for n={n}: {'ok' if not problems else problems}")
    return CheckResult("jacobian_identity", not problems, "; ".join(problems) or f"rank {rank}")


def check_grading(gens: GeneratorSet) -> CheckResult:
    """
    Homogeneity under deg theta = 1, deg t = n: P1, P1t of degree n, P2, P2t
    of degree 1 and a of degree 2n+2.
    """
    n = gens.n
    grading = WeightVector.grading(n)
    expected = {
        "P1": (gens.P1, n),
        "P1t": (gens.P1t, n),
        "P2": (gens.P2, 1),
        "P2t": (gens.P2t, 1),
        "a": (gens.a, 2 * n + 2),
    }
    problems = []
    for name, (op, degree) in expected.items():
        found = weighted_degree(op, grading)
        if found != (degree, True):
            problems.append(f"{name}: degree {found.degree}, homogeneous {found.homogeneous}, expected {degree}")
    return CheckResult("grading", not problems, "; ".join(problems))
