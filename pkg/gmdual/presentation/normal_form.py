"""
Normal forms in quotient modules D / D(L, M).

A presentation (L, M) is accepted when

- L is free of dtheta and its top dt-coefficient is a unit monomial, and
- M = u*dtheta + R with u a unit monomial and R free of dtheta.

Under these conditions the quotient is free over Q[theta^±1, t^±1] with basis
1, dt, ..., dt^(n-1) where n is the dt-degree of L. ``reduce`` returns the
unique representative in that span; ``normal_form`` then rewrites it in the
basis Q_0..Q_(n-1) of the instance.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from gmdual.core.error_handler import VerificationError
from gmdual.core.logging_config import get_logger
from gmdual.ore.algebra import DT, ZERO, OreOperator, mul
from gmdual.presentation.generators import GeneratorSet

logger = get_logger(__name__)


def _is_unit(op: OreOperator) -> bool:
    return op.is_monomial() and op.is_function()


class Presentation:
    """
    A pair (L, M) of left-ideal generators in the accepted shape.

    Raises:
        VerificationError: If L or M is not of the accepted shape.
    """

    def __init__(self, L: OreOperator, M: OreOperator):
        if L.is_zero() or L.theta_derivation_degree() != 0:
            raise VerificationError("first generator must be free of dtheta", check="presentation", detail=str(L))
        self.L = L
        self.rank = L.dt_degree()
        self.leading = OreOperator({
            (a, b, 0, 0): c for (a, b, _, q), c in L.terms.items() if q == self.rank
        })
        if not _is_unit(self.leading):
            raise VerificationError("leading dt-coefficient is not a unit", check="presentation",
                                    detail=str(self.leading))

        if M.theta_derivation_degree() != 1:
            raise VerificationError("second generator must be linear in dtheta", check="presentation", detail=str(M))
        self.M = M
        u = OreOperator({(a, b, 0, 0): c for (a, b, p, q), c in M.terms.items() if p == 1})
        if not _is_unit(u) or any(p == 1 and q for (_, _, p, q) in M.terms):
            raise VerificationError("dtheta-coefficient is not a unit", check="presentation", detail=str(M))
        self.u_inverse = u ** -1
        self.leading_inverse = self.leading ** -1
        # u^-1 * M = dtheta + u^-1 * R
        self.M_monic = mul(self.u_inverse, M)

    def reduce(self, op: OreOperator) -> OreOperator:
        """
        Reduce ``op`` modulo the left ideal D*L + D*M.

        Returns:
            OreOperator: Free of dtheta with dt-degree below the rank
        """
        current = op

        # Eliminate dtheta from the top degree down: left*dtheta == -left*u^-1*R.
        while current.theta_derivation_degree() > 0:
            degree = current.theta_derivation_degree()
            left = OreOperator({
                (a, b, p - 1, q): c for (a, b, p, q), c in current.terms.items() if p == degree
            })
            current = current - mul(left, self.M_monic)

        # Right division by L in the dt-variable.
        while current.dt_degree() >= self.rank:
            degree = current.dt_degree()
            top = OreOperator({(a, b, 0, 0): c for (a, b, _, q), c in current.terms.items() if q == degree})
            quotient = mul(mul(top, self.leading_inverse), DT ** (degree - self.rank))
            current = current - mul(quotient, self.L)

        return current


def reduce(op: OreOperator, presentation: Presentation) -> OreOperator:
    """Reduce ``op`` modulo the presentation; see Presentation.reduce."""
    return presentation.reduce(op)


@dataclass(frozen=True)
class QCoefficients:
    """
    Coefficients h_0..h_(n-1) of a class sum_i h_i * Q_i.

    Each h_i is a derivation-free operator, i.e. a Laurent polynomial in
    theta and t.
    """

    coeffs: Tuple[OreOperator, ...]

    def __iter__(self) -> Iterator[OreOperator]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, index: int) -> OreOperator:
        return self.coeffs[index]

    def is_zero(self) -> bool:
        return all(h.is_zero() for h in self.coeffs)

    def representative(self, gens: GeneratorSet) -> OreOperator:
        """The operator sum_i h_i * Q_i."""
        total = ZERO
        for h, q in zip(self.coeffs, gens.Q):
            total = total + mul(h, q)
        return total

    def to_strings(self) -> List[str]:
        return [str(h) for h in self.coeffs]


def presentation_of(gens: GeneratorSet) -> Presentation:
    """The presentation (P1, P2) of the Gauss-Manin system."""
    return Presentation(gens.P1, gens.P2)


def to_q_basis(remainder: OreOperator, gens: GeneratorSet) -> QCoefficients:
    """
    Rewrite a reduced representative sum_q f_q * dt^q in the basis Q_i.

    The top dt-term of Q_q is theta^q t^q dt^q, so the change of basis is
    unitriangular.
    """
    n = gens.n
    current = remainder
    coeffs: List[OreOperator] = [ZERO] * n
    for q in range(n - 1, -1, -1):
        f_q = OreOperator({(a, b, 0, 0): c for (a, b, _, s), c in current.terms.items() if s == q})
        if f_q.is_zero():
            continue
        h_q = mul(f_q, OreOperator.monomial(1, -q, -q))
        coeffs[q] = h_q
        current = current - mul(h_q, gens.Q[q])
    if not current.is_zero():
        raise VerificationError("remainder not in the span of Q_i", check="normal_form", detail=str(current))
    return QCoefficients(tuple(coeffs))


def normal_form(op: OreOperator, gens: GeneratorSet, presentation: Optional[Presentation] = None) -> QCoefficients:
    """
    Coefficients of the class of ``op`` in the basis Q_0..Q_(n-1).

    Args:
        op: Any operator
        gens: Generators of the instance
        presentation: Pre-built presentation (P1, P2), built on demand if omitted

    Returns:
        QCoefficients: The unique Q-basis coefficients
    """
    presentation = presentation or presentation_of(gens)
    remainder = presentation.reduce(op)
    result = to_q_basis(remainder, gens)
    logger.debug(f"normal_form({op}) = {result.to_strings()}")
    return result
