"""
The operators attached to one spectrum.

With E = t*dt, a_i = (i - 1 - nu_i)/n and k = c/n^n:

    P1      = theta^n * prod(E - a_i) - k*t
    P2      = theta^2*dtheta + n*theta*E
    P1t     = transpose(P1) = (-theta)^n * prod(E + 1 + a_i) - k*t
    P2t     = transpose(P2) = -(theta^2*dtheta + n*theta*E + (n+2)*theta)
    Ptilde1 = (-theta)^n * prod(E + 1 - a_i) - k*t
    Ptilde2 = -P2t + n*theta
    P1prime = (-theta)^n * prod(E - a_i) - k*t
    a       = theta^(n+2) * t
    Q_i     = theta^i * prod_{j <= i}(E - a_j),   i = 0..n-1

theta commutes with E, so each product of factors theta*(E - a_i) is
theta^n times a polynomial in E.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from gmdual.core.error_handler import VerificationError
from gmdual.core.logging_config import get_logger
from gmdual.ore.algebra import DTHETA, ONE, THETA, T, DT, OreOperator, mul, transpose
from gmdual.presentation.spectrum import SpectrumInstance

logger = get_logger(__name__)

EULER = mul(T, DT)


def euler_product(shifts: Iterable[Fraction]) -> OreOperator:
    """prod_i (E + s_i) in normal order."""
    result = ONE
    for shift in shifts:
        result = mul(result, EULER + shift)
    return result


@dataclass(frozen=True)
class GeneratorSet:
    """The derived operators of one instance."""

    instance: SpectrumInstance
    P1: OreOperator
    P2: OreOperator
    P1t: OreOperator
    P2t: OreOperator
    Ptilde1: OreOperator
    Ptilde2: OreOperator
    P1prime: OreOperator
    a: OreOperator
    Q: Tuple[OreOperator, ...]

    @property
    def n(self) -> int:
        return self.instance.n


def build_generators(instance: SpectrumInstance) -> GeneratorSet:
    """
    Build P1, P2, their transposes, the dual generators, P1prime, a and the
    basis operators Q_i.

    P1t is computed both by transposition and by its explicit product formula.

    Raises:
        VerificationError: If transpose(P1) differs from the explicit P1t, or
            transpose(P2) from the explicit P2t.
    """
    n = instance.n
    a_values = instance.a_values()
    kt = OreOperator.monomial(instance.k, 0, 1)
    theta_n = OreOperator.monomial(1, n)
    minus_theta_n = OreOperator.monomial((-1) ** n, n)
    theta_euler = mul(THETA, EULER)

    P1 = mul(theta_n, euler_product(-a for a in a_values)) - kt
    P2 = mul(mul(THETA, THETA), DTHETA) + theta_euler * n

    P1t = transpose(P1)
    P1t_explicit = mul(minus_theta_n, euler_product(1 + a for a in a_values)) - kt
    if P1t != P1t_explicit:
        logger.error(f"transpose(P1) mismatch for n={n}: residual {P1t - P1t_explicit}")
        raise VerificationError("transpose(P1) differs from the explicit P1t", check="build_generators",
                                detail=str(P1t - P1t_explicit))

    P2t = transpose(P2)
    P2t_explicit = -(P2 + THETA * (n + 2))
    if P2t != P2t_explicit:
        raise VerificationError("transpose(P2) differs from the explicit P2t", check="build_generators",
                                detail=str(P2t - P2t_explicit))

    Ptilde1 = mul(minus_theta_n, euler_product(1 - a for a in a_values)) - kt
    Ptilde2 = -P2t + THETA * n
    P1prime = mul(minus_theta_n, euler_product(-a for a in a_values)) - kt
    a_op = OreOperator.monomial(1, n + 2, 1)

    Q = [ONE]
    for i in range(1, n):
        Q.append(mul(mul(THETA, Q[-1]), EULER - a_values[i - 1]))

    logger.debug(f"Built generators for n={n}: P1 = {P1}")
    return GeneratorSet(
        instance=instance,
        P1=P1,
        P2=P2,
        P1t=P1t,
        P2t=P2t,
        Ptilde1=Ptilde1,
        Ptilde2=Ptilde2,
        P1prime=P1prime,
        a=a_op,
        Q=tuple(Q),
    )
