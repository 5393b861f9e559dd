"""
Connection matrices of the Gauss-Manin system in the basis omega (or
omega-tilde).

The connection reads nabla(omega) = omega * (M_theta dtheta + M_t dt) with

    M_theta = A0 / theta^2 + Ainf / theta
    M_t     = (-A0 / theta + Ainf_prime) / (n t)

where A0 is the companion matrix with corner c*t and subdiagonal -1,
Ainf = diag(nu) and Ainf_prime = diag(0, 1, ..., n-1) - Ainf.
"""

from dataclasses import dataclass
from typing import Optional

import sympy

from gmdual.core.constants import BASIS_OMEGA, BASIS_OMEGA_TILDE, SUPPORTED_BASES
from gmdual.core.error_handler import ValidationError
from gmdual.core.logging_config import get_logger
from gmdual.ore.sympy_bridge import THETA_SYMBOL, T_SYMBOL
from gmdual.presentation.spectrum import SpectrumInstance

logger = get_logger(__name__)


def _rational(value) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


@dataclass(frozen=True)
class ConnectionData:
    """
    The matrices A0, Ainf and Ainf_prime for one basis.

    Attributes:
        n: Rank
        A0: Companion-shaped matrix over Q[t]
        Ainf: Constant diagonal matrix
        Ainf_prime: Constant diagonal matrix
        basis_tag: "omega" or "omega_tilde"
    """

    n: int
    A0: sympy.ImmutableMatrix
    Ainf: sympy.ImmutableMatrix
    Ainf_prime: sympy.ImmutableMatrix
    basis_tag: str = BASIS_OMEGA

    def theta_component(self) -> sympy.ImmutableMatrix:
        """M_theta = A0/theta^2 + Ainf/theta."""
        return sympy.ImmutableMatrix(self.A0 / THETA_SYMBOL ** 2 + self.Ainf / THETA_SYMBOL)

    def t_component(self) -> sympy.ImmutableMatrix:
        """M_t = (-A0/theta + Ainf_prime) / (n t)."""
        return sympy.ImmutableMatrix((-self.A0 / THETA_SYMBOL + self.Ainf_prime) / (self.n * T_SYMBOL))

    def nonzero_A0_entries(self) -> int:
        return sum(1 for entry in self.A0 if entry != 0)


def companion_matrix(n: int, corner) -> sympy.ImmutableMatrix:
    """Companion matrix with (1, n) = corner * t and (i+1, i) = -1."""
    entries = sympy.zeros(n, n)
    for i in range(n - 1):
        entries[i + 1, i] = -1
    entries[0, n - 1] = entries[0, n - 1] + corner * T_SYMBOL
    return sympy.ImmutableMatrix(entries)


def build_connection(instance: SpectrumInstance, basis: str = BASIS_OMEGA, c_sign: int = 1) -> ConnectionData:
    """
    Build the connection matrices of ``instance``.

    Args:
        instance: Spectral data
        basis: "omega" (Ainf = diag(nu)) or "omega_tilde" (Ainf = diag(nu_tilde))
        c_sign: +1 or -1; the corner entry becomes c_sign * c * t

    Returns:
        ConnectionData: The matrices

    Raises:
        ValidationError: If the basis is unknown or nu_tilde is required but absent
    """
    if basis not in SUPPORTED_BASES:
        raise ValidationError(f"Unknown basis {basis!r}", field="basis", value=basis)

    spectrum: Optional[tuple] = instance.nu
    if basis == BASIS_OMEGA_TILDE:
        spectrum = instance.nu_tilde
        if spectrum is None:
            raise ValidationError("nu_tilde required", field="nu_tilde")

    n = instance.n
    A0 = companion_matrix(n, c_sign * _rational(instance.c))
    Ainf = sympy.ImmutableMatrix(sympy.diag(*[_rational(v) for v in spectrum]))
    Ainf_prime = sympy.ImmutableMatrix(sympy.diag(*[i - _rational(v) for i, v in enumerate(spectrum)]))

    logger.debug(f"Built {basis} connection for n={n}")
    return ConnectionData(n=n, A0=A0, Ainf=Ainf, Ainf_prime=Ainf_prime, basis_tag=basis)


def curvature_check(conn: ConnectionData) -> sympy.ImmutableMatrix:
    """
    Curvature residual d_theta M_t - d_t M_theta + M_theta M_t - M_t M_theta.

    Returns:
        sympy.ImmutableMatrix: Entrywise simplified residual, zero for a flat connection
    """
    m_theta = conn.theta_component()
    m_t = conn.t_component()
    residual = m_t.diff(THETA_SYMBOL) - m_theta.diff(T_SYMBOL) + m_theta * m_t - m_t * m_theta
    residual = residual.applyfunc(sympy.cancel)
    logger.debug(f"Curvature residual ({conn.basis_tag}): {residual}")
    return sympy.ImmutableMatrix(residual)


def is_flat(conn: ConnectionData) -> bool:
    return all(entry == 0 for entry in curvature_check(conn))


def substitute_minus_theta(matrix: sympy.MatrixBase) -> sympy.ImmutableMatrix:
    """Entrywise theta -> -theta."""
    return sympy.ImmutableMatrix(matrix.subs(THETA_SYMBOL, -THETA_SYMBOL))

