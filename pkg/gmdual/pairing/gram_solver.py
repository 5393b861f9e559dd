"""
Solving for the flat pairing as a Gram matrix.

The Gram matrix G of a pairing S between the connection nabla and its
pull-back under iota satisfies

    d_theta G = M_theta^T G + G N_theta
    d_t G     = M_t^T G + G N_t

where (N_theta, N_t) depends on the sign convention of the pull-back:

- ``iota_pullback``:     N_theta = -M_theta(-theta, t), N_t = M_t(-theta, t)
- ``iota_substitution``: N_theta =  M_theta(-theta, t), N_t = M_t(-theta, t)
- ``untwisted``:         N_theta =  M_theta,            N_t = M_t

Only the two iota conventions can give the flat pairing, and exactly one of
them must admit a solution. ``untwisted`` is solved as a control and its
nullspace dimension is recorded, never adopted.

Entry (i, j) (1-based) is sought in the span of theta^alpha t^beta with
alpha + n*beta = i + j - 2 + 2*k*n and |beta| bounded. Matching coefficients
monomial by monomial turns both equations into a sparse linear system over Q,
whose nullspace is computed with SymPy's DomainMatrix.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from gmdual.core.config import get_config_value
from gmdual.core.constants import BASIS_OMEGA, BASIS_OMEGA_TILDE, DEFAULT_MAX_TILDE_SHIFT
from gmdual.core.error_handler import ValidationError, VerificationError, validate_configuration
from gmdual.core.logging_config import get_logger
from gmdual.ore.algebra import OreOperator, iota
from gmdual.ore.sympy_bridge import THETA_SYMBOL, T_SYMBOL, from_sympy, to_sympy
from gmdual.presentation.connection import ConnectionData, substitute_minus_theta

logger = get_logger(__name__)

CONVENTION_IOTA_PULLBACK = "iota_pullback"
CONVENTION_IOTA_SUBSTITUTION = "iota_substitution"
CONVENTION_UNTWISTED = "untwisted"
CONVENTIONS = (CONVENTION_IOTA_PULLBACK, CONVENTION_IOTA_SUBSTITUTION, CONVENTION_UNTWISTED)
IOTA_CONVENTIONS = (CONVENTION_IOTA_PULLBACK, CONVENTION_IOTA_SUBSTITUTION)

PAIRING_CONFIG_KEYS = ["t_bound", "max_tilde_shift", "lattice_trials", "random_seed"]

LaurentMatrix = Tuple[Tuple[OreOperator, ...], ...]
Unknown = Tuple[int, int, int, int]


@dataclass(frozen=True)
class GramMatrix:
    """
    Gram matrix of the pairing in the basis omega or omega-tilde.

    Attributes:
        entries: n x n derivation-free operators (Laurent polynomials)
        basis_tag: "omega" or "omega_tilde"
        normalization: How the free scalar was fixed
        shift: The degree shift k of the omega-tilde basis, 0 for omega
    """

    entries: LaurentMatrix
    basis_tag: str = BASIS_OMEGA
    normalization: str = ""
    shift: int = 0

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> OreOperator:
        """0-based entry access."""
        return self.entries[i][j]

    def scaled(self, factor) -> "GramMatrix":
        factor = Fraction(factor)
        if not factor:
            raise ValidationError("scaling factor must be non-zero", field="factor", value=factor)
        return GramMatrix(
            entries=tuple(tuple(e * factor for e in row) for row in self.entries),
            basis_tag=self.basis_tag,
            normalization=f"{self.normalization} scaled by {factor}",
            shift=self.shift,
        )

    def transpose(self) -> "GramMatrix":
        return GramMatrix(
            entries=tuple(zip(*self.entries)),
            basis_tag=self.basis_tag,
            normalization=self.normalization,
            shift=self.shift,
        )

    def to_sympy(self) -> sympy.ImmutableMatrix:
        return sympy.ImmutableMatrix([[to_sympy(e) for e in row] for row in self.entries])

    def to_strings(self) -> List[List[str]]:
        return [[str(e) for e in row] for row in self.entries]


@dataclass
class FlatGramSolution:
    """
    Attributes:
        dimension: Nullspace dimension under the recorded convention
        gram: The normalized solution
        convention: The iota convention with a non-zero nullspace
        dimensions: Nullspace dimension under every convention tried,
            including the untwisted control
        t_bound: The |beta| bound at which the solution was found
    """

    dimension: int
    gram: GramMatrix
    convention: str
    dimensions: Dict[str, int] = field(default_factory=dict)
    t_bound: int = 0

    @property
    def control_dimension(self) -> int:
        """Nullspace dimension of the untwisted control."""
        return self.dimensions.get(CONVENTION_UNTWISTED, 0)


def _laurent_matrix(matrix: sympy.MatrixBase) -> LaurentMatrix:
    return tuple(tuple(from_sympy(matrix[i, j]) for j in range(matrix.cols)) for i in range(matrix.rows))


def _map_entries(matrix: LaurentMatrix, fn) -> LaurentMatrix:
    return tuple(tuple(fn(e) for e in row) for row in matrix)


def twisted_components(conn: ConnectionData, convention: str) -> Tuple[LaurentMatrix, LaurentMatrix, LaurentMatrix, LaurentMatrix]:
    """(M_theta, M_t, N_theta, N_t) as Laurent matrices."""
    m_theta = _laurent_matrix(conn.theta_component())
    m_t = _laurent_matrix(conn.t_component())
    if convention == CONVENTION_IOTA_PULLBACK:
        return m_theta, m_t, _map_entries(m_theta, lambda e: -iota(e)), _map_entries(m_t, iota)
    if convention == CONVENTION_IOTA_SUBSTITUTION:
        return m_theta, m_t, _map_entries(m_theta, iota), _map_entries(m_t, iota)
    if convention == CONVENTION_UNTWISTED:
        return m_theta, m_t, m_theta, m_t
    raise ValidationError(f"Unknown pairing convention {convention!r}", field="convention", value=convention)


def ansatz(n: int, shift: int, t_bound: int) -> List[Unknown]:
    """Unknowns (i, j, alpha, beta), 0-based, with alpha + n*beta = i + j + 2*shift*n."""
    unknowns = []
    for i in range(n):
        for j in range(n):
            degree = i + j + 2 * shift * n
            for beta in range(-t_bound, t_bound + 1):
                unknowns.append((i, j, degree - n * beta, beta))
    return unknowns


def flatness_system(conn: ConnectionData, convention: str, unknowns: List[Unknown]) -> DomainMatrix:
    """
    Coefficient matrix of both flatness equations, one row per
    (equation, i, j, monomial) and one column per unknown.
    """
    n = conn.n
    m_theta, m_t, n_theta, n_t = twisted_components(conn, convention)
    rows: Dict[Tuple, int] = {}
    entries: Dict[int, Dict[int, Fraction]] = {}

    def add(equation: str, i: int, j: int, a: int, b: int, column: int, value: Fraction) -> None:
        if not value:
            return
        row = rows.setdefault((equation, i, j, a, b), len(rows))
        row_entries = entries.setdefault(row, {})
        total = row_entries.get(column, Fraction(0)) + value
        if total:
            row_entries[column] = total
        else:
            row_entries.pop(column, None)

    for column, (k, l, alpha, beta) in enumerate(unknowns):
        for equation, m, twisted, own in (("theta", m_theta, n_theta, (alpha, alpha - 1, beta)),
                                          ("t", m_t, n_t, (beta, alpha, beta - 1))):
            weight, a0, b0 = own
            # derivative of the unknown monomial
            add(equation, k, l, a0, b0, column, Fraction(weight))
            # -(M^T G)_{i l} picks M[k][i]
            for i in range(n):
                for (a, b, _, _), c in m[k][i].terms.items():
                    add(equation, i, l, alpha + a, beta + b, column, -c)
            # -(G N)_{k j} picks N[l][j]
            for j in range(n):
                for (a, b, _, _), c in twisted[l][j].terms.items():
                    add(equation, k, j, alpha + a, beta + b, column, -c)

    sparse = {
        row: {column: QQ(value.numerator, value.denominator) for column, value in row_entries.items()}
        for row, row_entries in entries.items() if row_entries
    }
    return DomainMatrix(sparse, (len(rows), len(unknowns)), QQ)


def nullspace_basis(system: DomainMatrix) -> List[List[Fraction]]:
    """Basis vectors of the nullspace as lists of Fractions."""
    basis = system.nullspace().to_list()
    return [[Fraction(int(x.numerator), int(x.denominator)) for x in vector] for vector in basis]


def _gram_from_vector(n: int, unknowns: List[Unknown], vector: List[Fraction]) -> List[List[OreOperator]]:
    terms: Dict[Tuple[int, int], Dict] = {}
    for (i, j, alpha, beta), value in zip(unknowns, vector):
        if value:
            terms.setdefault((i, j), {})[(alpha, beta, 0, 0)] = value
    return [[OreOperator(terms.get((i, j), {})) for j in range(n)] for i in range(n)]


def verify_flatness(conn: ConnectionData, convention: str, gram: GramMatrix) -> bool:
    """
    Re-check both flatness equations as SymPy rational-function identities,
    independently of the linear-system assembly.
    """
    m_theta = conn.theta_component()
    m_t = conn.t_component()
    if convention == CONVENTION_IOTA_PULLBACK:
        n_theta, n_t = -substitute_minus_theta(m_theta), substitute_minus_theta(m_t)
    elif convention == CONVENTION_IOTA_SUBSTITUTION:
        n_theta, n_t = substitute_minus_theta(m_theta), substitute_minus_theta(m_t)
    else:
        n_theta, n_t = m_theta, m_t

    g = gram.to_sympy()
    theta_residual = g.diff(THETA_SYMBOL) - m_theta.T * g - g * n_theta
    t_residual = g.diff(T_SYMBOL) - m_t.T * g - g * n_t
    return all(sympy.cancel(entry) == 0 for entry in list(theta_residual) + list(t_residual))


def _solve_at(conn: ConnectionData, shift: int, t_bound: int) -> Optional[Tuple[str, Dict[str, int], List[Unknown], List[List[Fraction]]]]:
    unknowns = ansatz(conn.n, shift, t_bound)
    dimensions: Dict[str, int] = {}
    bases: Dict[str, List[List[Fraction]]] = {}
    for convention in CONVENTIONS:
        bases[convention] = nullspace_basis(flatness_system(conn, convention, unknowns))
        dimensions[convention] = len(bases[convention])
    logger.debug(f"Nullspace dimensions at shift {shift}, bound {t_bound}: {dimensions}")
    admissible = [convention for convention in IOTA_CONVENTIONS if dimensions[convention]]
    if not admissible:
        return None
    if len(admissible) > 1:
        logger.error(f"Both iota conventions admit a flat pairing: {dimensions}")
        raise VerificationError("iota convention is ambiguous", check="solve_flat_gram",
                                detail=", ".join(f"{c}: {d}" for c, d in dimensions.items()))
    convention = admissible[0]
    return convention, dimensions, unknowns, bases[convention]


def solve_flat_gram(conn: ConnectionData, sign: int, t_bound: Optional[int] = None,
                    max_shift: Optional[int] = None) -> FlatGramSolution:
    """
    Find the flat pairing of ``conn`` and normalize entry (1, n) to
    theta^(n-1) t^(2k).

    Args:
        conn: Connection in the basis omega or omega-tilde
        sign: Must be (-1)^(n-1)
        t_bound: Bound on |beta|; defaults to ``pairing.t_bound`` or n
        max_shift: Largest omega-tilde shift k tried; defaults to ``pairing.max_tilde_shift``

    Returns:
        FlatGramSolution: Dimension 1 and the normalized Gram matrix

    Raises:
        ValidationError: If ``sign`` is not (-1)^(n-1)
        VerificationError: "no flat pairing found", "pairing not unique at
            this ansatz", "iota convention is ambiguous"
            or a failed flatness re-verification
    """
    n = conn.n
    if sign != (-1) ** (n - 1):
        raise ValidationError(f"sign must be (-1)^(n-1) = {(-1) ** (n - 1)}", field="sign", value=sign)

    validate_configuration(get_config_value("pairing", {}), PAIRING_CONFIG_KEYS, "pairing")
    if t_bound is None:
        t_bound = get_config_value("pairing.t_bound") or n
    if max_shift is None:
        max_shift = get_config_value("pairing.max_tilde_shift", DEFAULT_MAX_TILDE_SHIFT)
    shifts = range(max_shift + 1) if conn.basis_tag == BASIS_OMEGA_TILDE else range(1)

    logger.info(f"Solving for the flat pairing ({conn.basis_tag}, n={n}, bound {t_bound})")
    found = None
    for bound in (t_bound, 2 * t_bound):
        for shift in shifts:
            found = _solve_at(conn, shift, bound)
            if found is not None:
                break
        if found is not None:
            break

    if found is None:
        logger.error("No flat pairing found")
        raise VerificationError("no flat pairing found", check="solve_flat_gram",
                                detail=f"basis {conn.basis_tag}, shifts 0..{shifts[-1]}, bound {2 * t_bound}")

    convention, dimensions, unknowns, basis = found
    if len(basis) >= 2:
        logger.error(f"Pairing not unique: dimension {len(basis)} under {convention}")
        raise VerificationError("pairing not unique at this ansatz", check="solve_flat_gram",
                                detail=f"dimension {len(basis)} under {convention}")

    entries = _gram_from_vector(n, unknowns, basis[0])
    corner = entries[0][n - 1].terms.get((n - 1, 2 * shift, 0, 0))
    if not corner:
        raise VerificationError("normalization entry vanishes", check="solve_flat_gram", detail=str(entries[0][n - 1]))
    target = f"theta^{n - 1}" + (f"*t^{2 * shift}" if shift else "")
    gram = GramMatrix(
        entries=tuple(tuple(e * (1 / corner) for e in row) for row in entries),
        basis_tag=conn.basis_tag,
        normalization=f"entry (1, {n}) has coefficient 1 at {target}",
        shift=shift,
    )

    if not verify_flatness(conn, convention, gram):
        raise VerificationError("flatness re-verification failed", check="solve_flat_gram", detail=convention)

    logger.info(f"Flat pairing found under {convention} with shift {shift}")
    return FlatGramSolution(dimension=1, gram=gram, convention=convention, dimensions=dimensions, t_bound=bound)
