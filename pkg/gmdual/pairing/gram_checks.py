"""
Structural checks of a solved Gram matrix.

Every check is projective: rescaling the Gram matrix by a non-zero rational
never changes a verdict.
"""

import random
from dataclasses import dataclass
from typing import List, Optional

import sympy

from gmdual.core.config import get_config_value
from gmdual.core.constants import DEFAULT_LATTICE_TRIALS, DEFAULT_RANDOM_SEED, LATTICE_G0_LOG, LATTICE_G0_STAR
from gmdual.core.error_handler import ValidationError, VerificationError
from gmdual.core.logging_config import get_logger
from gmdual.ore.algebra import ZERO, OreOperator, iota, mul
from gmdual.ore.sympy_bridge import from_sympy, to_sympy
from gmdual.ore.weights import WeightVector, weighted_degree
from gmdual.pairing.gram_solver import GramMatrix

logger = get_logger(__name__)


def check_symmetry(gram: GramMatrix, n: int) -> bool:
    """gram == (-1)^(n-1) * iota(gram^T), iota negating theta entrywise."""
    sign = (-1) ** (n - 1)
    return all(
        gram.entry(i, j) == iota(gram.entry(j, i)) * sign
        for i in range(gram.n) for j in range(gram.n)
    )


def check_homogeneity(gram: GramMatrix, n: int) -> bool:
    """Each non-zero entry (i, j) is homogeneous of degree i + j - 2 + 2kn."""
    grading = WeightVector.grading(n)
    for i in range(gram.n):
        for j in range(gram.n):
            entry = gram.entry(i, j)
            if entry.is_zero():
                continue
            if weighted_degree(entry, grading) != (i + j + 2 * gram.shift * n, True):
                logger.debug(f"Entry ({i + 1}, {j + 1}) = {entry} has the wrong degree")
                return False
    return True


def _random_lattice_vector(rng: random.Random, n: int, which: str) -> List[OreOperator]:
    low_t = -2 if which == LATTICE_G0_STAR else 0
    vector = []
    for _ in range(n):
        terms = {}
        for _ in range(rng.randint(0, 3)):
            exponent = (rng.randint(0, 2), rng.randint(low_t, 2), 0, 0)
            terms[exponent] = terms.get(exponent, 0) + rng.randint(-5, 5)
        vector.append(OreOperator(terms))
    return vector


def pairing_value(gram: GramMatrix, v: List[OreOperator], w: List[OreOperator]) -> OreOperator:
    """v^T * gram * iota(w)."""
    total = ZERO
    for i, v_i in enumerate(v):
        for j, w_j in enumerate(w):
            total = total + mul(mul(v_i, gram.entry(i, j)), iota(w_j))
    return total


def is_lattice_vector(vector: List[OreOperator], which: str) -> bool:
    """Coefficients in Q[theta, t, t^-1] (G0star) or Q[theta, t] (G0log)."""
    return all(
        op.is_function() and a >= 0 and (which == LATTICE_G0_STAR or b >= 0)
        for op in vector for (a, b, _, _) in op.terms
    )


def in_target(value: OreOperator, n: int, which: str) -> bool:
    """value in theta^(n-1) * Q[theta, t, t^-1] (G0star) or theta^(n-1) * Q[theta, t] (G0log)."""
    return all(a >= n - 1 and (which == LATTICE_G0_STAR or b >= 0) for (a, b, _, _) in value.terms)


def check_lattice_compat(gram: GramMatrix, trials: Optional[int] = None, which: str = LATTICE_G0_STAR,
                         seed: Optional[int] = None) -> bool:
    """
    Pair ``trials`` random lattice elements and check every value lies in
    theta^(n-1) times the coefficient ring of the lattice.
    """
    if which not in (LATTICE_G0_STAR, LATTICE_G0_LOG):
        raise ValidationError(f"Unknown lattice {which!r}", field="which", value=which)
    trials = trials if trials is not None else get_config_value("pairing.lattice_trials", DEFAULT_LATTICE_TRIALS)
    seed = seed if seed is not None else get_config_value("pairing.random_seed", DEFAULT_RANDOM_SEED)
    rng = random.Random(seed)
    n = gram.n

    for trial in range(trials):
        v = _random_lattice_vector(rng, n, which)
        w = _random_lattice_vector(rng, n, which)
        if not (is_lattice_vector(v, which) and is_lattice_vector(w, which)):
            raise VerificationError("random vector outside the lattice", check="lattice_compat", detail=which)
        value = pairing_value(gram, v, w)
        if not in_target(value, n, which):
            logger.warning(f"Lattice trial {trial} ({which}) left the target: {value}")
            return False
    return True


@dataclass
class InducedPairing:
    """
    The pairing S0 = (gram / theta^(n-1)) at theta = 0.

    Attributes:
        matrix: n x n matrix over Q[t, t^-1]
        symmetric: S0 equals its plain transpose
        determinant: det(S0)
        det_unit: det(S0) is a non-zero monomial in t
    """

    matrix: sympy.ImmutableMatrix
    symmetric: bool
    determinant: sympy.Expr
    det_unit: bool

    @property
    def passed(self) -> bool:
        return self.symmetric and self.det_unit


def _is_unit_monomial(expr: sympy.Expr) -> bool:
    op = from_sympy(expr)
    return op.is_monomial() and op.is_function()


def induced_S0(gram: GramMatrix) -> InducedPairing:
    """
    Raises:
        VerificationError: "gram not theta^(n-1)-divisible" if an entry has a
            smaller theta-valuation.
    """
    n = gram.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = gram.entry(i, j)
            if any(a < n - 1 for (a, _, _, _) in entry.terms):
                raise VerificationError("gram not theta^(n-1)-divisible", check="induced_S0",
                                        detail=f"entry ({i + 1}, {j + 1}) = {entry}")
            reduced = OreOperator({(0, b, 0, 0): c for (a, b, _, _), c in entry.terms.items() if a == n - 1})
            row.append(to_sympy(reduced))
        rows.append(row)

    matrix = sympy.ImmutableMatrix(rows)
    determinant = sympy.expand(matrix.det())
    result = InducedPairing(
        matrix=matrix,
        symmetric=matrix == matrix.T,
        determinant=determinant,
        det_unit=_is_unit_monomial(determinant),
    )
    logger.info(f"Induced pairing S0: symmetric {result.symmetric}, det {determinant}")
    return result


def check_pole_orders(gram: GramMatrix, n: int) -> bool:
    """Each non-zero entry is a sum of terms c * theta^(n-1) * t^m."""
    return all(
        a == n - 1
        for row in gram.entries for entry in row for (a, _, _, _) in entry.terms
    )


def check_nondegenerate(gram: GramMatrix) -> bool:
    """det(gram) is a non-zero monomial."""
    return _is_unit_monomial(sympy.expand(gram.to_sympy().det()))
