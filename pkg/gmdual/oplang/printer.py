"""
Canonical text form of operators and symbol polynomials.

Terms are printed in descending lexicographic order of their exponent
tuples, so the output is deterministic and parses back to the same value.
"""

from fractions import Fraction
from typing import Mapping, Sequence, Tuple

from gmdual.core.utils import format_rational

OPERATOR_NAMES = ("theta", "t", "dtheta", "dt")


def _format_factors(exponent: Tuple[int, ...], names: Sequence[str]) -> str:
    factors = []
    for name, power in zip(names, exponent):
        if power == 0:
            continue
        factors.append(name if power == 1 else f"{name}^{power}")
    return "*".join(factors)


def _format_magnitude(magnitude: Fraction, factors: str) -> str:
    if not factors:
        return format_rational(magnitude)
    if magnitude == 1:
        return factors
    if magnitude.denominator == 1:
        return f"{magnitude.numerator}*{factors}"
    return f"({format_rational(magnitude)})*{factors}"


def format_terms(terms: Mapping[Tuple[int, ...], Fraction], names: Sequence[str]) -> str:
    """
    Format a term map as a sum of monomials.

    Args:
        terms: Map from exponent tuple to non-zero coefficient
        names: One variable name per exponent slot

    Returns:
        str: e.g. ``"theta^2*t*dt - (1/4)*t"``, or ``"0"`` for no terms
    """
    if not terms:
        return "0"

    text = ""
    for exponent in sorted(terms, reverse=True):
        coefficient = Fraction(terms[exponent])
        body = _format_magnitude(abs(coefficient), _format_factors(exponent, names))
        if not text:
            text = f"-{body}" if coefficient < 0 else body
        else:
            text += f" - {body}" if coefficient < 0 else f" + {body}"
    return text


def to_text(op) -> str:
    """Print an OreOperator in the operator-expression grammar."""
    return format_terms(op.terms, OPERATOR_NAMES)
