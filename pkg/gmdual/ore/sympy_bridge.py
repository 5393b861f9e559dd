"""
Conversions between derivation-free operators and SymPy expressions.

Connection matrices and Gram matrices are handled as SymPy matrices over
Q(theta, t); their entries are Laurent polynomials, which correspond exactly
to the derivation-free elements of the Ore algebra.
"""

from fractions import Fraction
from typing import Dict

import sympy

from gmdual.core.error_handler import VerificationError
from gmdual.ore.algebra import Exponent, OreOperator

THETA_SYMBOL, T_SYMBOL = sympy.symbols("theta t")


def to_sympy(op: OreOperator) -> sympy.Expr:
    """
    SymPy expression of a derivation-free operator.

    Raises:
        VerificationError: If ``op`` contains a derivation.
    """
    if not op.is_function():
        raise VerificationError("operator with derivations has no scalar expression", check="to_sympy", detail=str(op))
    return sympy.Add(*[
        sympy.Rational(c.numerator, c.denominator) * THETA_SYMBOL ** a * T_SYMBOL ** b
        for (a, b, _, _), c in op.terms.items()
    ])


def from_sympy(expr: sympy.Expr) -> OreOperator:
    """
    Derivation-free operator of a Laurent polynomial in theta and t.

    Raises:
        VerificationError: If ``expr`` is not a Laurent polynomial with
            rational coefficients.
    """
    expr = sympy.expand(sympy.sympify(expr))
    terms: Dict[Exponent, Fraction] = {}
    for term in sympy.Add.make_args(expr):
        if term == 0:
            continue
        rest, a = term.as_coeff_exponent(THETA_SYMBOL)
        coefficient, b = rest.as_coeff_exponent(T_SYMBOL)
        if not (coefficient.is_Rational and a.is_Integer and b.is_Integer):
            raise VerificationError("not a Laurent polynomial over Q", check="from_sympy", detail=str(term))
        key = (int(a), int(b), 0, 0)
        terms[key] = terms.get(key, Fraction(0)) + Fraction(int(coefficient.p), int(coefficient.q))
    return OreOperator(terms)
