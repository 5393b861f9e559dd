"""
Action of operators on functions of theta and t.

This is the brute-force oracle for the Ore product: an operator acts on a
SymPy expression by formal differentiation, term by term, without using the
Leibniz rule that ``mul`` relies on. Agreement of apply(P*Q, f) with
apply(P, apply(Q, f)) is the property the arithmetic core is tested against.
"""

from typing import Dict, Tuple

import sympy

from gmdual.ore.algebra import OreOperator
from gmdual.ore.sympy_bridge import THETA_SYMBOL, T_SYMBOL


def apply(op: OreOperator, function: sympy.Expr) -> sympy.Expr:
    """
    Apply ``op`` to ``function``.

    Args:
        op: Operator in normal order
        function: SymPy expression in theta and t

    Returns:
        sympy.Expr: The expanded result
    """
    derivatives: Dict[Tuple[int, int], sympy.Expr] = {}
    total = sympy.Integer(0)
    for (a, b, p, q), c in op.terms.items():
        if (p, q) not in derivatives:
            derivative = function
            if p:
                derivative = sympy.diff(derivative, THETA_SYMBOL, p)
            if q:
                derivative = sympy.diff(derivative, T_SYMBOL, q)
            derivatives[(p, q)] = derivative
        coefficient = sympy.Rational(c.numerator, c.denominator)
        total += coefficient * THETA_SYMBOL ** a * T_SYMBOL ** b * derivatives[(p, q)]
    return sympy.expand(total)
