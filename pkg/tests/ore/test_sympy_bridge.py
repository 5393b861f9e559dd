"""
Tests for the conversions between operators and SymPy expressions.
"""

from fractions import Fraction

import pytest
import sympy

from gmdual.core.error_handler import VerificationError
from gmdual.ore import DT, THETA_SYMBOL, T_SYMBOL, OreOperator, from_sympy, to_sympy


class TestSympyBridge:
    """
    Tests for to_sympy and from_sympy.
    """

    def test_to_sympy_laurent_monomials(self):
        """
        Test that negative exponents survive the conversion.
        """
        op = OreOperator({(-2, 1, 0, 0): Fraction(3, 2), (0, 0, 0, 0): -1})
        expected = sympy.Rational(3, 2) * THETA_SYMBOL ** -2 * T_SYMBOL - 1
        assert sympy.simplify(to_sympy(op) - expected) == 0

    def test_from_sympy(self):
        """
        Test reading a Laurent polynomial back.
        """
        expr = THETA_SYMBOL ** 2 / T_SYMBOL - sympy.Rational(1, 4) * T_SYMBOL
        assert from_sympy(expr) == OreOperator({(2, -1, 0, 0): 1, (0, 1, 0, 0): Fraction(-1, 4)})
        assert from_sympy(sympy.Integer(0)).is_zero()

    def test_round_trip(self):
        """
        Test from_sympy(to_sympy(op)) == op.
        """
        op = OreOperator({(3, -1, 0, 0): 5, (-1, 2, 0, 0): Fraction(-2, 7)})
        assert from_sympy(to_sympy(op)) == op

    def test_operator_with_derivation_rejected(self):
        """
        Test that an operator with a derivation has no scalar expression.
        """
        with pytest.raises(VerificationError):
            to_sympy(DT)

    def test_non_polynomial_rejected(self):
        """
        Test that transcendental or irrational expressions are rejected.
        """
        with pytest.raises(VerificationError):
            from_sympy(sympy.sin(THETA_SYMBOL))
        with pytest.raises(VerificationError):
            from_sympy(sympy.sqrt(2) * T_SYMBOL)
