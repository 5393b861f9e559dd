"""
Tests for weighted degrees, symbols and the regular-sequence criterion.
"""

import random
from fractions import Fraction

import pytest

from gmdual.core.error_handler import VerificationError
from gmdual.ore import (
    DT,
    DTHETA,
    T,
    THETA,
    ZERO,
    OreOperator,
    SymbolPolynomial,
    WeightVector,
    is_regular_symbol_pair,
    mul,
    symbol,
    weighted_degree,
)
from gmdual.presentation import SpectrumInstance, build_generators


@pytest.fixture
def gens_n2():
    """Generators of n=2, nu=(0, 1), c=1."""
    return build_generators(SpectrumInstance(n=2, nu=("0", "1"), c="1"))


class TestWeightedDegree:
    """
    Tests for weighted_degree.
    """

    def test_second_generator_is_homogeneous_of_degree_one(self):
        """
        Test that P2 has degree 1 under the grading for every n.
        """
        for n in range(2, 7):
            p2 = mul(THETA ** 2, DTHETA) + mul(THETA * T, DT) * n
            assert weighted_degree(p2, WeightVector.grading(n)) == (1, True)

    def test_isomorphism_operator_degree(self):
        """
        Test that theta^(n+2)*t has degree 2n+2.
        """
        for n in range(2, 7):
            a = OreOperator.monomial(1, n + 2, 1)
            assert weighted_degree(a, WeightVector.grading(n)) == (2 * n + 2, True)

    def test_transposed_first_generator_under_f_filtration(self, gens_n2):
        """
        Test that P1t is not F-homogeneous: the theta^2*t*dt and theta^2 terms
        sit at F-degree -1 and -2, below the top degree 0.
        """
        weights = WeightVector.f_filtration()
        assert weighted_degree(gens_n2.P1t, weights) == (0, False)
        assert sorted(weights.weight(e) for e in gens_n2.P1t.terms) == [-2, -1, 0, 0]
        assert weighted_degree(mul(THETA ** 2, T ** 2) * DT ** 2 - T * Fraction(1, 4), weights) == (0, True)

    def test_zero_operator_has_no_degree(self):
        """
        Test that the zero operator raises.
        """
        with pytest.raises(VerificationError) as excinfo:
            weighted_degree(ZERO, WeightVector.order())
        assert "undefined degree" in str(excinfo.value)

    def test_degree_is_additive_for_homogeneous_factors(self):
        """
        Test deg(P*Q) = deg(P) + deg(Q) for homogeneous P, Q.
        """
        weights = WeightVector.grading(3)
        rng = random.Random(5)
        for _ in range(50):
            p = OreOperator.monomial(rng.randint(1, 3), rng.randint(-2, 3), rng.randint(-1, 2), rng.randint(0, 2), rng.randint(0, 2))
            q = OreOperator.monomial(rng.randint(1, 3), rng.randint(-2, 3), rng.randint(-1, 2), rng.randint(0, 2), rng.randint(0, 2))
            product = mul(p, q)
            assert weighted_degree(product, weights) == (
                weighted_degree(p, weights).degree + weighted_degree(q, weights).degree, True
            )


class TestSymbol:
    """
    Tests for symbols and the regular-sequence criterion.
    """

    def test_symbol_of_transposed_first_generator(self, gens_n2):
        """
        Test symbol(P1t, F) = (-theta*t*v)^2 - (1/4)*t.
        """
        expected = SymbolPolynomial({(2, 2, 0, 2): 1, (0, 1, 0, 0): Fraction(-1, 4)})
        assert symbol(gens_n2.P1t, WeightVector.f_filtration()) == expected

    def test_symbol_of_transposed_second_generator(self, gens_n2):
        """
        Test symbol(-P2t, F) = theta^2*u + 2*t*theta*v.
        """
        expected = SymbolPolynomial({(2, 0, 1, 0): 1, (1, 1, 0, 1): 2})
        assert symbol(-gens_n2.P2t, WeightVector.f_filtration()) == expected

    def test_symbol_under_order_filtration(self):
        """
        Test symbol(P1t, order) = (-1)^n theta^n t^n v^n.
        """
        for n, nu, c in ((2, ("0", "1"), "1"), (3, ("1/2", "1", "3/2"), "1")):
            gens = build_generators(SpectrumInstance(n=n, nu=nu, c=c))
            expected = SymbolPolynomial({(n, n, 0, n): (-1) ** n})
            assert symbol(gens.P1t, WeightVector.order()) == expected

    def test_symbol_is_multiplicative(self):
        """
        Test symbol(P*Q) = symbol(P)*symbol(Q) on operators with non-zero symbol product.
        """
        weights = WeightVector.f_filtration()
        p = mul(THETA * T, DT) + T
        q = mul(THETA ** 2, DTHETA) + THETA
        assert symbol(mul(p, q), weights) == symbol(p, weights) * symbol(q, weights)

    def test_regular_pair(self, gens_n2):
        """
        Test that the symbols of P1t and P2t form a regular pair.
        """
        for weights in (WeightVector.f_filtration(), WeightVector.order()):
            assert is_regular_symbol_pair(symbol(gens_n2.P1t, weights), symbol(gens_n2.P2t, weights))

    def test_non_unit_leading_coefficient_is_not_regular(self):
        """
        Test that v*(1 + theta) with u is rejected.
        """
        first = SymbolPolynomial({(0, 0, 0, 1): 1, (1, 0, 0, 1): 1})
        second = SymbolPolynomial.monomial(1, 0, 0, 1, 0)
        assert not is_regular_symbol_pair(first, second)

    def test_second_symbol_must_be_linear_in_u(self):
        """
        Test that a second symbol quadratic in u is rejected.
        """
        first = SymbolPolynomial.monomial(1, 0, 0, 0, 2)
        second = SymbolPolynomial.monomial(1, 0, 0, 2, 0)
        assert not is_regular_symbol_pair(first, second)

    def test_printing(self):
        """
        Test the text form of a symbol.
        """
        assert str(SymbolPolynomial({(2, 0, 1, 0): 1, (1, 1, 0, 1): 2})) == "theta^2*u + 2*theta*t*v"
