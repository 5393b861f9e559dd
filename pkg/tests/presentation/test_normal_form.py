"""
Tests for reduction modulo the presentation and normal forms in the Q-basis.
"""

from fractions import Fraction

import pytest

from gmdual.core.error_handler import VerificationError
from gmdual.ore import DT, DTHETA, ONE, T, THETA, ZERO, OreOperator, mul
from gmdual.presentation import (
    Presentation,
    QCoefficients,
    SpectrumInstance,
    build_generators,
    normal_form,
    presentation_of,
    reduce,
)
from gmdual.presentation.generators import EULER


@pytest.fixture
def gens_n2():
    """Generators of n=2, nu=(0, 1), c=1."""
    return build_generators(SpectrumInstance(n=2, nu=("0", "1"), c="1"))


@pytest.fixture
def gens_n3():
    """Generators of n=3, nu=(1/2, 1, 3/2), c=1."""
    return build_generators(SpectrumInstance(n=3, nu=("1/2", "1", "3/2"), c="1"))


class TestPresentation:
    """
    Tests for the accepted shape of a presentation.
    """

    def test_rank_and_leading_coefficient(self, gens_n2):
        """
        Test that (P1, P2) has rank n and leading coefficient theta^n*t^n.
        """
        presentation = presentation_of(gens_n2)
        assert presentation.rank == 2
        assert presentation.leading == OreOperator.monomial(1, 2, 2)
        assert presentation.M_monic.terms[(0, 0, 1, 0)] == 1

    def test_first_generator_with_dtheta_rejected(self, gens_n2):
        """
        Test that L must be free of dtheta.
        """
        with pytest.raises(VerificationError):
            Presentation(DTHETA, gens_n2.P2)

    def test_second_generator_without_dtheta_rejected(self, gens_n2):
        """
        Test that M must be linear in dtheta.
        """
        with pytest.raises(VerificationError):
            Presentation(gens_n2.P1, THETA)

    def test_non_unit_leading_coefficient_rejected(self, gens_n2):
        """
        Test that a leading coefficient 1 + theta is rejected.
        """
        with pytest.raises(VerificationError) as excinfo:
            Presentation(mul(ONE + THETA, DT ** 2), gens_n2.P2)
        assert "not a unit" in str(excinfo.value)

    def test_ideal_elements_reduce_to_zero(self, gens_n2):
        """
        Test that left multiples of P1 and P2 reduce to zero.
        """
        presentation = presentation_of(gens_n2)
        for op in (gens_n2.P1, gens_n2.P2, mul(DT, gens_n2.P1), mul(DTHETA, gens_n2.P2),
                   mul(THETA * T, gens_n2.P1) + mul(DT ** 2, gens_n2.P2)):
            assert reduce(op, presentation).is_zero()

    def test_reduced_form_shape(self, gens_n3):
        """
        Test that a reduced operator is free of dtheta with dt-degree below n.
        """
        presentation = presentation_of(gens_n3)
        remainder = presentation.reduce(mul(DTHETA ** 2, DT ** 4) + T)
        assert remainder.theta_derivation_degree() <= 0
        assert remainder.dt_degree() < 3


class TestNormalForm:
    """
    Tests for normal_form.
    """

    def test_unit(self, gens_n2):
        """
        Test normal_form(1) = (1, 0).
        """
        assert normal_form(ONE, gens_n2).coeffs == (ONE, ZERO)

    def test_euler_square(self, gens_n2):
        """
        Test normal_form(theta^2*(t*dt)^2) = ((1/4)*t, 0).
        """
        result = normal_form(mul(THETA ** 2, EULER ** 2), gens_n2)
        assert result.to_strings() == ["(1/4)*t", "0"]

    def test_dtheta(self, gens_n2):
        """
        Test normal_form(dtheta) = (0, -2*theta^-2).
        """
        result = normal_form(DTHETA, gens_n2)
        assert result[0].is_zero()
        assert result[1] == OreOperator.monomial(-2, -2)

    def test_generators_vanish(self, gens_n3):
        """
        Test that P1 and P2 have zero normal form.
        """
        assert normal_form(gens_n3.P1, gens_n3).is_zero()
        assert normal_form(gens_n3.P2, gens_n3).is_zero()

    def test_basis_operators_are_unit_vectors(self, gens_n3):
        """
        Test normal_form(Q_i) = e_i.
        """
        for i, q in enumerate(gens_n3.Q):
            result = normal_form(q, gens_n3)
            for j in range(3):
                assert result[j] == (ONE if i == j else ZERO)

    def test_basis_step(self, gens_n3):
        """
        Test theta*(t*dt - a_i)*Q_i = Q_(i+1) and the last step wraps to k*t*Q_0.
        """
        a_values = gens_n3.instance.a_values()
        for i in range(2):
            result = normal_form(mul(THETA * (EULER - a_values[i]), gens_n3.Q[i]), gens_n3)
            assert [h == (ONE if j == i + 1 else ZERO) for j, h in enumerate(result)] == [True] * 3
        last = normal_form(mul(THETA * (EULER - a_values[2]), gens_n3.Q[2]), gens_n3)
        assert last.coeffs == (OreOperator.monomial(Fraction(1, 27), 0, 1), ZERO, ZERO)

    def test_linear_over_functions(self, gens_n2):
        """
        Test normal_form(t*P) = t*normal_form(P) and likewise for theta.
        """
        presentation = presentation_of(gens_n2)
        for op in (DT, DTHETA, DT ** 2, mul(DTHETA, DT), mul(DT ** 3, DTHETA)):
            base = normal_form(op, gens_n2, presentation)
            for factor in (T, THETA):
                scaled = normal_form(mul(factor, op), gens_n2, presentation)
                assert scaled.coeffs == tuple(mul(factor, h) for h in base)

    def test_representative_round_trip(self, gens_n3):
        """
        Test that the representative of a normal form has the same normal form.
        """
        presentation = presentation_of(gens_n3)
        for op in (DT ** 3, mul(DTHETA, DT), mul(THETA ** 2, DTHETA ** 2)):
            result = normal_form(op, gens_n3, presentation)
            assert normal_form(result.representative(gens_n3), gens_n3, presentation) == result

    def test_q_coefficients_container(self):
        """
        Test the sequence protocol of QCoefficients.
        """
        coefficients = QCoefficients((ONE, ZERO, T))
        assert len(coefficients) == 3
        assert list(coefficients) == [ONE, ZERO, T]
        assert not coefficients.is_zero()
        assert QCoefficients((ZERO, ZERO)).is_zero()
