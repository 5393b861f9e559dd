"""
Tests for solving the flat pairing.
"""

from fractions import Fraction

import pytest

from gmdual.core.error_handler import ValidationError, VerificationError
from gmdual.ore import THETA, ZERO, OreOperator
from gmdual.pairing import CONVENTIONS, GramMatrix, check_symmetry, solve_flat_gram, verify_flatness
from gmdual.pairing import gram_solver
from gmdual.pairing.gram_solver import ansatz, flatness_system, nullspace_basis, twisted_components
from gmdual.presentation import SpectrumInstance, build_connection

N2 = SpectrumInstance(n=2, nu=("0", "1"), c="1")
N3 = SpectrumInstance(n=3, nu=("1/2", "1", "3/2"), c="1")
N3_TILDE = SpectrumInstance(n=3, nu=("2", "1", "0"), c="1", nu_tilde=("1", "1", "1"))

ANTIDIAGONAL = GramMatrix(entries=((ZERO, THETA), (THETA, ZERO)))


class TestSolveFlatGram:
    """
    Tests for solve_flat_gram.
    """

    def test_n2(self):
        """
        Test that n=2 has the unique pairing [[0, theta], [theta, 0]].
        """
        solution = solve_flat_gram(build_connection(N2), -1)
        assert solution.dimension == 1
        assert solution.convention == "iota_pullback"
        assert solution.dimensions["iota_pullback"] == 1
        assert solution.gram.to_strings() == [["0", "theta"], ["theta", "0"]]
        assert solution.gram.shift == 0
        assert solution.gram.normalization == "entry (1, 2) has coefficient 1 at theta^1"

    def test_independent_of_corner_sign(self):
        """
        Test that both corner signs give the same pairing.
        """
        plus = solve_flat_gram(build_connection(N2, c_sign=1), -1)
        minus = solve_flat_gram(build_connection(N2, c_sign=-1), -1)
        assert plus.gram.entries == minus.gram.entries

    def test_n3(self):
        """
        Test that n=3 has a unique symmetric pairing with entry (1, 3) normalized.
        """
        solution = solve_flat_gram(build_connection(N3), 1)
        assert solution.dimension == 1
        assert solution.gram.entry(0, 2).terms[(2, 0, 0, 0)] == 1
        assert check_symmetry(solution.gram, 3)

    def test_tilde_basis(self):
        """
        Test the omega_tilde basis of a spectrum with nu_1 - nu_n > 1.

        With nu_tilde index-symmetric the t-component of flatness forces the
        shift to 0, so the solution is the antidiagonal theta^2 matrix.
        """
        solution = solve_flat_gram(build_connection(N3_TILDE, "omega_tilde"), 1)
        assert solution.dimension == 1
        assert solution.gram.basis_tag == "omega_tilde"
        assert solution.gram.shift == 0
        assert solution.gram.entry(0, 2) == THETA ** 2
        assert check_symmetry(solution.gram, 3)

    def test_untwisted_is_only_a_control(self):
        """
        Test that the untwisted solution of even n is recorded but not adopted.
        """
        solution = solve_flat_gram(build_connection(N2), -1)
        assert solution.convention == "iota_pullback"
        assert solution.control_dimension == 1
        assert solution.dimensions["iota_substitution"] == 0

    def test_ambiguous_iota_conventions(self, monkeypatch):
        """
        Test that two iota conventions with solutions are an error, not a choice.
        """
        monkeypatch.setattr(gram_solver, "flatness_system", lambda conn, convention, unknowns: convention)
        monkeypatch.setattr(gram_solver, "nullspace_basis", lambda system: [[Fraction(1)]])
        with pytest.raises(VerificationError) as excinfo:
            solve_flat_gram(build_connection(N2), -1)
        assert str(excinfo.value).startswith("Verification Error: iota convention is ambiguous")
        assert excinfo.value.check == "solve_flat_gram"

    def test_untwisted_alone_is_not_a_pairing(self, monkeypatch):
        """
        Test that a solution under the untwisted control alone is not reported as the pairing.
        """
        monkeypatch.setattr(gram_solver, "flatness_system", lambda conn, convention, unknowns: convention)
        monkeypatch.setattr(gram_solver, "nullspace_basis",
                            lambda system: [[Fraction(1)]] if system == "untwisted" else [])
        with pytest.raises(VerificationError) as excinfo:
            solve_flat_gram(build_connection(N2), -1)
        assert "no flat pairing found" in str(excinfo.value)

    def test_wrong_sign(self):
        """
        Test that the sign must be (-1)^(n-1).
        """
        with pytest.raises(ValidationError) as excinfo:
            solve_flat_gram(build_connection(N2), 1)
        assert excinfo.value.field == "sign"


class TestFlatnessSystem:
    """
    Tests for the linear system behind the solver.
    """

    def test_ansatz(self):
        """
        Test the unknowns of n=2 at bound 1.
        """
        unknowns = ansatz(2, 0, 1)
        assert len(unknowns) == 12
        assert (0, 1, 1, 0) in unknowns
        assert all(alpha + 2 * beta == i + j for i, j, alpha, beta in unknowns)

    def test_nullspace_per_convention(self):
        """
        Test that only the iota pull-back admits a pairing for n = 2; the
        untwisted control also has one, as n is even.
        """
        conn = build_connection(N2)
        unknowns = ansatz(2, 0, 2)
        dimensions = {
            convention: len(nullspace_basis(flatness_system(conn, convention, unknowns)))
            for convention in CONVENTIONS
        }
        assert dimensions == {"iota_pullback": 1, "iota_substitution": 0, "untwisted": 1}

    def test_unknown_convention(self):
        """
        Test that twisted_components rejects an unknown convention.
        """
        with pytest.raises(ValidationError):
            twisted_components(build_connection(N2), "transpose")

    def test_verify_flatness(self):
        """
        Test the independent re-verification on a good and a bad matrix.
        """
        conn = build_connection(N2)
        assert verify_flatness(conn, "iota_pullback", ANTIDIAGONAL)
        assert verify_flatness(conn, "iota_pullback", ANTIDIAGONAL.scaled(3))
        assert not verify_flatness(conn, "iota_substitution", ANTIDIAGONAL)
        diagonal = GramMatrix(entries=((THETA, ZERO), (ZERO, THETA)))
        assert not verify_flatness(conn, "iota_pullback", diagonal)


class TestGramMatrix:
    """
    Tests for the GramMatrix container.
    """

    def test_scaled(self):
        """
        Test scaling by a rational and the zero-factor guard.
        """
        scaled = ANTIDIAGONAL.scaled(2)
        assert scaled.entry(0, 1) == THETA * 2
        assert "scaled by 2" in scaled.normalization
        with pytest.raises(ValidationError):
            ANTIDIAGONAL.scaled(0)

    def test_transpose(self):
        """
        Test the plain transpose.
        """
        gram = GramMatrix(entries=((ZERO, THETA), (OreOperator.monomial(1, 1, 1), ZERO)))
        assert gram.transpose().entry(0, 1) == OreOperator.monomial(1, 1, 1)
        assert gram.transpose().transpose() == gram

    def test_to_sympy(self):
        """
        Test the SymPy view.
        """
        assert ANTIDIAGONAL.to_sympy().shape == (2, 2)
        assert ANTIDIAGONAL.n == 2
