"""
Tests für GL(m×n, F): Gruppenoperation, Inverse und Exponentialabbildung
"""

import math

import pytest
import numpy as np

from src.group import (
    GroupElement, identity, group_mul, group_power, as_element,
    e_matrix, group_inverse, is_invertible,
    e0_map, exp_map, phi_algebra, phi_hom,
)
from src.linalg import expm
from src.stp import RIGHT, dk_power, dk_stp
from src.utils.errors import ConvergenceError, DomainError, DimensionError, NotInvertibleError
from tests.conftest import assert_close


class TestGroupElements:
    """Tests für Elemente und Gruppenoperation"""

    def test_identity(self):
        e = identity(2, 3)
        assert e.shape == (2, 3)
        assert e.is_identity()

    def test_multiplication_rule(self, rng):
        """Test: a ∘ b = A + B + A ⋉̄ B"""
        A, B = rng.standard_normal((2, 3)), rng.standard_normal((2, 3))
        result = group_mul(GroupElement(A), GroupElement(B))
        assert_close(result.coord, A + B + dk_stp(A, B))

    def test_shape_mismatch(self):
        with pytest.raises(DimensionError):
            group_mul(identity(2, 3), identity(3, 2))

    def test_powers(self, rng):
        a = GroupElement(0.3 * rng.standard_normal((2, 4)))
        assert group_power(a, 0).is_identity()
        assert np.array_equal(group_power(a, 1).coord, a.coord)
        assert_close(group_power(a, 3).coord, group_mul(group_mul(a, a), a).coord)
        with pytest.raises(DomainError):
            group_power(a, -1)

    def test_as_element(self):
        a = as_element([[1, 2]])
        assert isinstance(a, GroupElement)
        assert as_element(a) is a

    def test_right_variant(self, rng):
        A, B = rng.standard_normal((3, 2)), rng.standard_normal((3, 2))
        result = group_mul(GroupElement(A), GroupElement(B), RIGHT)
        assert_close(result.coord, A + B + dk_stp(A, B, RIGHT))


class TestGroupInverse:
    """Tests für E_{m×n}(A) und das inverse Element"""

    def test_e_matrix_of_zero(self):
        E = e_matrix(np.zeros((2, 3)))
        assert E.shape == (12, 6)
        assert np.array_equal(E[:6], np.eye(6))
        assert np.array_equal(E[6:], np.zeros((6, 6)))

    def test_square_inverse(self):
        """Test: A = I ergibt A⁻¹ = -(I + A)⁻¹A = -I/2"""
        inverse = group_inverse(np.eye(2))
        assert_close(inverse.coord, -0.5 * np.eye(2))

    def test_round_trip(self, rng):
        a = GroupElement(0.1 * rng.standard_normal((2, 5)))
        inverse = group_inverse(a)
        assert inverse.shape == (2, 5)
        assert group_mul(a, inverse).is_identity(1e-9)
        assert group_mul(inverse, a).is_identity(1e-9)

    def test_inverse_of_identity(self):
        assert group_inverse(identity(3, 2)).is_identity(1e-12)

    def test_not_invertible(self):
        """Test: A = -I macht E(A) zur Nullmatrix"""
        with pytest.raises(NotInvertibleError):
            group_inverse(-np.eye(2))
        assert not is_invertible(-np.eye(2))
        assert is_invertible(np.zeros((2, 3)))


class TestExponential:
    """Tests für E₀, Exp und den Homomorphismus φ"""

    def test_e0_scalar(self):
        assert e0_map([[1.0]]).coord[0, 0] == pytest.approx(math.e - 1.0, rel=1e-12)

    def test_e0_square_is_expm_minus_identity(self, rng):
        A = 0.5 * rng.standard_normal((3, 3))
        assert_close(e0_map(A).coord, expm(A) - np.eye(3), rtol=1e-10)

    def test_e0_zero(self):
        assert e0_map(np.zeros((2, 3))).is_identity()

    def test_e0_series_definition(self, rng):
        """Test: E₀(A) = Σ A^<i>/i! auf 30 Glieder"""
        A = 0.3 * rng.standard_normal((2, 3))
        expected = sum(dk_power(A, i) / math.factorial(i) for i in range(1, 30))
        assert_close(e0_map(A).coord, expected, rtol=1e-10)

    def test_e0_non_convergence(self):
        with pytest.raises(ConvergenceError):
            e0_map([[10.0]], max_terms=5)

    def test_e0_invalid_tolerance(self):
        with pytest.raises(DomainError):
            e0_map([[1.0]], tol=0.0)

    def test_exp_time_scaling(self, rng):
        A = 0.4 * rng.standard_normal((2, 4))
        assert_close(exp_map(A, t=0.5).coord, e0_map(0.5 * A).coord)
        assert exp_map(A, t=0.0).is_identity()

    def test_exp_is_one_parameter_group(self, rng):
        """Test: Exp(sA) ∘ Exp(tA) = Exp((s+t)A)"""
        A = 0.4 * rng.standard_normal((2, 3))
        left = group_mul(exp_map(A, t=0.3), exp_map(A, t=0.5))
        assert_close(left.coord, exp_map(A, t=0.8).coord, rtol=1e-10)

    def test_phi_algebra(self, A3x4):
        assert phi_algebra(A3x4).tolist() == [[5, 2, 11], [10, 2, -6], [13, 4, 1]]

    def test_phi_is_homomorphism(self, rng):
        """Test: φ(a ∘ b) = φ(a) φ(b)"""
        a = GroupElement(rng.standard_normal((2, 3)))
        b = GroupElement(rng.standard_normal((2, 3)))
        assert_close(phi_hom(group_mul(a, b)), phi_hom(a) @ phi_hom(b))

    def test_phi_of_exponential(self, rng):
        A = 0.5 * rng.standard_normal((3, 5))
        assert_close(phi_hom(exp_map(A)), expm(phi_algebra(A)), rtol=1e-8)
