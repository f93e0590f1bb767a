"""
Eigen Kernel Test Suite
"""

import numpy as np
import pytest

from src.operators.eigen import DISCRETE, ESSENTIAL, Spectrum, classify_discrete, eig, svd
from src.utils.errors import DomainError, PartialResultError


def _spectrum(values):
    values = np.asarray(values, dtype=complex)
    return Spectrum(values, np.zeros(len(values)))


class TestEig:
    def test_diagonal(self):
        spectrum = eig(np.diag([1.0, 2.0j, -3.0]))
        np.testing.assert_allclose(spectrum.eigenvalues, [-3.0, 2.0j, 1.0], atol=1e-15)
        assert spectrum.max_residual <= 1e-15

    def test_sorted_by_real_then_imaginary(self):
        """
        This test verifies the ordering of eigenvalues whose real parts tie.

        Expected result: -3, then 1 - i, 1, 1 + 2i.
        """
        spectrum = eig(np.diag([1.0 + 2.0j, -3.0, 1.0 - 1.0j, 1.0]))
        np.testing.assert_allclose(spectrum.eigenvalues, [-3.0, 1.0 - 1.0j, 1.0, 1.0 + 2.0j], atol=1e-15)

    def test_rotation(self):
        """
        This test verifies the eigenvalues of a rotation generator.

        Expected result: {-i, i}.
        """
        spectrum = eig(np.array([[0.0, -1.0], [1.0, 0.0]]))
        values = sorted(spectrum.eigenvalues, key=lambda z: z.imag)
        np.testing.assert_allclose(values, [-1.0j, 1.0j], atol=1e-14)

    def test_random_residuals_and_trace(self):
        rng = np.random.default_rng(0)
        a = rng.standard_normal((50, 50)) + 1j * rng.standard_normal((50, 50))
        spectrum = eig(a)
        assert spectrum.max_residual <= 1e-8
        assert np.sum(spectrum.eigenvalues) == pytest.approx(np.trace(a), rel=1e-9)

    def test_hermitian(self):
        """
        This test verifies that Hermitian input is decomposed as Hermitian.

        Expected result: real eigenvalues and residuals below 1e-10.
        """
        rng = np.random.default_rng(1)
        b = rng.standard_normal((30, 30)) + 1j * rng.standard_normal((30, 30))
        spectrum = eig(b + b.conj().T)
        assert spectrum.hermitian
        assert np.all(spectrum.eigenvalues.imag == 0.0)
        assert spectrum.max_residual <= 1e-10

    def test_permutation_invariance(self):
        rng = np.random.default_rng(2)
        a = rng.standard_normal((12, 12)) + 1j * rng.standard_normal((12, 12))
        perm = np.eye(12)[rng.permutation(12)]
        np.testing.assert_allclose(
            np.sort_complex(eig(a).eigenvalues),
            np.sort_complex(eig(perm @ a @ perm.T).eigenvalues),
            atol=1e-10,
        )

    def test_bad_input(self):
        with pytest.raises(DomainError):
            eig(np.ones((2, 3)))
        with pytest.raises(DomainError):
            eig(np.array([[np.nan, 0.0], [0.0, 1.0]]))

    def test_tolerance_violation_is_partial(self):
        with pytest.raises(PartialResultError) as info:
            eig(np.diag([1.0, 2.0]), tol=-1.0)
        assert info.value.partial is not None
        assert info.value.uncertified == [0, 1]

    def test_empty(self):
        assert len(eig(np.zeros((0, 0)))) == 0


class TestSvd:
    def test_diagonal(self):
        np.testing.assert_allclose(svd(np.diag([3.0, -4.0])), [4.0, 3.0])

    def test_frobenius_and_weyl(self):
        """
        This test verifies sum sigma^2 = ||A||_F^2 and Weyl's inequality sum sigma^2 >= sum |lambda|^2.

        Expected result: both hold on 100 random matrices.
        """
        rng = np.random.default_rng(3)
        for _ in range(100):
            a = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
            sigma = svd(a)
            assert np.all(np.diff(sigma) <= 0.0)
            assert np.sum(sigma ** 2) == pytest.approx(np.linalg.norm(a) ** 2, rel=1e-10)
            assert np.sum(sigma ** 2) >= np.sum(np.abs(eig(a).eigenvalues) ** 2) * (1.0 - 1e-10)

    def test_normal_perturbation(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            values = rng.standard_normal(6) + 1j * rng.standard_normal(6)
            q, _ = np.linalg.qr(rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6)))
            a = q @ np.diag(values) @ q.conj().T
            e = rng.standard_normal((6, 6))
            e = 1e-6 * e / np.linalg.norm(e, 2)
            moved = eig(a + e).eigenvalues
            assert all(np.min(np.abs(values - mu)) <= 1e-6 * (1.0 + 1e-6) for mu in moved)


class TestClassification:
    def test_examples(self):
        """
        This test verifies the distance-to-ray classification.

        Expected result: with eps = 1e-6 only -0.5 is a discrete candidate.
        """
        tagged = classify_discrete(_spectrum([-0.5, 0.3, 1e-12 + 1e-12j]), 1e-6)
        assert tagged.tags == [DISCRETE, ESSENTIAL, ESSENTIAL]
        np.testing.assert_array_equal(tagged.discrete_candidates(), [-0.5])

    def test_nonnegative_real(self):
        tagged = classify_discrete(_spectrum([0.0, 1.0, 5.0]))
        assert tagged.tags == [ESSENTIAL] * 3

    def test_off_axis(self):
        assert classify_discrete(_spectrum([2.0 + 0.5j]), 0.1).tags == [DISCRETE]

    def test_default_threshold_tracks_residuals(self):
        spectrum = Spectrum(np.array([-1e-5 + 0j]), np.array([1e-5]))
        assert classify_discrete(spectrum).tags == [ESSENTIAL]

    def test_requires_classification(self):
        with pytest.raises(ValueError):
            _spectrum([1.0]).discrete_candidates()
        with pytest.raises(DomainError):
            classify_discrete(_spectrum([1.0]), 0.0)
