"""Weighted SVD and weighted Moore-Penrose inverse behavior."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

import golden_fixtures as gf
from einrange import (
    ShapeError,
    Weight,
    WeightError,
    WeightPair,
    conj_transpose,
    einstein_product,
    frobenius,
    from_matrix,
    hyperdiag_pinv,
    identity_tensor,
    mp_inverse,
    penrose_residuals,
    rsh,
    weighted_conj_transpose,
    wmp_inverse,
    wmp_inverse_via_tilde,
    wmp_limit,
    wsvd,
    zeros,
)
from conftest import rand_instance, rand_tensor, rand_weight, well_conditioned_instance


def wsvd_defining_residuals(a, weights, u, s_tensor, v):
    """Residuals of the three weighted-SVD defining relations."""
    u_mat, v_mat = rsh(u), rsh(v)
    recon = einstein_product(einstein_product(u, s_tensor), conj_transpose(v))
    r_recon = frobenius(recon - a)
    r_u = np.linalg.norm(u_mat.conj().T @ weights.m.mat @ u_mat - np.eye(u_mat.shape[1]))
    r_v = np.linalg.norm(v_mat.conj().T @ weights.n.inv @ v_mat - np.eye(v_mat.shape[1]))
    return r_recon, r_u, r_v


class TestWeightValidation:
    def test_rejects_non_hermitian(self):
        with pytest.raises(WeightError, match="Hermitian"):
            Weight(from_matrix([[1.0, 1], [0, 1]]))

    def test_rejects_indefinite(self):
        with pytest.raises(WeightError, match="positive definite"):
            Weight(from_matrix(np.diag([1.0, -2.0])))

    def test_rejects_non_square(self, rng):
        with pytest.raises(WeightError):
            Weight(rand_tensor(rng, (2,), (3,)))

    def test_cached_factors_reconstruct(self, rng):
        w = rand_weight(rng, (2, 2))
        assert np.linalg.norm(w.sqrt @ w.sqrt - w.mat) <= 1e-11 * np.linalg.norm(w.mat)
        assert np.linalg.norm(w.mat @ w.inv - np.eye(4)) <= 1e-11

    def test_pair_conformability(self, rng):
        a = rand_tensor(rng, (2,), (3,))
        pair = WeightPair.identity((3,), (2,))
        with pytest.raises(WeightError):
            pair.check_conformable(a)


class TestWsvd:
    def test_golden_singular_values_and_residuals(self):
        a, weights = gf.wsvd_example()
        f = wsvd(a, weights)
        assert_allclose(f.s, [1.0, 0.5], atol=1e-12)
        residuals = wsvd_defining_residuals(a, weights, f.U, f.s_tensor(), f.V)
        assert max(residuals) <= 1e-12

    def test_printed_factors_pass_same_relations(self):
        a, weights = gf.wsvd_example()
        u, s, v = gf.wsvd_example_printed_factors()
        residuals = wsvd_defining_residuals(a, weights, u, s, v)
        assert max(residuals) <= 1e-12

    def test_identity_input_identity_weights(self):
        ident = identity_tensor((2, 2))
        f = wsvd(ident, WeightPair.identity((2, 2), (2, 2)))
        assert_allclose(f.s, np.ones(4), atol=1e-13)
        assert f.rank == 4

    def test_random_reconstruction(self, rng):
        for _ in range(10):
            a, weights = rand_instance(rng)
            f = wsvd(a, weights)
            r_recon, r_u, r_v = wsvd_defining_residuals(
                a, weights, f.U, f.s_tensor(), f.V
            )
            assert r_recon <= 1e-11 * max(1.0, f.s[0])
            assert max(r_u, r_v) <= 1e-10


class TestHyperdiagPinv:
    def test_golden_table(self):
        _, s, _ = gf.wsvd_example_printed_factors()
        _, expected_pinv, _, _ = gf.wsvd_example_expected()
        assert_allclose(hyperdiag_pinv(s).array, expected_pinv.array, atol=0)

    def test_zero_tensor(self):
        z = zeros((2, 2), (3,))
        out = hyperdiag_pinv(z)
        assert out.row_shape == (3,) and out.col_shape == (2, 2)
        assert frobenius(out) == 0.0

    def test_reciprocal(self):
        s = from_matrix(np.diag([2.0, 0.5]))
        assert_allclose(rsh(hyperdiag_pinv(s)), np.diag([0.5, 2.0]), atol=0)

    def test_rejects_off_diagonal_mass(self):
        with pytest.raises(ShapeError, match="hyperdiagonal"):
            hyperdiag_pinv(from_matrix([[1.0, 0.5], [0, 1]]))


class TestMpInverse:
    def test_diagonal(self):
        a = from_matrix(np.diag([4.0, 0.0]))
        assert_allclose(rsh(mp_inverse(a)), np.diag([0.25, 0.0]), atol=1e-14)

    def test_identity(self):
        ident = identity_tensor((2, 2))
        assert_allclose(mp_inverse(ident).array, ident.array, atol=1e-13)

    def test_big_example_table(self):
        a, _ = gf.big_example()
        assert_allclose(mp_inverse(a).array, gf.big_example_pinv().array, atol=1e-10)


class TestWmpInverse:
    def test_wsvd_example(self):
        a, weights = gf.wsvd_example()
        _, _, expected, _ = gf.wsvd_example_expected()
        assert_allclose(wmp_inverse(a, weights).array, expected.array, atol=1e-12)

    def test_diag4_example(self):
        a, weights, _, expected, _ = gf.matrix_example_diag4()
        assert_allclose(rsh(wmp_inverse(a, weights)), expected, atol=1e-10)

    def test_ones_example(self):
        a, weights, expected = gf.matrix_example_ones()
        assert_allclose(rsh(wmp_inverse(a, weights)), expected, atol=1e-10)

    def test_row_example(self):
        a, weights, expected, _, _ = gf.matrix_example_row()
        assert_allclose(rsh(wmp_inverse(a, weights)), expected, atol=1e-10)

    def test_big_example_table(self):
        a, weights = gf.big_example()
        assert_allclose(
            wmp_inverse(a, weights).array, gf.big_example_wmp().array, atol=1e-10
        )

    def test_identity_weights_match_mp(self, rng):
        for _ in range(10):
            a, _ = rand_instance(rng)
            weights = WeightPair.identity(a.row_shape, a.col_shape)
            dev = frobenius(wmp_inverse(a, weights) - mp_inverse(a))
            assert dev <= 1e-12 * max(1.0, frobenius(mp_inverse(a)))


class TestWeightedConjTranspose:
    def test_identity_weights(self, rng):
        a, _ = rand_instance(rng)
        weights = WeightPair.identity(a.row_shape, a.col_shape)
        assert_allclose(
            weighted_conj_transpose(a, weights).array,
            conj_transpose(a).array,
            atol=1e-13,
        )

    def test_diag4_example(self):
        a, weights, _, _, expected = gf.matrix_example_diag4()
        assert_allclose(rsh(weighted_conj_transpose(a, weights)), expected, atol=1e-13)

    def test_double_sharp_with_equal_weights(self, rng):
        for _ in range(10):
            shape = (2, 2)
            a = rand_tensor(rng, shape, shape)
            w = rand_weight(rng, shape)
            pair = WeightPair(w, w)
            twice = weighted_conj_transpose(weighted_conj_transpose(a, pair), pair)
            assert frobenius(twice - a) <= 1e-11 * (1 + frobenius(a))


class TestWmpLimit:
    def test_identity_closed_form(self):
        ident = identity_tensor((2, 2))
        weights = WeightPair.identity((2, 2), (2, 2))
        out = wmp_limit(ident, weights, 1e-6)
        expected = (1.0 / (1.0 + 1e-6)) * ident
        assert_allclose(out.array, expected.array, atol=1e-14)

    def test_diag4_example_small_lambda(self):
        a, weights, _, expected, _ = gf.matrix_example_diag4()
        out = wmp_limit(a, weights, 1e-8)
        assert np.abs(rsh(out) - expected).max() <= 1e-6

    def test_left_right_agree(self, rng):
        for _ in range(10):
            a, weights = well_conditioned_instance(rng)
            left = wmp_limit(a, weights, 1e-6, "left")
            right = wmp_limit(a, weights, 1e-6, "right")
            assert frobenius(left - right) <= 1e-9 * (1 + frobenius(left))

    def test_rejects_nonpositive_lambda(self, rng):
        a, weights = rand_instance(rng)
        with pytest.raises(ShapeError):
            wmp_limit(a, weights, 0.0)


class TestPenroseResiduals:
    def test_wmp_inverse_satisfies_all(self, rng):
        for _ in range(5):
            a, weights = rand_instance(rng)
            x = wmp_inverse(a, weights)
            assert max(penrose_residuals(a, x, weights)) <= 1e-10

    def test_unweighted_pinv_under_weights(self):
        # the plain pseudoinverse violates the N-symmetry equation here;
        # the M-symmetry one happens to hold (M A A^+ is diagonal real)
        a, weights, pinv, _, _ = gf.matrix_example_diag4()
        x = from_matrix(pinv)
        r1, r2, r3, r4 = penrose_residuals(a, x, weights)
        assert max(r1, r2) <= 1e-12
        assert r3 <= 1e-12
        assert r4 > 0.1

    def test_zero_tensor(self):
        a = zeros((2,), (2,))
        x = zeros((2,), (2,))
        weights = WeightPair.identity((2,), (2,))
        assert penrose_residuals(a, x, weights) == (0.0, 0.0, 0.0, 0.0)


class TestRouteEquivalence:
    def test_three_routes_pairwise(self, rng):
        for _ in range(25):
            a, weights = well_conditioned_instance(rng)
            x_wsvd = wmp_inverse(a, weights)
            x_tilde = wmp_inverse_via_tilde(a, weights)
            scale = 1.0 + frobenius(x_wsvd)
            assert frobenius(x_wsvd - x_tilde) <= 1e-10 * scale
            x_limit = wmp_limit(a, weights, 1e-8)
            assert np.abs(x_wsvd.array - x_limit.array).max() <= 1e-6

    def test_limit_error_monotone(self, rng):
        from einrange.winverse import LIMIT_LAMBDA_DECADES

        for _ in range(5):
            a, weights = well_conditioned_instance(rng, mu_range=(0.1, 2.0))
            x = wmp_inverse(a, weights)
            errors = [
                frobenius(wmp_limit(a, weights, lam) - x)
                for lam in LIMIT_LAMBDA_DECADES
            ]
            for earlier, later in zip(errors, errors[1:]):
                assert later <= earlier * (1 + 1e-9) + 1e-15

    def test_rsh_commutation_with_matrix_route(self, rng):
        # reshaped weighted inverse equals the matrix weighted inverse of
        # the reshaped data under the reshaped weights
        for _ in range(10):
            a, weights = rand_instance(rng)
            x = wmp_inverse(a, weights)
            m_s, m_is = weights.m_sqrt, weights.m_inv_sqrt
            n_s, n_is = weights.n_sqrt, weights.n_inv_sqrt
            mat_route = n_is @ np.linalg.pinv(m_s @ rsh(a) @ n_is) @ m_s
            assert np.linalg.norm(rsh(x) - mat_route) <= 1e-11 * (
                1 + np.linalg.norm(mat_route)
            )
