"""Exponential map, invariant sampling, eigenphase paths, SU projection."""

import numpy as np
import pytest
from scipy.linalg import expm

from symsu import (
    DimensionError,
    NotUnitaryError,
    PauliSum,
    Unitary,
    build_basis,
    compose,
    connectedness_path,
    eig_unitary,
    exp_generator,
    identity_unitary,
    is_invariant,
    matrix_from_pairs,
    matrix_to_pairs,
    preset_group,
    project_to_su,
    random_invariant,
)

from conftest import dense_label, dense_sum, fro

SWAP = np.array([
    [1, 0, 0, 0],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [0, 0, 0, 1],
], dtype=complex)


class TestUnitaryType:
    def test_residual_cached(self):
        u = Unitary(np.eye(4))
        assert u.unitarity_residual == 0 and u.dim == 4 and u.n == 2

    def test_non_unitary_rejected(self):
        with pytest.raises(NotUnitaryError):
            Unitary(np.array([[1, 1], [0, 1]], dtype=complex))

    def test_non_power_of_two_rejected(self):
        with pytest.raises(DimensionError):
            Unitary(np.eye(3))

    def test_matrix_is_read_only(self):
        u = identity_unitary(1)
        with pytest.raises(ValueError):
            u.matrix[0, 0] = 2.0

    def test_json_pairs_round_trip(self):
        u = random_invariant(2, preset_group("full_swap", 2), seed=5, depth=4)
        again = matrix_from_pairs(matrix_to_pairs(u.matrix))
        assert np.array_equal(again, u.matrix)


class TestExpGenerator:
    def test_zero_angle_is_identity(self):
        u = exp_generator(PauliSum.from_label("X"), 0.0)
        assert fro(u.matrix - np.eye(2)) < 1e-15

    def test_half_turn_around_x(self):
        u = exp_generator(PauliSum.from_label("X"), np.pi)
        assert fro(u.matrix - (-1j) * dense_label("X")) < 1e-14

    def test_commuting_terms_factorize(self):
        alpha = 0.7
        u = exp_generator(PauliSum.from_labels(2, [("XI", 1), ("IX", 1)]), alpha)
        c, s = np.cos(alpha / 2), np.sin(alpha / 2)
        rx = np.array([[c, -1j * s], [-1j * s, c]])
        assert fro(u.matrix - np.kron(rx, rx)) < 1e-14

    def test_matches_expm_oracle(self):
        rng = np.random.default_rng(7)
        for _ in range(10):
            pairs = [("".join(rng.choice(list("IXYZ"), size=3)), float(rng.normal()))
                     for _ in range(4)]
            h = PauliSum.from_labels(3, pairs)
            alpha = float(rng.uniform(0, 2 * np.pi))
            oracle = expm(-0.5j * alpha * dense_sum(pairs))
            assert fro(exp_generator(h, alpha).matrix - oracle) < 1e-12

    def test_traceless_generator_gives_det_one(self):
        h = PauliSum.from_labels(2, [("XY", 0.4), ("ZI", 1.3), ("YY", -0.2)])
        u = exp_generator(h, 1.1)
        assert abs(np.linalg.det(u.matrix) - 1) < 1e-10

    def test_non_hermitian_rejected(self):
        with pytest.raises(ValueError):
            exp_generator(PauliSum.from_labels(1, [("X", 1j)]), 0.5)

    def test_commuting_diagram(self, s2):
        # symmetrize then exponentiate lands in the invariant group
        basis = build_basis(2, s2)
        rng = np.random.default_rng(3)
        for e in basis.elements:
            u = exp_generator(e, float(rng.uniform(0, 2 * np.pi)))
            flag, _ = is_invariant(u.matrix, s2, 1e-10)
            assert flag


class TestCompose:
    def test_identity_neutral(self, s2):
        u = random_invariant(2, s2, seed=0, depth=3)
        assert fro(compose(u, identity_unitary(2)).matrix - u.matrix) == 0

    def test_inverse_pair(self, s2):
        u = random_invariant(2, s2, seed=1, depth=3)
        assert fro(compose(u, u.dagger()).matrix - np.eye(4)) < 1e-12

    def test_applies_first_operand_first(self):
        a = Unitary(SWAP)
        b = exp_generator(PauliSum.from_label("ZI"), 0.4)
        assert fro(compose(a, b).matrix - b.matrix @ SWAP) == 0

    def test_invariant_product_stays_invariant(self, s2):
        u1 = random_invariant(2, s2, seed=10, depth=6)
        u2 = random_invariant(2, s2, seed=11, depth=6)
        flag, defect = is_invariant(compose(u1, u2).matrix, s2, 1e-11)
        assert flag and defect < 1e-11

    def test_product_invariance_at_scale(self, s3):
        for seed in range(20):
            u1 = random_invariant(3, s3, seed=seed, depth=4)
            u2 = random_invariant(3, s3, seed=1000 + seed, depth=4)
            flag, _ = is_invariant(compose(u1, u2).matrix, s3, 3e-10)
            assert flag


class TestRandomInvariant:
    def test_depth_zero_is_identity(self, s2):
        u = random_invariant(2, s2, seed=9, depth=0)
        assert fro(u.matrix - np.eye(4)) == 0

    def test_swap_defect_small(self, s2):
        u = random_invariant(2, s2, seed=1, depth=8)
        _, defect = is_invariant(u.matrix, s2, 1e-10)
        assert defect < 1e-10

    def test_seed_determinism(self, s2):
        a = random_invariant(2, s2, seed=42, depth=8)
        b = random_invariant(2, s2, seed=42, depth=8)
        assert np.array_equal(a.matrix, b.matrix)

    def test_different_seeds_differ(self, s2):
        a = random_invariant(2, s2, seed=1, depth=8)
        b = random_invariant(2, s2, seed=2, depth=8)
        assert fro(a.matrix - b.matrix) > 1e-3


class TestEigUnitary:
    def test_swap_spectrum(self):
        dec = eig_unitary(Unitary(SWAP))
        assert np.allclose(sorted(dec.thetas), [0, 0, 0, np.pi], atol=1e-12)
        assert fro(dec.reconstruct() - SWAP) < 1e-12
        p = dec.eigenvectors
        assert fro(p.conj().T @ p - np.eye(4)) < 1e-12
        assert sorted(stop - start for start, stop in dec.clusters) == [1, 3]

    def test_diagonal_input(self):
        d = np.diag(np.exp(1j * np.array([0.0, np.pi / 2])))
        dec = eig_unitary(Unitary(d))
        assert np.allclose(sorted(dec.thetas), [0, np.pi / 2], atol=1e-12)
        assert fro(dec.reconstruct() - d) < 1e-12

    def test_within_cluster_thetas_identical(self, s2):
        u = random_invariant(2, s2, seed=8, depth=6)
        dec = eig_unitary(u)
        for start, stop in dec.clusters:
            assert len(set(dec.thetas[start:stop])) == 1

    def test_reconstruction_random_invariant(self, s2):
        for seed in range(8):
            u = random_invariant(2, s2, seed=seed, depth=6)
            dec = eig_unitary(u)
            assert fro(dec.reconstruct() - u.matrix) < 1e-9
            p = dec.eigenvectors
            assert fro(p.conj().T @ p - np.eye(4)) < 1e-9

    def test_hermitian_unitary(self):
        # Y is both Hermitian and unitary; the imaginary pencil part vanishes
        y = np.array([[0, -1j], [1j, 0]])
        dec = eig_unitary(Unitary(y))
        assert np.allclose(sorted(dec.thetas), [0, np.pi], atol=1e-12)
        assert fro(dec.reconstruct() - y) < 1e-12

    def test_branch_cut_degeneracy(self):
        # eigenvalues straddling the -1 point of the circle merge into one cluster
        eps = 1e-12
        d = np.diag([np.exp(1j * (np.pi - eps)), np.exp(1j * (-np.pi + eps)), 1.0, 1.0])
        dec = eig_unitary(Unitary(d))
        assert fro(dec.reconstruct() - d) < 1e-9
        assert len(dec.clusters) == 2


class TestConnectednessPath:
    def test_identity_path_is_constant(self):
        u = identity_unitary(2)
        for t in (0.0, 0.3, 1.0):
            assert fro(connectedness_path(u, t).matrix - np.eye(4)) < 1e-12

    def test_scalar_phase_interpolation(self):
        u = Unitary(np.diag([1.0, np.exp(1j * np.pi / 2)]))
        mid = connectedness_path(u, 0.5)
        assert fro(mid.matrix - np.diag([1.0, np.exp(1j * np.pi / 4)])) < 1e-12

    def test_endpoints(self, s3):
        for seed in range(5):
            u = random_invariant(3, s3, seed=seed, depth=5)
            assert fro(connectedness_path(u, 0.0).matrix - np.eye(8)) < 1e-10
            assert fro(connectedness_path(u, 1.0).matrix - u.matrix) < 1e-9

    def test_invariance_along_path(self, s3):
        u = random_invariant(3, s3, seed=21, depth=6)
        for t in np.arange(0.1, 1.0, 0.1):
            flag, _ = is_invariant(connectedness_path(u, float(t)).matrix, s3, 1e-8)
            assert flag

    def test_lipschitz_continuity(self, s2):
        u = random_invariant(2, s2, seed=4, depth=6)
        dec = eig_unitary(u)
        bound = float(np.sum(np.abs(dec.thetas)))
        delta = 1e-4
        for t in (0.0, 0.25, 0.5, 0.9):
            step = fro(connectedness_path(u, t + delta).matrix
                       - connectedness_path(u, t).matrix)
            assert step <= bound * delta * (1 + 1e-8)

    def test_domain_error(self, s2):
        u = random_invariant(2, s2, seed=4, depth=3)
        with pytest.raises(ValueError):
            connectedness_path(u, 1.2)
        with pytest.raises(ValueError):
            connectedness_path(u, -0.1)

    def test_decomposition_cached(self, s2):
        u = random_invariant(2, s2, seed=4, depth=3)
        connectedness_path(u, 0.2)
        first = u._eig
        connectedness_path(u, 0.7)
        assert u._eig is first


class TestProjectToSu:
    def test_det_one_input_unchanged(self, s2):
        u = random_invariant(2, s2, seed=2, depth=5)  # traceless generators, det 1
        projected = project_to_su(u)
        assert fro(projected.matrix - u.matrix) < 1e-12

    def test_scalar_case(self):
        u = Unitary(1j * np.eye(2))
        projected = project_to_su(u)
        assert abs(np.linalg.det(projected.matrix) - 1) < 1e-12

    def test_det_and_defect(self, s3):
        phase = np.exp(0.3j)
        u = Unitary(phase * random_invariant(3, s3, seed=6, depth=5).matrix)
        projected = project_to_su(u)
        assert abs(np.linalg.det(projected.matrix) - 1) < 1e-10
        _, before = is_invariant(u.matrix, s3, 1e-8)
        _, after = is_invariant(projected.matrix, s3, 1e-8)
        assert abs(before - after) < 1e-12
