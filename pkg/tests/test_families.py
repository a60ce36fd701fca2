import numpy as np
import pytest

from entclass import (
    CLASS_DICKE2,
    CLASS_DOUBLE,
    CLASS_NTUPLE,
    CLASS_TAGS,
    ClassStateSpec,
    InvariantViolation,
    LocalBasis,
    PureState,
    LocalUnitaryParams,
    apply_local_unitary,
    eval_gme,
    eval_i2,
    eval_in,
    eval_in_minus1,
    evaluate_all,
    fig3_family,
    ghz,
    hermitian_eigenvalues,
    make_dicke2,
    make_double,
    make_ntuple,
    mix,
    permute_qubits,
    projector,
    random_class_member,
    random_pure_state,
    sample_biseparable,
    sample_class_mixture,
    tensor,
    w_state,
)

from oracles import bf_fig3, schmidt_rank

CLASS_EVAL = {CLASS_DOUBLE: eval_i2, CLASS_NTUPLE: eval_in, CLASS_DICKE2: eval_in_minus1}


class TestLocalBasis:
    def test_computational(self):
        b = LocalBasis.computational(3)
        assert np.allclose(b.ket(1), [1, 0])
        assert np.allclose(b.ket_orth(1), [0, 1])

    def test_random_is_orthonormal(self, rng):
        b = LocalBasis.random(4, rng)
        for i in range(1, 5):
            x = b.ket(i)
            y = b.ket_orth(i)
            assert abs(np.vdot(x, x) - 1) < 1e-12
            assert abs(np.vdot(y, y) - 1) < 1e-12
            assert abs(np.vdot(y, x)) < 1e-12

    def test_unnormalized_rejected(self):
        with pytest.raises(ValueError):
            LocalBasis([1.0, 1.0], [1.0, 0.0])


class TestSpecValidation:
    def test_zero_coefficient_rejected(self):
        basis = LocalBasis.computational(3)
        with pytest.raises(ValueError):
            ClassStateSpec(CLASS_DOUBLE, 3, basis, (1.0, 0.0))

    def test_wrong_count_rejected(self):
        basis = LocalBasis.computational(3)
        with pytest.raises(ValueError):
            ClassStateSpec(CLASS_NTUPLE, 3, basis, (1.0,))

    def test_unnormalized_rejected(self):
        basis = LocalBasis.computational(3)
        with pytest.raises(ValueError):
            ClassStateSpec(CLASS_DOUBLE, 3, basis, (1.0, 1.0))

    def test_dicke_takes_no_coefficients(self):
        basis = LocalBasis.computational(3)
        with pytest.raises(ValueError):
            ClassStateSpec(CLASS_DICKE2, 3, basis, (1.0, 0.0, 0.0))

    def test_unknown_tag(self):
        with pytest.raises(ValueError):
            ClassStateSpec("swirl", 3, LocalBasis.computational(3), None)


class TestMakeDouble:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_computational_gives_ghz_exactly(self, n):
        amps = ghz(n).amplitudes
        expected = np.zeros(2**n, dtype=complex)
        expected[0] = expected[-1] = 1 / np.sqrt(2)
        assert np.array_equal(amps, expected)

    def test_random_basis_has_schmidt_rank_two_everywhere(self, rng):
        basis = LocalBasis.random(4, rng)
        spec = ClassStateSpec(CLASS_DOUBLE, 4, basis, (0.6, 0.8j))
        state = make_double(spec)
        assert abs(np.linalg.norm(state.amplitudes) - 1) < 1e-12
        for part in [{1}, {2}, {3}, {4}, {1, 2}, {1, 3}, {1, 4}]:
            assert schmidt_rank(state.amplitudes, 4, part) == 2

    def test_wrong_tag_rejected(self):
        spec = ClassStateSpec(CLASS_NTUPLE, 3, LocalBasis.computational(3), (1, 1, 1) / np.sqrt(3))
        with pytest.raises(ValueError):
            make_double(spec)


class TestMakeNtuple:
    def test_computational_w3(self):
        amps = w_state(3).amplitudes
        expected = np.zeros(8, dtype=complex)
        expected[[1, 2, 4]] = 1 / np.sqrt(3)
        assert np.allclose(amps, expected, atol=1e-15)

    def test_four_qubit_single_excitation_family_member(self):
        amps = w_state(4).amplitudes
        expected = np.zeros(16, dtype=complex)
        expected[[1, 2, 4, 8]] = 0.5
        assert np.allclose(amps, expected, atol=1e-15)

    def test_flip_components_are_orthogonal(self, rng):
        n = 4
        basis = LocalBasis.random(n, rng)
        components = []
        for i in range(1, n + 1):
            kets = [basis.ket_orth(k) if k == i else basis.ket(k) for k in range(1, n + 1)]
            vec = kets[0]
            for k in kets[1:]:
                vec = np.kron(vec, k)
            components.append(vec)
        for i in range(n):
            for j in range(n):
                want = 1.0 if i == j else 0.0
                assert abs(np.vdot(components[i], components[j]) - want) < 1e-12


class TestMakeDicke2:
    def test_four_qubit_computational(self):
        state = make_dicke2(4, LocalBasis.computational(4))
        expected = np.zeros(16, dtype=complex)
        for i in range(1, 5):
            for j in range(i + 1, 5):
                expected[(1 << (4 - i)) | (1 << (4 - j))] = 1 / np.sqrt(6)
        assert np.allclose(state.amplitudes, expected, atol=1e-15)

    def test_three_qubit_computational(self):
        state = make_dicke2(3, LocalBasis.computational(3))
        expected = np.zeros(8, dtype=complex)
        expected[[3, 5, 6]] = 1 / np.sqrt(3)
        assert np.allclose(state.amplitudes, expected, atol=1e-15)

    def test_too_few_qubits_rejected(self):
        with pytest.raises(ValueError):
            make_dicke2(2, LocalBasis.computational(2))

    def test_random_basis_normalized(self, rng):
        state = make_dicke2(5, LocalBasis.random(5, rng))
        assert abs(np.linalg.norm(state.amplitudes) - 1) < 1e-12


class TestSamplers:
    def test_single_member_mixture_is_pure(self):
        rho = sample_class_mixture(CLASS_DOUBLE, 3, 1, seed=5)
        purity = np.trace(rho.mat @ rho.mat).real
        assert abs(purity - 1.0) < 1e-10

    @pytest.mark.parametrize("tag", CLASS_TAGS)
    def test_reproducible(self, tag):
        a = sample_class_mixture(tag, 4, 3, seed=11)
        b = sample_class_mixture(tag, 4, 3, seed=11)
        assert np.array_equal(a.mat, b.mat)

    def test_biseparable_reproducible(self):
        a = sample_biseparable(4, 3, seed=11)
        b = sample_biseparable(4, 3, seed=11)
        assert np.array_equal(a.mat, b.mat)

    @pytest.mark.parametrize(
        "tag,n",
        [
            (tag, n)
            for tag in CLASS_TAGS
            for n in (3, 4, 5)
            # two-flip closure holds from n = 4 on; at n = 3 that family
            # degenerates into the single-flip one (see the degeneracy tests)
            if not (tag == CLASS_DICKE2 and n == 3)
        ],
    )
    def test_class_mixtures_satisfy_own_inequality(self, tag, n):
        rng = np.random.default_rng(100 + n)
        for _ in range(40):
            rho = sample_class_mixture(tag, n, int(rng.integers(1, 4)), rng)
            assert CLASS_EVAL[tag](rho).lhs <= 1e-9

    def test_two_flip_family_degenerates_at_three_qubits(self):
        # flipping the local basis turns two flips of three into one flip,
        # so the three-qubit family contains the W state itself and part
        # of it violates its own witness
        flipped = LocalBasis(np.zeros(3), np.ones(3))
        state = make_dicke2(3, flipped)
        assert np.allclose(state.amplitudes, w_state(3).amplitudes, atol=1e-15)
        assert eval_in_minus1(projector(state)).lhs == pytest.approx(1.0, abs=1e-12)

    def test_two_flip_closure_from_four_qubits_on(self):
        for n in (4, 5, 6):
            rng = np.random.default_rng(300 + n)
            for _ in range(60):
                rho = projector(random_class_member(CLASS_DICKE2, n, rng))
                assert eval_in_minus1(rho).lhs <= 1e-9

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_biseparable_satisfies_everything(self, n):
        rng = np.random.default_rng(200 + n)
        for _ in range(40):
            rho = sample_biseparable(n, int(rng.integers(1, 4)), rng)
            for report in evaluate_all(rho):
                assert report.lhs <= 1e-9

    def test_full_product_state_satisfies_everything(self, rng):
        state = tensor([random_pure_state(1, rng) for _ in range(4)])
        for report in evaluate_all(projector(state)):
            assert report.lhs <= 1e-9

    def test_cross_cut_mixture_is_valid_and_undetected(self, rng):
        # mixture of pair-entangled pure states across all three cuts
        bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
        single = np.array([1, 0])
        parts = []
        for perm in ([1, 2, 3], [1, 3, 2], [2, 3, 1]):
            block = tensor([PureState(2, bell), PureState(1, single)])
            parts.append(projector(permute_qubits(block, perm)))
        rho = mix([(1 / 3, p) for p in parts])
        assert eval_gme(rho).lhs <= 1e-9

    def test_class_member_closure_under_lu_and_permutation(self, rng):
        for tag in CLASS_TAGS:
            state = random_class_member(tag, 4, rng)
            rho = projector(state)
            angles = np.column_stack(
                [rng.uniform(0, np.pi / 2, 4), rng.uniform(0, 2 * np.pi, (4, 2))]
            )
            rho = apply_local_unitary(rho, LocalUnitaryParams(angles))
            perm = [int(p) + 1 for p in rng.permutation(4)]
            rho = permute_qubits(rho, perm)
            assert CLASS_EVAL[tag](rho).lhs <= 1e-9

    def test_bad_count_rejected(self):
        with pytest.raises(ValueError):
            sample_class_mixture(CLASS_DOUBLE, 3, 0, seed=0)
        with pytest.raises(ValueError):
            sample_biseparable(3, 0, seed=0)


class TestFig3Family:
    def test_pure_ghz_corner(self):
        assert np.allclose(fig3_family(1.0, 0.0).mat, projector(ghz(4)).mat, atol=1e-14)

    def test_white_noise_corner(self):
        assert np.allclose(fig3_family(0.0, 0.0).mat, np.eye(16) / 16)

    def test_interior_point_is_valid(self):
        rho = fig3_family(0.3, 0.3)
        eigs = hermitian_eigenvalues(rho.mat)
        assert eigs[0] >= -1e-12
        assert abs(eigs.sum() - 1.0) < 1e-12

    def test_matches_entrywise_oracle(self):
        assert np.allclose(fig3_family(0.2, 0.45).mat, bf_fig3(0.2, 0.45), atol=1e-14)

    def test_out_of_simplex_rejected(self):
        with pytest.raises(ValueError):
            fig3_family(-0.1, 0.2)
        with pytest.raises(ValueError):
            fig3_family(0.7, 0.55)
