import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corrqec.state import (
    DimensionError,
    dagger,
    from_json_obj,
    is_density,
    is_isometry,
    is_projector,
    is_scalar_multiple_of_projector,
    isometry_projector,
    ket,
    partial_trace_leading,
    partial_trace_trailing,
    random_density,
    random_isometry,
    tensor,
    tensor_all,
    to_json_obj,
)

from fixtures import SIGMA


def random_matrix(dim, seed):
    rng = np.random.default_rng(seed)
    return rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))


class TestTensor:
    def test_ket_convention(self):
        v = tensor(ket("0"), ket("1"))
        assert np.array_equal(v, np.eye(4)[1])

    def test_zz_diagonal(self):
        assert np.array_equal(tensor(SIGMA["Z"], SIGMA["Z"]), np.diag([1, -1, -1, 1]))

    def test_xy_hand_expanded(self):
        # sigma_x (x) sigma_y = [[0, Y], [Y, 0]]
        expected = np.array(
            [
                [0, 0, 0, -1j],
                [0, 0, 1j, 0],
                [0, -1j, 0, 0],
                [1j, 0, 0, 0],
            ]
        )
        assert np.array_equal(tensor(SIGMA["X"], SIGMA["Y"]), expected)

    def test_kind_mismatch(self):
        with pytest.raises(DimensionError):
            tensor(ket("0"), SIGMA["X"])

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=25)
    def test_associative(self, seed):
        a, b, c = (random_matrix(2, seed + i) for i in range(3))
        # float products are not associative bit-for-bit
        assert np.max(np.abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c)))) < 1e-12

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=25)
    def test_dagger_distributes(self, seed):
        a, b = random_matrix(2, seed), random_matrix(4, seed + 1)
        assert np.array_equal(dagger(tensor(a, b)), tensor(dagger(a), dagger(b)))


class TestDagger:
    def test_identity(self):
        assert np.array_equal(dagger(np.eye(4)), np.eye(4))

    def test_involution(self):
        a = random_matrix(8, 3)
        assert np.array_equal(dagger(dagger(a)), a)

    def test_entrywise(self):
        a = np.array([[0, 1j], [2 - 1j, 3]])
        assert np.array_equal(dagger(a), np.array([[0, 2 + 1j], [-1j, 3]]))


class TestPartialTrace:
    def test_product(self):
        sigma, rho = random_density(1, 0), random_density(2, 1)
        assert np.allclose(partial_trace_leading(tensor(sigma, rho), 1), rho, atol=1e-14)
        assert np.allclose(partial_trace_trailing(tensor(sigma, rho), 2), sigma, atol=1e-14)

    def test_maximally_mixed(self):
        assert np.allclose(partial_trace_leading(np.eye(4) / 4, 1), np.eye(2) / 2)

    def test_three_qubit_product(self):
        factors = [random_density(1, s) for s in (5, 6, 7)]
        rho = tensor_all(*factors)
        assert np.allclose(partial_trace_leading(rho, 2), factors[2], atol=1e-14)

    @given(st.integers(0, 10_000), st.integers(1, 3))
    @settings(max_examples=25)
    def test_trace_preserved(self, seed, k):
        rho = random_density(4, seed)
        assert abs(np.trace(partial_trace_leading(rho, k)) - 1) < 1e-12
        assert abs(np.trace(partial_trace_trailing(rho, k)) - 1) < 1e-12

    def test_bad_dimension(self):
        with pytest.raises(DimensionError):
            partial_trace_leading(np.eye(6), 1)
        with pytest.raises(DimensionError):
            partial_trace_leading(np.eye(4), 2)


class TestScalarMultiple:
    def setup_method(self):
        self.p = isometry_projector(random_isometry(8, 3, 0))

    def test_self(self):
        assert is_scalar_multiple_of_projector(self.p, self.p) == pytest.approx(1)

    def test_zero(self):
        assert is_scalar_multiple_of_projector(np.zeros((8, 8)), self.p) == 0

    def test_not_scalar(self):
        assert is_scalar_multiple_of_projector(np.eye(8), self.p) is None

    def test_rank_zero(self):
        with pytest.raises(ValueError):
            is_scalar_multiple_of_projector(np.eye(2), np.zeros((2, 2)))

    @given(st.integers(0, 10_000), st.integers(1, 7))
    @settings(max_examples=25)
    def test_isometry_projector(self, seed, cols):
        v = random_isometry(8, cols, seed)
        p = isometry_projector(v)
        assert is_isometry(v) and is_projector(p)
        assert is_scalar_multiple_of_projector(p, p) == pytest.approx(1)


class TestRandomDensity:
    def test_deterministic(self):
        assert np.array_equal(random_density(3, 42), random_density(3, 42))

    def test_valid(self):
        rho = random_density(3, 1)
        assert abs(np.trace(rho) - 1) < 1e-12
        assert np.max(np.abs(rho - dagger(rho))) < 1e-12
        assert is_density(rho, check_psd=True)
        assert np.linalg.matrix_rank(rho) == 8

    def test_rejects_zero_qubits(self):
        with pytest.raises(ValueError):
            random_density(0, 1)


class TestJson:
    @pytest.mark.parametrize(
        "a", [random_density(2, 0), random_isometry(8, 2, 1), np.eye(4)[2].astype(complex)]
    )
    def test_roundtrip(self, a):
        assert np.array_equal(from_json_obj(to_json_obj(a)), a)

    def test_format(self):
        obj = to_json_obj(np.array([[1, 1j], [0, 2]]))
        assert obj == {"dim": 2, "entries": [[1.0, 0.0], [0.0, 1.0], [0.0, 0.0], [2.0, 0.0]]}
