import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corrqec.pauli import (
    KINDS,
    CorrelatedPauli,
    NoiseSpec,
    apply_correlated,
    channel_apply,
    channel_compose,
    commutes,
    compose_specs,
    pauli_matrix,
    product_phase,
)
from corrqec.state import DimensionError, dagger, is_density, ket, random_density

from fixtures import dense_correlated


def dense_channel(spec, rho):
    n = int(np.log2(rho.shape[0]))
    out = np.zeros_like(rho)
    for p, kind in zip(spec.probs, KINDS):
        e = dense_correlated(kind, n)
        out += p * e @ rho @ dagger(e)
    return out


specs = st.lists(st.floats(0.01, 1.0), min_size=4, max_size=4).map(
    lambda xs: NoiseSpec(*(x / sum(xs) for x in xs[:3]), 1 - sum(xs[:3]) / sum(xs))
)


class TestApply:
    def test_x3(self):
        assert np.array_equal(apply_correlated(CorrelatedPauli("X", 3), ket("000")), ket("111"))

    def test_y3(self):
        out = apply_correlated(CorrelatedPauli("Y", 3), ket("000"))
        assert np.array_equal(out, -1j * ket("111"))
        assert np.allclose(dense_correlated("Y", 3) @ ket("000"), out)

    def test_z5(self):
        out = apply_correlated(CorrelatedPauli("Z", 5), ket("01101"))
        assert np.array_equal(out, -ket("01101"))
        assert np.allclose(dense_correlated("Z", 5) @ ket("01101"), out)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            apply_correlated(CorrelatedPauli("X", 3), ket("00"))

    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("kind", KINDS)
    def test_matches_kronecker_exhaustive(self, kind, n):
        op = CorrelatedPauli(kind, n)
        dense = dense_correlated(kind, n)
        assert np.array_equal(pauli_matrix(op), dense)
        cols = np.stack([apply_correlated(op, ket(j, n)) for j in range(2**n)], axis=1)
        assert np.array_equal(cols, dense)


class TestPauliMatrix:
    def test_z1(self):
        assert np.array_equal(pauli_matrix(CorrelatedPauli("Z", 1)), np.diag([1, -1]))

    def test_x2(self):
        assert np.array_equal(pauli_matrix(CorrelatedPauli("X", 2)), np.eye(4)[::-1])

    def test_y1_actions(self):
        y = pauli_matrix(CorrelatedPauli("Y", 1))
        assert np.array_equal(y @ ket("0"), 1j * ket("1"))
        assert np.array_equal(y @ ket("1"), -1j * ket("0"))

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("kind", KINDS)
    def test_unitary_hermitian(self, kind, n):
        m = pauli_matrix(CorrelatedPauli(kind, n))
        assert np.max(np.abs(m - dagger(m))) < 1e-12
        assert np.max(np.abs(m @ dagger(m) - np.eye(2**n))) < 1e-12

    def test_size_guard(self):
        with pytest.raises(MemoryError):
            pauli_matrix(CorrelatedPauli("X", 11))

    def test_invalid(self):
        with pytest.raises(ValueError):
            CorrelatedPauli("W", 3)
        with pytest.raises(ValueError):
            CorrelatedPauli("X", 0)


class TestProductPhase:
    @pytest.mark.parametrize("n", [3, 4])
    def test_squares(self, n):
        for kind in KINDS:
            op = CorrelatedPauli(kind, n)
            assert product_phase(op, op) == (CorrelatedPauli("I", n), 1)

    def test_xy4_even(self):
        # Z_4 = (-1)^2 X_4 Y_4
        assert product_phase(CorrelatedPauli("X", 4), CorrelatedPauli("Y", 4)) == (
            CorrelatedPauli("Z", 4),
            1,
        )

    def test_xy3_odd(self):
        c, phase = product_phase(CorrelatedPauli("X", 3), CorrelatedPauli("Y", 3))
        assert c.kind == "Z" and phase == -1j
        assert np.allclose(dense_correlated("X", 3) @ dense_correlated("Y", 3), -1j * dense_correlated("Z", 3))

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    @pytest.mark.parametrize("a,b", list(itertools.product(KINDS, KINDS)))
    def test_against_dense(self, a, b, n):
        c, phase = product_phase(CorrelatedPauli(a, n), CorrelatedPauli(b, n))
        assert phase in (1, -1, 1j, -1j)
        assert np.allclose(dense_correlated(a, n) @ dense_correlated(b, n), phase * dense_correlated(c.kind, n))

    @pytest.mark.parametrize("n", [3, 4, 5])
    @pytest.mark.parametrize("a,b", list(itertools.product(KINDS, KINDS)))
    def test_commutation(self, a, b, n):
        ma, mb = dense_correlated(a, n), dense_correlated(b, n)
        dense_commute = np.allclose(ma @ mb, mb @ ma)
        assert commutes(CorrelatedPauli(a, n), CorrelatedPauli(b, n)) == dense_commute
        if n % 2 == 0:
            assert dense_commute


class TestNoiseSpec:
    def test_strict_rejects_zero(self):
        with pytest.raises(ValueError):
            NoiseSpec(1, 0, 0, 0)
        assert NoiseSpec(1, 0, 0, 0, relaxed=True).probs == (1, 0, 0, 0)

    def test_sum(self):
        with pytest.raises(ValueError):
            NoiseSpec(0.4, 0.3, 0.2, 0.2)

    def test_negative(self):
        with pytest.raises(ValueError):
            NoiseSpec(1.1, -0.1, 0, 0, relaxed=True)

    def test_json(self):
        spec = NoiseSpec.from_json_obj({"p": [0.4, 0.3, 0.2, 0.1]})
        assert spec.to_json_obj() == {"p": [0.4, 0.3, 0.2, 0.1]}


class TestChannel:
    def test_identity(self):
        rho = random_density(3, 0)
        assert np.array_equal(channel_apply(NoiseSpec(1, 0, 0, 0, relaxed=True), rho), rho)

    def test_z_on_even_weight(self):
        rho = np.outer(ket("0110"), ket("0110"))
        assert np.array_equal(channel_apply(NoiseSpec(0, 0, 0, 1, relaxed=True), rho), rho)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_dense(self, n):
        spec = NoiseSpec(0.4, 0.3, 0.2, 0.1)
        rho = random_density(n, n)
        out = channel_apply(spec, rho)
        assert np.max(np.abs(out - dense_channel(spec, rho))) < 1e-14

    @given(specs, st.integers(0, 1000), st.integers(1, 5))
    @settings(max_examples=30, deadline=None)
    def test_trace_hermitian_psd(self, spec, seed, n):
        out = channel_apply(spec, random_density(n, seed))
        assert is_density(out, tol=1e-12, check_psd=True)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            channel_apply(NoiseSpec(0.4, 0.3, 0.2, 0.1), np.eye(3))


class TestCompose:
    def test_once(self):
        spec, rho = NoiseSpec(0.4, 0.3, 0.2, 0.1), random_density(3, 1)
        assert np.array_equal(channel_compose(spec, 1, rho), channel_apply(spec, rho))

    def test_x_twice(self):
        rho = random_density(3, 2)
        assert np.allclose(channel_compose(NoiseSpec(0, 1, 0, 0, relaxed=True), 2, rho), rho, atol=1e-15)

    @given(specs, st.integers(0, 1000), st.sampled_from([3, 4]), st.integers(2, 5))
    @settings(max_examples=30, deadline=None)
    def test_against_repeated(self, spec, seed, n, times):
        rho = random_density(n, seed)
        brute = rho
        for _ in range(times):
            brute = dense_channel(spec, brute)
        assert np.max(np.abs(channel_compose(spec, times, rho) - brute)) < 1e-10

    def test_klein_group(self):
        # X then Z is Y up to phase
        spec = compose_specs(NoiseSpec(0, 1, 0, 0, relaxed=True), NoiseSpec(0, 0, 0, 1, relaxed=True))
        assert spec.probs == (0, 0, 1, 0)

    def test_times_guard(self):
        with pytest.raises(ValueError):
            channel_compose(NoiseSpec(0.4, 0.3, 0.2, 0.1), 0, np.eye(2))
