"""Spin algebra and Dicke-basis plumbing."""
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spincat import DickeVector, SpinJ, build_operators, dicke_to_fock, fock_to_dicke


def test_spin_half_matrices_are_half_paulis():
    ops = build_operators(SpinJ(1))
    # ascending-m ordering: (|down>, |up>)
    assert np.array_equal(ops.jz, np.diag([-0.5, 0.5]))
    assert np.array_equal(ops.jp, np.array([[0, 0], [1, 0]], dtype=complex))
    assert np.array_equal(ops.jm, np.array([[0, 1], [0, 0]], dtype=complex))
    assert np.array_equal(ops.jx, np.array([[0, 0.5], [0.5, 0]], dtype=complex))
    assert np.array_equal(ops.jy, np.array([[0, 0.5j], [-0.5j, 0]], dtype=complex))


def test_spin_one_ladder_entries():
    ops = build_operators(SpinJ(2))
    root2 = math.sqrt(2)
    assert ops.jp[1, 0] == pytest.approx(root2, abs=1e-15)
    assert ops.jp[2, 1] == pytest.approx(root2, abs=1e-15)
    top = np.array([0.0, 0.0, 1.0], dtype=complex)
    assert np.all(ops.jp @ top == 0)  # raising the top state annihilates it


@pytest.mark.parametrize("two_j", range(1, 41))
def test_commutators_and_casimir(two_j):
    j = SpinJ(two_j)
    ops = build_operators(j)

    def comm(a, b):
        return a @ b - b @ a

    assert np.max(np.abs(comm(ops.jx, ops.jy) - 1j * ops.jz)) < 1e-12
    assert np.max(np.abs(comm(ops.jy, ops.jz) - 1j * ops.jx)) < 1e-12
    assert np.max(np.abs(comm(ops.jz, ops.jx) - 1j * ops.jy)) < 1e-12
    casimir = ops.jx @ ops.jx + ops.jy @ ops.jy + ops.jz @ ops.jz
    expected = j.j * (j.j + 1) * np.eye(j.dim)
    assert np.max(np.abs(casimir - expected)) < 1e-12


def test_operator_arrays_are_frozen():
    ops = build_operators(SpinJ(3))
    for arr in (ops.jp, ops.jm, ops.jx, ops.jy, ops.jz):
        assert not arr.flags.writeable


@given(st.integers(min_value=1, max_value=64), st.data())
def test_fock_round_trip(two_j, data):
    j = SpinJ(two_j)
    k = data.draw(st.integers(min_value=0, max_value=two_j))
    m = k - j.j
    na, nb = dicke_to_fock(j, m)
    assert (na, nb) == (k, two_j - k)
    j_back, m_back = fock_to_dicke(na, nb)
    assert j_back == j
    assert m_back == m


def test_fock_map_examples():
    assert dicke_to_fock(SpinJ(1), 0.5) == (1, 0)
    assert dicke_to_fock(SpinJ(2), -1.0) == (0, 2)
    assert fock_to_dicke(1, 0) == (SpinJ(1), 0.5)
    assert fock_to_dicke(0, 2) == (SpinJ(2), -1.0)


def test_rejects_invalid_spins_and_weights():
    with pytest.raises(ValueError):
        SpinJ(0)
    with pytest.raises(ValueError):
        SpinJ(65)
    with pytest.raises(ValueError):
        SpinJ.from_j(0.3)
    with pytest.raises(ValueError):
        dicke_to_fock(SpinJ(2), 0.5)  # wrong m parity for integer spin
    with pytest.raises(ValueError):
        dicke_to_fock(SpinJ(2), 2.0)  # |m| > j
    with pytest.raises(ValueError):
        fock_to_dicke(-1, 2)


def test_spin_properties():
    j = SpinJ(3)
    assert j.j == 1.5
    assert j.dim == 4
    assert np.allclose(j.m_values(), [-1.5, -0.5, 0.5, 1.5])
    assert str(j) == "3/2"
    assert str(SpinJ(4)) == "2"
    assert SpinJ.from_j(0.5) == SpinJ(1)
    assert SpinJ.from_j(2.0) == SpinJ(4)


def test_dicke_vector_validation():
    v = DickeVector(SpinJ(1), np.array([1.0, 0.0]))
    assert not v.amplitudes.flags.writeable
    with pytest.raises(ValueError):
        DickeVector(SpinJ(1), np.array([1.0, 1.0]))  # not unit norm
    with pytest.raises(ValueError):
        DickeVector(SpinJ(2), np.array([1.0, 0.0]))  # wrong length
    w = DickeVector(SpinJ(1), np.array([0.0, 1.0]))
    assert v.inner(w) == 0
    with pytest.raises(ValueError):
        v.inner(DickeVector(SpinJ(2), np.array([1.0, 0.0, 0.0])))
