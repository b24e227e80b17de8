import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chiroptics.errors import ValidationError
from chiroptics.quantum import MoleculeModel, mirror_model, truncate_model
from chiroptics.quantum.builders import random_complete_model, random_hermitian_model, two_state_chiral


def test_rejects_non_hermitian_with_indices():
    m = two_state_chiral()
    p = np.array(m.p)
    p[0, 1, 2] = 0.3
    with pytest.raises(ValidationError, match=r"<0\|p\|1>|<1\|p\|0>"):
        MoleculeModel(m.energies, p, m.mu)


def test_rejects_shape_mismatch():
    with pytest.raises(ValidationError, match="shape"):
        MoleculeModel([0, 1, 2], np.zeros((2, 2, 3)), np.zeros((3, 3, 3)))


def test_rejects_negative_gamma():
    m = two_state_chiral()
    with pytest.raises(ValidationError):
        MoleculeModel(m.energies, m.p, m.mu, [0.0, -1.0])


def test_arrays_are_read_only():
    m = two_state_chiral()
    with pytest.raises(ValueError):
        m.p[0, 1, 0] = 1.0


def test_index_check():
    m = two_state_chiral()
    with pytest.raises(ValidationError):
        m.check_index(2)


def test_defined_parity():
    assert two_state_chiral().has_defined_parity()
    assert not random_hermitian_model(3, 1, zero_permanent=False).has_defined_parity()


@given(st.integers(2, 8), st.integers(0, 2**32 - 1))
def test_mirror_is_involution(n, seed):
    m = random_hermitian_model(n, seed, name="x")
    back = mirror_model(mirror_model(m))
    assert np.array_equal(back.p, m.p) and np.array_equal(back.mu, m.mu)
    assert back.name == "x"


@given(st.integers(2, 8), st.integers(0, 2**32 - 1))
def test_mirror_preserves_invariants(n, seed):
    m = mirror_model(random_hermitian_model(n, seed))
    assert np.allclose(m.p, m.p.conj().transpose(1, 0, 2), rtol=0, atol=0)


def test_truncate():
    m = random_complete_model(5, 3)
    t = truncate_model(m, [0, 2, 4])
    assert t.n_states == 3
    assert t.p[1, 2, 0] == m.p[2, 4, 0]
    assert t.energies[2] == m.energies[4]
