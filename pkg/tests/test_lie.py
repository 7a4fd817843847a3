import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from integral_htype.lie import (StructTensor, bracket, check_plus_minus_iso, structure_constants,
                                verify_htype)
from integral_htype.ungraded import extract_irreducible


def test_k1_constants_from_complex_oracle():
    A = structure_constants(extract_irreducible(1))
    # A^1_{12} = (i * 1, i) on basis v_1 = 1, v_2 = i
    v = [1 + 0j, 1j]
    J = lambda x: 1j * x
    inner = lambda x, y: (x.conjugate() * y).real
    for p, q in itertools.product(range(2), repeat=2):
        assert A.entry(0, p, q) == inner(J(v[p]), v[q])
    assert A.entry(0, 0, 1) == 1 and A.entry(0, 1, 0) == -1
    assert sorted(A.triples()) == [(0, 0, 1, 1), (0, 1, 0, -1)]


@pytest.mark.parametrize("k", range(1, 13))
def test_tensor_invariants(k):
    A = structure_constants(extract_irreducible(k))
    assert A.check()
    assert set(A.entries.values()) <= {1, -1}
    assert len(A.entries) == A.m * A.n


def test_antisymmetry_k7_all_slots():
    A = structure_constants(extract_irreducible(7))
    for a, p, q in itertools.product(range(7), range(8), range(8)):
        assert A.entry(a, p, q) == -A.entry(a, q, p)


def test_bracket_k1():
    A = structure_constants(extract_irreducible(1))
    assert bracket([1, 0], [0, 1], A) == [1]
    with pytest.raises(ValueError):
        bracket([1, 0, 0], [0, 1], A)


vec = lambda n: st.lists(st.integers(-9, 9), min_size=n, max_size=n)


@pytest.mark.parametrize("k", [2, 3, 7])
def test_bracket_properties(k, tensors):
    A = tensors[k]

    @settings(max_examples=50)
    @given(vec(A.n), vec(A.n), vec(A.n))
    def check(v, v2, w):
        assert bracket(v, v, A) == [0] * A.m
        lhs = bracket([x + y for x, y in zip(v, v2)], w, A)
        assert lhs == [x + y for x, y in zip(bracket(v, w, A), bracket(v2, w, A))]
        br = bracket(v, w, A)
        assert sum(c * c for c in br) <= sum(c * c for c in v) * sum(c * c for c in w)

    check()


@pytest.mark.parametrize("k", [1, 2, 3, 4, 8])
def test_bracket_defines_J(k, tensors):
    # (z, [v, w]) = (J_z v, w) with J_{e_a} the dense generator matrix
    A = tensors[k]
    mats = [g.to_matrix() for g in A.generators()]
    eye_v = np.eye(A.n, dtype=int)
    for a, p, q in itertools.product(range(A.m), range(A.n), range(A.n)):
        assert bracket(eye_v[p], eye_v[q], A)[a] == (mats[a] @ eye_v[p]) @ eye_v[q]


@pytest.mark.parametrize("k", range(1, 13))
def test_verify_htype(k):
    assert verify_htype(extract_irreducible(k))


def test_J_squared_k2():
    A = structure_constants(extract_irreducible(2))
    M = A.generators()[0].to_matrix()
    assert np.array_equal(M @ M, -np.eye(4, dtype=int))


def test_corrupted_tensor_located():
    A = structure_constants(extract_irreducible(3))
    signs = [list(r) for r in A.signs]
    signs[1][2] = -signs[1][2]
    bad = StructTensor(A.m, A.n, A.targets, signs)
    report = verify_htype(bad)
    assert not report and report.witness[0] == 1 and 2 in report.witness[1:]


def test_from_triples_rejects():
    good = [(0, 0, 1, 1), (0, 1, 0, -1)]
    assert StructTensor.from_triples(1, 2, good).entry(0, 0, 1) == 1
    with pytest.raises(ValueError, match="A\\^a_pq"):
        StructTensor.from_triples(1, 2, [(0, 0, 1, 1), (0, 1, 0, 1)])
    with pytest.raises(ValueError, match="two nonzero"):
        StructTensor.from_triples(1, 2, good + [(0, 0, 0, 1)])
    with pytest.raises(ValueError, match="no nonzero"):
        StructTensor.from_triples(1, 2, good[:1])
    with pytest.raises(ValueError):
        StructTensor.from_triples(1, 2, [(0, 0, 1, 2), (0, 1, 0, -2)])


def test_structure_constants_requires_valid_module():
    from integral_htype.signed import SignedPerm
    from integral_htype.ungraded import UngradedRep
    with pytest.raises(ValueError):
        structure_constants(UngradedRep(1, (SignedPerm.identity(2),)))


@pytest.mark.parametrize("k", [3, 7, 11])
def test_plus_minus_iso(k):
    assert check_plus_minus_iso(k)


def test_plus_minus_naive_correspondence_negates():
    p = structure_constants(extract_irreducible(3, "plus"))
    m = structure_constants(extract_irreducible(3, "minus"))
    assert p != m and -m == p


def test_plus_minus_wrong_residue():
    with pytest.raises(ValueError):
        check_plus_minus_iso(4)
