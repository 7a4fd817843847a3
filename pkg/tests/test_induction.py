import pytest

from integral_htype.induction import (CapExceeded, GradedRep, build_graded, even_doubles,
                                      graded_tensor, induce_graded)
from integral_htype.seeds import octonion_ck, quaternion_c3, seed_graded
from integral_htype.signed import SignedPerm, sp_compose, verify_clifford
from integral_htype.ungraded import expected_dims


def test_induce_from_quaternions():
    W = induce_graded(even_doubles(quaternion_c3()), 3)
    assert W.n == 8 and verify_clifford(W.gens, 3)


def test_induce_from_octonions():
    W = induce_graded(even_doubles(octonion_ck(7)), 7)
    assert W.n == 16


def test_induced_ek_action():
    W = induce_graded(even_doubles(quaternion_c3()), 3)
    ek = W.gens[-1]
    for p in range(4):
        assert ek(p) == (4 + p, 1)
        assert ek(4 + p) == (p, -1)


def test_induced_odd_generators_use_doubles():
    doubles = even_doubles(quaternion_c3())
    W = induce_graded(doubles, 3)
    for i, T in enumerate(doubles):
        for p in range(4):
            q, s = T(p)
            assert W.gens[i](p) == (4 + q, s)
            assert W.gens[i](4 + p) == (q, s)


def test_induce_rejects_bad_family():
    Li, Lj, Lk = quaternion_c3()
    T = sp_compose(Li, Lk)
    with pytest.raises(ValueError, match="even_integral"):
        induce_graded([T, T], 3)
    with pytest.raises(ValueError):
        induce_graded([T], 3)


def test_induce_k1_needs_size():
    with pytest.raises(ValueError):
        induce_graded([], 1)
    assert induce_graded([], 1, m=1).gens[0] == seed_graded(1).gens[0]


def test_tensor_w1_w8():
    T = graded_tensor(seed_graded(1), seed_graded(8))
    assert T.k == 9 and T.n == 32
    assert verify_clifford(T.gens, 9)
    assert T.parity.count(0) == 16


def test_tensor_koszul_sign_is_needed():
    # dropping the Koszul sign breaks anticommutation between the two factors
    A, B = seed_graded(1), seed_graded(2)
    T = graded_tensor(A, B)
    nb = B.n
    naive = [SignedPerm([x * nb + t for x in range(A.n) for t in f.targets],
                        [s for _ in range(A.n) for s in f.signs]) for f in B.gens]
    assert not verify_clifford(list(T.gens[:1]) + naive, 3)


def test_tensor_row_major_order():
    T = graded_tensor(seed_graded(1), seed_graded(2))
    assert T.parity == (0, 1, 1, 0, 1, 0, 0, 1)


@pytest.mark.parametrize("k", range(1, 25))
def test_build_graded_dims(k):
    W = build_graded(k)
    assert W.n == expected_dims(k)[1]
    assert W.check()


@pytest.mark.parametrize("k, dim", [(1, 2), (9, 32), (16, 256)])
def test_build_graded_examples(k, dim):
    assert build_graded(k).n == dim


def test_tensor_dimension_associative():
    a, b, c = seed_graded(1), seed_graded(2), seed_graded(3)
    assert graded_tensor(graded_tensor(a, b), c).n == graded_tensor(a, graded_tensor(b, c)).n


def test_cap():
    with pytest.raises(CapExceeded):
        build_graded(25)
    with pytest.raises(CapExceeded):
        build_graded(10, cap=9)
    with pytest.raises(ValueError):
        build_graded(0)


def test_graded_rep_validates_parity():
    g = SignedPerm([1, 0], [1, -1])
    with pytest.raises(ValueError):
        GradedRep(1, (0, 0), (g,))
