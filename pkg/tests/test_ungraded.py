import pytest

from conftest import hamilton
from integral_htype.induction import build_graded
from integral_htype.seeds import quaternion_c3
from integral_htype.signed import SignedPerm, sp_compose, sp_transpose
from integral_htype.ungraded import (UngradedRep, Variant, expected_dims, extract_irreducible,
                                     omega_action, split_by_omega)


def test_omega_on_quaternions_is_minus_identity():
    units = [tuple(int(i == a) for i in range(4)) for a in range(4)]
    i, j, k = units[1], units[2], units[3]
    for x in units:
        assert hamilton(i, hamilton(j, hamilton(k, x))) == tuple(-c for c in x)
    rep = UngradedRep(3, tuple(quaternion_c3()))
    assert omega_action(rep) == -SignedPerm.identity(4)


@pytest.mark.parametrize("k", [3, 7, 11])
def test_omega_properties(k):
    W = build_graded(k)
    w = omega_action(W)
    assert sp_compose(w, w) == SignedPerm.identity(W.n)
    assert sp_transpose(w) == w
    for g in W.gens:
        assert sp_compose(w, g) == sp_compose(g, w)
    # omega is odd, so it exchanges W^0 and W^1
    assert all(W.parity[q] != W.parity[p] for p, q in enumerate(w.targets))


def test_omega_rejects_other_residues():
    with pytest.raises(ValueError):
        omega_action(build_graded(4))


@pytest.mark.parametrize("k", [3, 7, 11])
def test_split(k):
    plus, minus = split_by_omega(build_graded(k))
    assert plus.n == minus.n == build_graded(k).n // 2
    assert all(h == -g for g, h in zip(plus.gens, minus.gens))
    assert omega_action(plus) == SignedPerm.identity(plus.n)
    assert omega_action(minus) == -SignedPerm.identity(minus.n)
    assert plus.check() and minus.check()


def test_split_k3_dims():
    plus, minus = split_by_omega(build_graded(3))
    assert (plus.n, minus.n) == (4, 4)


@pytest.mark.parametrize("k", range(1, 17))
def test_extract_dims(k):
    rep = extract_irreducible(k)
    assert rep.n == expected_dims(k)[0]
    assert rep.check()


def test_expected_dims_table():
    assert [expected_dims(k)[0] for k in range(1, 9)] == [2, 4, 4, 8, 8, 8, 8, 16]
    assert [expected_dims(k)[1] for k in range(1, 9)] == [2, 4, 8, 8, 16, 16, 16, 16]
    for k in range(1, 9):
        assert expected_dims(k + 8) == tuple(16 * x for x in expected_dims(k))


@pytest.mark.parametrize("k, dim", [(5, 8), (4, 8), (11, 64)])
def test_extract_examples(k, dim):
    assert extract_irreducible(k).n == dim


def test_variants():
    assert extract_irreducible(3).variant is Variant.PLUS
    assert extract_irreducible(3, "minus").variant is Variant.MINUS
    assert extract_irreducible(11, Variant.PLUS).n == 64
    assert extract_irreducible(2).variant is Variant.DEFAULT
    for k in (1, 2, 5, 8):
        with pytest.raises(ValueError):
            extract_irreducible(k, Variant.PLUS)
    with pytest.raises(ValueError):
        extract_irreducible(3, "sideways")


def test_variants_distinguished_by_omega():
    for k in (3, 7):
        p = omega_action(extract_irreducible(k, "plus"))
        m = omega_action(extract_irreducible(k, "minus"))
        assert p != m


@pytest.mark.parametrize("k", [5, 6, 13])
def test_restriction_keeps_first_generators(k):
    rep = extract_irreducible(k)
    big = extract_irreducible(k + 7 - k % 8, "plus")
    assert rep.gens == big.gens[:k]
