import pytest

from ncpoisson.catalog import abelian, heisenberg, l2, sl2, sl2_hemisemidirect
from ncpoisson.linear import SparseVector
from ncpoisson.loday import (
    DuplicateName,
    IndexOutOfRange,
    LeibnizViolation,
    LodayAlgebra,
    ann_ideal,
    bracket,
    check_leibniz,
    check_liezation,
    leibnizator,
    liezation,
    liezation_unchecked,
)


def test_sl2_brackets():
    A = sl2()
    H, X, Y = (A.basis(i) for i in range(3))
    assert bracket(A, H, X) == X.scale(2)
    assert bracket(A, X, Y) == H
    assert bracket(A, SparseVector(3), X) == SparseVector(3)


def test_l2_square():
    A = l2()
    a, b = A.basis(0), A.basis(1)
    assert bracket(A, a, a) == b
    assert not bracket(A, a, b) and not bracket(A, b, a)


def test_idempotent_square_is_not_leibniz():
    with pytest.raises(LeibnizViolation) as info:
        LodayAlgebra(["e"], {(0, 0, 0): 1})
    assert info.value.triple == (0, 0, 0)
    assert info.value.residual == SparseVector(1, {0: -1})
    report = check_leibniz(LodayAlgebra(["e"], {(0, 0, 0): 1}, validate=False))
    assert [(f.witness, f.lhs) for f in report.failures] == [(("e", "e", "e"), "-e")]


def test_load_errors():
    with pytest.raises(IndexOutOfRange):
        LodayAlgebra(["a"], {(0, 1, 0): 1})
    with pytest.raises(DuplicateName):
        LodayAlgebra(["a", "a"], {})


@pytest.mark.parametrize("make", [sl2, l2, heisenberg, sl2_hemisemidirect, lambda: abelian(3)])
def test_leibnizator_vanishes(make):
    A = make()
    assert check_leibniz(A).ok
    for i in range(A.dim):
        assert not leibnizator(A, A.basis(i), A.basis(i), A.basis(0))


def test_ann_ideal():
    assert ann_ideal(sl2()).dim == 0
    assert ann_ideal(abelian(2)).dim == 0
    S = ann_ideal(l2())
    assert S.dim == 1 and S.contains(l2().basis(1))
    assert ann_ideal(sl2_hemisemidirect()).dim == 2


def test_liezation_of_sl2_is_identity():
    L = liezation(sl2())
    assert L.quotient_dim == 3
    assert [L.project(L.parent.basis(i)) for i in range(3)] == [SparseVector.basis(3, i) for i in range(3)]


def test_liezation_of_l2():
    A = l2()
    L = liezation(A)
    assert L.quotient_dim == 1 and L.quotient_names == ("a",)
    assert L.act(L.lift(0), A.basis(0)) == A.basis(1)
    assert not L.act(L.lift(0), A.basis(1))
    assert not L.project(A.basis(1))
    assert L.quotient_brackets() == {} or not any(L.quotient_brackets().values())


def test_liezation_of_hemisemidirect_keeps_sl2():
    L = liezation(sl2_hemisemidirect())
    assert L.quotient_names == ("H", "X", "Y")
    assert check_liezation(L).ok


def test_check_liezation_catches_bad_constants():
    A = sl2()
    good = liezation(A)
    bad = dict(good.lie_c)
    key = next(k for k, v in bad.items() if v)
    bad[key] = -bad[key]
    report = check_liezation(liezation_unchecked(A, lie_c=bad))
    assert not report.ok and report.failures[0].witness
