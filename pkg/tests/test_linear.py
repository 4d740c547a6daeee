from fractions import Fraction

import pytest

from ncpoisson.linear import (
    CommMonomial,
    CommPoly,
    DimensionMismatch,
    ExtPoly,
    HPoly,
    SparseVector,
    as_rational,
    ext_mul,
    ext_sort,
    format_rational,
    monomials_up_to,
    rank,
    span,
)


def test_rationals_normalise():
    assert as_rational("4/2") == 2 and type(as_rational("4/2")) is int
    assert as_rational("-3/6") == Fraction(-1, 2)
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    with pytest.raises(ZeroDivisionError):
        as_rational("1/0")


def test_sparse_vector_arithmetic():
    u = SparseVector.from_dense([1, 0, 2])
    v = SparseVector.from_dense([-1, 3, 0])
    assert (u + v).dense() == [0, 3, 2]
    assert not (u - u)
    with pytest.raises(DimensionMismatch):
        u + SparseVector.from_dense([1, 2])


def test_span_and_rank():
    vs = [SparseVector.from_dense(r) for r in ([1, 1, 0], [0, 1, 1], [1, 2, 1])]
    S = span(vs)
    assert S.dim == 2 == rank(vs)
    assert S.contains(SparseVector.from_dense([2, 3, 1]))
    assert not S.contains(SparseVector.from_dense([0, 0, 1]))


def test_comm_monomials_sorted():
    assert CommMonomial.of(2, 0, 1) == (0, 1, 2)
    assert CommMonomial.of(1, 1).exponents == {1: 2}
    assert len(monomials_up_to(3, 2)) == 10


def test_exterior_signs():
    sign, m = ext_sort([1, 0])
    assert (sign, m) == (-1, (0, 1))
    assert ext_mul((0,), (0,))[1] is None
    a, b = ExtPoly.generator(0), ExtPoly.generator(1)
    assert (a ^ b) == -(b ^ a)
    assert not (a ^ a)


def test_hpoly_coefficients():
    f = HPoly({(CommMonomial.of(0), 0): 1, (CommMonomial.of(), 2): Fraction(1, 2)})
    assert f.coefficient_of(2) == CommPoly({CommMonomial.of(): Fraction(1, 2)})
    assert not f.divisible_by_h()
