import random
from fractions import Fraction

import pytest

from ncpoisson.catalog import abelian
from ncpoisson.lm import (
    LMBracket,
    LMMorphism,
    LMObject,
    NotAMorphism,
    ShapeMismatch,
    as_matrix,
    check_induced_dual_prepoisson,
    check_lie_object,
    check_poisson_object,
    identity,
    liezation_object,
    lm_tensor_morphism,
    lm_tensor_object,
    matmul,
    poissonization_object,
    same_matrix,
    zeros,
)
from ncpoisson.loday import liezation


def test_tensor_of_zero_maps():
    t = lm_tensor_object(LMObject.zero(2, 1), LMObject.zero(1, 3))
    assert (t.v1_dim, t.v0_dim) == (2 * 3 + 1 * 1, 3)
    assert not any(t.rho.flat)


def test_tensor_of_identities_adds():
    one = LMObject.from_rows([[1]], 1, 1)
    t = lm_tensor_object(one, one)
    assert same_matrix(t.rho, as_matrix([[1, 1]]))


def test_liezation_of_l2_squared_shape(l2_liez):
    obj, _, _ = liezation_object(l2_liez)
    t = lm_tensor_object(obj, obj)
    assert (t.v1_dim, t.v0_dim) == (4, 1)


def test_morphism_square_is_enforced():
    a = LMObject.from_rows([[1, 0]], 2, 1)
    with pytest.raises(NotAMorphism):
        LMMorphism(a, a, as_matrix([[0, 1], [1, 0]]), identity(1))
    with pytest.raises(ShapeMismatch):
        LMMorphism(a, a, identity(3), identity(1))


def test_tensor_of_identity_morphisms():
    a = LMObject.from_rows([[1, 2]], 2, 1)
    b = LMObject.from_rows([[0], [3]], 1, 2)
    assert lm_tensor_morphism(LMMorphism.identity(a), LMMorphism.identity(b)) == \
        LMMorphism.identity(lm_tensor_object(a, b))


def test_zero_f1_block():
    a = LMObject.zero(1, 1)
    F = LMMorphism(a, a, zeros(1, 1), as_matrix([[2]]))
    G = LMMorphism(a, a, as_matrix([[3]]), as_matrix([[5]]))
    T = lm_tensor_morphism(F, G)
    assert same_matrix(T.f1, as_matrix([[0, 0], [0, 6]]))


def _random_matrix(rng, r, c):
    return as_matrix([[rng.randint(-2, 2) for _ in range(c)] for _ in range(r)])


def _random_morphism(rng, src: LMObject) -> LMMorphism:
    """``(F1, F0)`` with diagonal invertible ``F1``; the target is ``F0 ρ F1^-1``."""
    d = [rng.choice([-2, -1, 1, 3]) for _ in range(src.v1_dim)]
    f1 = as_matrix([[d[i] if i == j else 0 for j in range(len(d))] for i in range(len(d))])
    inv = as_matrix([[Fraction(1, d[i]) if i == j else 0 for j in range(len(d))] for i in range(len(d))])
    f0 = _random_matrix(rng, src.v0_dim, src.v0_dim)
    return LMMorphism(src, LMObject(matmul(matmul(f0, src.rho), inv)), f1, f0)


@pytest.mark.parametrize("seed", range(6))
def test_tensor_is_functorial(seed):
    rng = random.Random(seed)
    a = LMObject(_random_matrix(rng, 1, 2))
    b = LMObject(_random_matrix(rng, 2, 1))
    F = _random_morphism(rng, a)
    F2 = _random_morphism(rng, F.target)
    G = _random_morphism(rng, b)
    G2 = _random_morphism(rng, G.target)
    lhs = lm_tensor_morphism(F2.compose(F), G2.compose(G))
    rhs = lm_tensor_morphism(F2, G2).compose(lm_tensor_morphism(F, G))
    assert lhs == rhs


def test_composition_with_endomorphisms():
    a = LMObject.from_rows([[1, 1]], 2, 1)
    swap = LMMorphism(a, a, as_matrix([[0, 1], [1, 0]]), identity(1))
    double = LMMorphism(a, a, as_matrix([[2, 0], [0, 2]]), as_matrix([[2]]))
    lhs = lm_tensor_morphism(swap.compose(double), double.compose(swap))
    rhs = lm_tensor_morphism(swap, double).compose(lm_tensor_morphism(double, swap))
    assert lhs == rhs


def test_lie_objects(any_liez):
    assert check_lie_object(*liezation_object(any_liez)).ok


def test_doctored_action_fails_equivariance(sl2_liez):
    obj, br, carrier = liezation_object(sl2_liez)
    left = br.mu1_left.copy()
    left[0, 1, 1] = -left[0, 1, 1]
    report = check_lie_object(obj, LMBracket(obj, br.mu0, left, br.mu1_right), carrier)
    assert not report.ok
    assert report.failures[0].witness


@pytest.mark.parametrize("degree", [2, 3])
def test_poisson_objects(test_liez, degree):
    assert check_poisson_object(*poissonization_object(test_liez, degree), degree).ok


def test_poisson_object_of_abelian():
    assert check_poisson_object(*poissonization_object(liezation(abelian(2)), 2), 2).ok


def test_induced_products(any_liez):
    assert check_induced_dual_prepoisson(any_liez, 2).ok
