import numpy as np
import pytest

from builders import F2, F3, F5, Q, linear_quiver, truncated_poly
from gradalg.algcore import algebra_from_table, validate_algebra
from gradalg.constructions import (
    GroupRep, abelian_group_table, abelian_pgroup_algebra, character_idempotents, exterior_skew,
    exterior_symmetric_predicate, group_algebra, pgroup_semidirect, recognize_trivial_extension,
    trivial_extension, truncated_polynomial_algebra,
)
from gradalg.exactla import Field
from gradalg.errors import (
    CharMismatch, DegreesOutOfRange, DimensionMismatch, FormShiftMismatch, OrderNotInvertible,
)
from gradalg.grading import Grading, graded_dims
from gradalg.homo import cartan_graded, is_symmetrizing, peirce_graded_dims


def test_trivial_extension_products():
    b, _ = truncated_poly(Q, 2)
    a, g, t = trivial_extension(b)
    assert a.labels == ("1", "x", "1*", "x*")
    assert g.degrees == (0, 0, 1, 1)
    assert validate_algebra(a) == []
    # x * x* = 1* since (x f)(y) = f(y x)
    x, xs = a.basis_vector(1), a.basis_vector(3)
    assert np.array_equal(a.mul(x, xs), a.basis_vector(2))
    assert is_symmetrizing(a, t)


def test_trivial_extension_keeps_base_grading():
    b, gb = truncated_poly(Q, 2)
    a, g, _ = trivial_extension(b, gb)
    assert g.degrees == (0, 1, 1, 0)


def test_recognition_rejects_bad_input():
    a, g, t = trivial_extension(linear_quiver(Q, 2)[0])
    with pytest.raises(DegreesOutOfRange):
        recognize_trivial_extension(a, Grading(tuple(2 * d for d in g.degrees)), t)
    with pytest.raises(FormShiftMismatch):
        recognize_trivial_extension(a, g, a.unit)


def test_group_enumeration():
    q8 = GroupRep(F3, [[[0, -1], [1, 0]], [[1, 1], [1, -1]]])
    assert q8.order == 8 and not q8.is_abelian()
    assert all(q8.table[i][q8.inverse[i]] == 0 for i in range(8))
    assert GroupRep.plus_minus(Q, 2).order == 2
    with pytest.raises(DimensionMismatch):
        GroupRep(Q, [])


def test_character_idempotents_are_orthogonal():
    elems, table, _ = abelian_group_table(3, [1])
    # over F7 the cube roots of unity exist
    F7 = Field(7)
    idem, chars = character_idempotents(F7, 3, table, [elems.index((1,))])
    C, unit, _ = group_algebra(F7, 3, table)
    a = algebra_from_table(F7, C, unit)
    vals = list(idem.values())
    assert len(vals) == 3
    for i, e in enumerate(vals):
        for j, f in enumerate(vals):
            assert np.array_equal(a.mul(e, f), e if i == j else F7.zeros(3))
    assert np.array_equal(F7.reduce(sum(vals)), unit)


def test_exterior_skew_shapes():
    e = exterior_skew(2, GroupRep.plus_minus(Q, 2))
    assert e.algebra.dim == 8
    assert graded_dims(e.algebra, e.grading) == (2, 4, 2)
    assert str(cartan_graded(e.algebra, e.grading)) == "[[1 + q^2, 2q], [2q, 1 + q^2]]"
    assert e.nakayama.nu == {"chi0": "chi0", "chi1": "chi1"}


def test_exterior_guards():
    with pytest.raises(DimensionMismatch):
        exterior_skew(3, GroupRep.trivial(Q, 2))
    with pytest.raises(OrderNotInvertible):
        exterior_symmetric_predicate(2, GroupRep(F2, [[[0, 1], [1, 0]]]))


def test_predicate_cases():
    assert not exterior_symmetric_predicate(2, GroupRep.trivial(Q, 2))
    assert exterior_symmetric_predicate(2, GroupRep.plus_minus(Q, 2))
    assert exterior_symmetric_predicate(3, GroupRep.trivial(Q, 3))
    assert not exterior_symmetric_predicate(3, GroupRep.plus_minus(Q, 3))
    assert not exterior_symmetric_predicate(2, GroupRep(F5, [[[2, 0], [0, 1]]]))


def test_abelian_pgroups():
    a, g = abelian_pgroup_algebra(2, [2])
    assert graded_dims(a, g) == (1, 1, 1, 1)
    a, g = abelian_pgroup_algebra(3, [1])
    assert graded_dims(a, g) == (1, 1, 1)
    with pytest.raises(CharMismatch):
        abelian_pgroup_algebra(2, [1], Q)


def test_truncated_polynomial_algebra():
    a, g, mons = truncated_polynomial_algebra(F2, [2, 2])
    assert a.dim == 4 and graded_dims(a, g) == (1, 2, 1)


def test_semidirect_matches_exterior_peirce_dims():
    order3 = [[0, 1], [1, 1]]
    a, g = pgroup_semidirect(2, [1, 1], [order3])
    assert graded_dims(a, g) == (3, 6, 3)
    e = exterior_skew(2, GroupRep(F2, [order3], 2))
    assert peirce_graded_dims(a, g) == peirce_graded_dims(e.algebra, e.grading)
