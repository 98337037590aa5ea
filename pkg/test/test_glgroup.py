import numpy as np
import pytest

import dickson.lib.glgroup as glgroup
import dickson.lib.invariants as invariants
from dickson.lib import GroupTag
from dickson.lib.utils import SingularMatrixError


def test_matrix():
    with pytest.raises(SingularMatrixError):
        glgroup.GLMatrix([[1, 2], [2, 4]], 3)
    g = glgroup.GLMatrix([[1, 2], [1, 0]], 3)
    assert g @ g.inverse() == glgroup.GLMatrix.identity(2, 3)
    assert g ** 0 == glgroup.GLMatrix.identity(2, 3)
    assert g.det() == 1
    assert glgroup.omega(3, 5) @ glgroup.omega(3, 5) == glgroup.GLMatrix.identity(3, 5)


def test_composition():
    comp = glgroup.Composition((1, 2))
    assert comp.nu == (1, 3)
    assert comp.n == 3
    assert comp.block_of(2) == 1
    assert glgroup.Composition((1, 1, 1)).refines(comp)
    assert len(list(glgroup.compositions(3))) == 4


def test_group_orders():
    assert glgroup.gl_order(2, 2) == 6
    assert glgroup.group_order(glgroup.generators(GroupTag.GL, 2, 2)) == 6
    assert glgroup.group_order(glgroup.generators(GroupTag.GL, 2, 3)) == 48
    assert glgroup.group_order(glgroup.generators(GroupTag.UN, 3, 2)) == 8
    comp = glgroup.Composition((1, 2))
    assert glgroup.group_order(glgroup.parabolic_generators(comp, 2)) == glgroup.parabolic_order(comp, 2)


def test_membership():
    p, n = 3, 3
    for g in glgroup.generators(GroupTag.P1N1, n, p):
        assert glgroup.in_subgroup(g, GroupTag.P1N1)
    for g in glgroup.generators(GroupTag.PN11, n, p):
        assert glgroup.in_subgroup(g, GroupTag.PN11)
    assert not glgroup.in_subgroup(glgroup.elementary(n, p, 1, 0), GroupTag.UN)
    assert glgroup.in_subgroup(glgroup.elementary(n, p, 0, 1), GroupTag.UN)


def test_primitive_poly():
    assert glgroup.find_primitive_poly(3, 2) == (2, 1, 1)
    assert glgroup.find_primitive_poly(2, 3) == (1, 0, 1, 1)
    a = glgroup.companion_matrix((2, 1, 1), 3)
    assert a.to_list() == [[0, 1], [1, 2]]
    assert np.array_equal(glgroup.evaluate_matrix_poly((2, 1, 1), a), np.zeros((2, 2), dtype=np.int64))


def test_coset_reps():
    assert glgroup.coset_reps(3, 2, GroupTag.UN).index() == 16
    assert glgroup.coset_reps(2, 3, GroupTag.P1N1).index() == 7
    assert glgroup.subgroup_index(GroupTag.SYLOW, 3, 2) == 21
    for p, n, tag in [(2, 2, GroupTag.P1N1), (3, 2, GroupTag.PN11), (3, 2, GroupTag.UN), (2, 3, GroupTag.PN11)]:
        assert glgroup.verify_coset_family(glgroup.coset_reps(p, n, tag))


def test_coset_variants():
    base = glgroup.coset_reps(3, 2, GroupTag.P1N1)
    for family in (base.transposed(), base.omega_conjugated()):
        assert family.index() == base.index()
        assert glgroup.verify_coset_family(family)
        for g in family.subgroup_generators():
            assert family.member(g)


def test_is_invariant():
    p, n = 3, 2
    d = invariants.make_d(p, n, n, 0)
    assert glgroup.is_invariant(d, glgroup.generators(GroupTag.GL, n, p))
    h2 = invariants.make_h(p, n, 2)
    assert glgroup.is_invariant(h2, glgroup.generators(GroupTag.UN, n, p))
    assert not glgroup.is_invariant(h2, glgroup.generators(GroupTag.GL, n, p))
