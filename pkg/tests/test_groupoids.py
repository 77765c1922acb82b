from fractions import Fraction

import pytest

from weakhopf.groupoids import (GroupoidError, InvalidAction, action_groupoid,
                                antipode_map, composability_element,
                                coproduct_element, counit_functional,
                                cyclic_group, function_algebra, group_groupoid,
                                pair_groupoid, source_indicator,
                                target_indicator)
from weakhopf.linalg import unit_vec, vtensor


def arrow(g, label):
    return g.index[label]


def delta(g, label):
    return unit_vec(arrow(g, label))


def test_pair_groupoid_sizes():
    assert pair_groupoid(1).size == 1
    g = pair_groupoid(2)
    assert g.size == 4
    assert len(g.units) == 2


def test_pair_groupoid_composition_rule():
    g = pair_groupoid(2)
    a, b = arrow(g, "(1,2)"), arrow(g, "(2,1)")
    assert g.compose[(a, b)] == arrow(g, "(1,1)")
    # (1,1)(1,2) is defined: source of (1,1) is object 1 = target of (1,2)
    assert g.compose[(arrow(g, "(1,1)"), a)] == a
    # (1,2)(1,2) is not composable: source 2 != target 1
    assert (a, a) not in g.compose


def test_trivial_action_two_points():
    g = action_groupoid(cyclic_group(1), ["1", "2"],
                        {("g0", "1"): "1", ("g0", "2"): "2"})
    assert g.size == 2
    assert len(g.units) == 2


def test_z2_swap_action():
    z2 = cyclic_group(2)
    act = {("g0", "1"): "1", ("g0", "2"): "2",
           ("g1", "1"): "2", ("g1", "2"): "1"}
    g = action_groupoid(z2, ["1", "2"], act)
    assert g.size == 4
    assert len(g.units) == 2


def test_z2_trivial_action_is_group():
    g = group_groupoid(cyclic_group(2))
    assert g.size == 2
    assert len(g.units) == 1
    # total composition: a group
    assert len(g.compose) == 4


def test_invalid_action_detected():
    z2 = cyclic_group(2)
    bad = {("g0", "1"): "1", ("g0", "2"): "2",
           ("g1", "1"): "1", ("g1", "2"): "1"}
    with pytest.raises(InvalidAction):
        action_groupoid(z2, ["1", "2"], bad)


def test_function_algebra_unit_is_sum_of_point_masses():
    g = pair_groupoid(2)
    alg = function_algebra(g)
    alg.validate()
    assert alg.unit() == {i: Fraction(1) for i in range(4)}


def test_coproduct_slice_example():
    # composable pairs with product (1,2) and second leg (2,2):
    # only ((1,2),(2,2)), by enumeration of the composition table
    g = pair_groupoid(2)
    alg = function_algebra(g)
    n = g.size
    df = coproduct_element(g, delta(g, "(1,2)"))
    sliced = {}
    q = arrow(g, "(2,2)")
    for p_idx, c in df.items():
        r, s = divmod(p_idx, n)
        if s == q:
            sliced[p_idx] = c
    expected = vtensor(delta(g, "(1,2)"), delta(g, "(2,2)"), n)
    assert sliced == expected


def test_coproduct_of_zero():
    g = pair_groupoid(3)
    assert coproduct_element(g, {}) == {}


def test_group_coproduct_is_everywhere_defined():
    g = group_groupoid(cyclic_group(2))
    assert composability_element(g) == {p * g.size + q: Fraction(1)
                                        for p in range(2) for q in range(2)}


def test_composability_indicator_products():
    g = pair_groupoid(2)
    n = g.size
    e = composability_element(g)
    x = vtensor(delta(g, "(1,2)"), delta(g, "(2,1)"), n)
    y = vtensor(delta(g, "(1,2)"), delta(g, "(1,2)"), n)
    # pointwise product with the indicator keeps composable pairs only
    from weakhopf.algebra import TensorSquare
    t2 = TensorSquare(function_algebra(g))
    assert t2.mul(e, x) == x   # source(1,2)=2 equals target(2,1)=2
    assert t2.mul(e, y) == {}  # source(1,2)=2 differs from target(1,2)=1


def test_composable_pair_count_oracle():
    # |{(p,q): source p = target q}| for the n-point pair groupoid is n^3
    for n in (1, 2, 3):
        g = pair_groupoid(n)
        count = sum(1 for p in range(g.size) for q in range(g.size)
                    if g.source[p] == g.target[q])
        assert len(g.compose) == count == n ** 3
    assert len(pair_groupoid(2).compose) == 8


def test_antipode_and_counit_values():
    g = pair_groupoid(2)
    s = antipode_map(g)
    assert s.apply(delta(g, "(1,2)")) == delta(g, "(2,1)")
    eps = counit_functional(g)
    assert eps.get(arrow(g, "(1,2)")) is None
    assert eps[arrow(g, "(1,1)")] == Fraction(1)


def test_antipode_fixes_unit_supported_functions():
    g = pair_groupoid(3)
    s = antipode_map(g)
    f = {u: Fraction(k + 1) for k, u in enumerate(g.units)}
    assert s.apply(f) == f


def test_source_target_indicators():
    g = pair_groupoid(2)
    u1 = arrow(g, "(1,1)")
    assert source_indicator(g, u1) == {arrow(g, "(1,1)"): Fraction(1),
                                       arrow(g, "(2,1)"): Fraction(1)}
    assert target_indicator(g, u1) == {arrow(g, "(1,1)"): Fraction(1),
                                       arrow(g, "(1,2)"): Fraction(1)}


def test_groupoid_validation_rejects_broken_tables():
    g = pair_groupoid(2)
    broken = dict(g.compose)
    (p, q), _ = next(iter(broken.items()))
    del broken[(p, q)]
    with pytest.raises(GroupoidError):
        type(g)(g.arrows, g.source, g.target, g.inverse, broken)


def test_antipode_is_an_involution():
    for g in (pair_groupoid(3), group_groupoid(cyclic_group(4))):
        s = antipode_map(g)
        assert s @ s == type(s).identity(g.size)
