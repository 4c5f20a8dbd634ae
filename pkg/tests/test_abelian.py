import itertools

import pytest

from liecolour import (
    dual_characters,
    element_add,
    field,
    full_subgroup,
    h_perp,
    jordan_holder,
    make_group,
    quotient,
    subgroup_from_generators,
    trivial_subgroup,
    twist_reps,
)
from liecolour.errors import InvalidInput

from conftest import battery_groups


def test_make_group_examples():
    g = make_group([2, 2])
    assert g.order() == 4 and g.exponent == 2
    assert make_group([4]).exponent == 4
    g6 = make_group([2, 3])
    assert g6.order() == 6 and g6.exponent == 6


def test_make_group_rejects_small_orders():
    with pytest.raises(InvalidInput):
        make_group([2, 1])
    with pytest.raises(InvalidInput):
        make_group([])


def test_element_add_examples():
    g = make_group([2, 2])
    assert element_add(g, (1, 0), (0, 1)) == (1, 1)
    assert element_add(g, (1, 1), (1, 1)) == (0, 0)
    z4 = make_group([4])
    assert element_add(z4, (3,), (3,)) == (2,)
    with pytest.raises(InvalidInput):
        element_add(g, (1, 0), (1,))


def test_element_add_group_laws():
    for g in battery_groups():
        els = g.elements()
        zero = g.zero()
        for a in els:
            assert g.add(a, zero) == a
            assert g.add(a, g.neg(a)) == zero
            for b in els:
                assert g.add(a, b) == g.add(b, a)


def test_subgroup_from_generators_examples():
    g = make_group([2, 2])
    assert subgroup_from_generators(g, [(1, 1)]).elements == ((0, 0), (1, 1))
    assert subgroup_from_generators(g, []).elements == ((0, 0),)
    z4 = make_group([4])
    assert subgroup_from_generators(z4, [(2,)]).elements == ((0,), (2,))


def test_quotient_canonical_reps():
    g = make_group([2, 2])
    h = subgroup_from_generators(g, [(1, 1)])
    q = quotient(g, h)
    # independent oracle: enumerate cosets directly and take lex-smallest
    seen = set()
    expected = []
    for e in sorted(g.elements()):
        if e in seen:
            continue
        coset = sorted(g.add(e, x) for x in h.elements)
        seen.update(coset)
        expected.append(coset[0])
    assert sorted(q.coset_reps) == sorted(expected) == [(0, 0), (0, 1)]
    assert q.order() == 2


def test_quotient_trivial_cases():
    for g in battery_groups():
        assert quotient(g, trivial_subgroup(g)).order() == g.order()
        assert quotient(g, full_subgroup(g)).order() == 1


def test_quotient_reps_partition_group():
    for g in battery_groups():
        for h in _all_subgroups(g):
            q = quotient(g, h)
            hits = {rep: 0 for rep in q.coset_reps}
            for e in g.elements():
                hits[q.rep(e)] += 1
            assert all(v == h.order() for v in hits.values())


def test_quotient_rejects_foreign_subgroup():
    g, g2 = make_group([2, 2]), make_group([4])
    h = trivial_subgroup(g2)
    with pytest.raises(InvalidInput):
        quotient(g, h)


def test_jordan_holder_examples():
    assert jordan_holder(make_group([2, 2])).quotient_orders() == [2, 2]
    assert jordan_holder(make_group([4])).quotient_orders() == [2, 2]
    # largest prime is peeled first
    assert jordan_holder(make_group([2, 3])).quotient_orders() == [3, 2]


def test_jordan_holder_is_a_composition_series():
    import math

    for g in battery_groups() + [make_group([2, 3]), make_group([8, 2])]:
        series = jordan_holder(g)
        chain = series.chain
        assert chain[0].order() == g.order()
        assert chain[-1].order() == 1
        for a, b in zip(chain, chain[1:]):
            assert b.is_subset_of(a)
        orders = series.quotient_orders()
        assert all(_is_prime(p) for p in orders)
        assert math.prod(orders) == g.order()


def _is_prime(n):
    return n > 1 and all(n % d for d in range(2, n))


def test_dual_characters_counts_and_closure():
    f = field(4)
    for g in battery_groups():
        chars = dual_characters(g)
        assert len(chars) == g.order()
        table = {c.exponents for c in chars}
        for a in chars:
            for b in chars:
                assert (a * b).exponents in table
    z2 = make_group([2])
    vals = [c.eval((1,), f) for c in dual_characters(z2)]
    assert sorted(str(v) for v in vals) == sorted([str(f.one), str(-f.one)])


def test_dual_characters_z3_values():
    g = make_group([3])
    f = field(12)
    values = {c.exponents: c.eval((1,), f) for c in dual_characters(g)}
    assert values[(0,)] == 1
    assert values[(1,)] == f.zeta(4)
    assert values[(2,)] == f.zeta(8)


def test_h_perp_examples():
    g = make_group([2, 2])
    h = subgroup_from_generators(g, [(1, 1)])
    perp = h_perp(g, h)
    # independent oracle: test f((1,1)) = 1 over all four characters
    f = field(2)
    expected = {
        c.exponents for c in dual_characters(g) if c.eval((1, 1), f) == 1
    }
    assert set(perp.elements) == expected == {(0, 0), (1, 1)}
    assert h_perp(g, trivial_subgroup(g)).order() == 4
    assert h_perp(g, full_subgroup(g)).elements == ((0, 0),)


def test_h_perp_order_is_quotient_order():
    for g in battery_groups():
        for h in _all_subgroups(g):
            assert h_perp(g, h).order() == g.order() // h.order()


def test_twist_reps_examples():
    g = make_group([2, 2])
    h = subgroup_from_generators(g, [(1, 1)])
    reps = twist_reps(g, h)
    assert len(reps) == 2
    assert reps[0].is_trivial()
    assert reps[1].exponents == (0, 1)
    assert len(twist_reps(g, trivial_subgroup(g))) == 1
    z2 = make_group([2])
    assert len(twist_reps(z2, full_subgroup(z2))) == 2


def test_twist_reps_count_equals_subgroup_order():
    for g in battery_groups():
        for h in _all_subgroups(g):
            reps = twist_reps(g, h)
            assert len(reps) == h.order()
            assert reps[0].is_trivial()


def _all_subgroups(g):
    """Every subgroup, by closing all element subsets (groups here are tiny)."""
    seen = {}
    els = g.elements()
    for r in range(0, min(len(els), 3) + 1):
        for gens in itertools.combinations(els, r):
            sub = subgroup_from_generators(g, list(gens))
            seen[sub.elements] = sub
    return list(seen.values())
