import pytest

from axial.fusion import (
    FusionLaw, extended_star, grade_split, ising_law, monster_law,
    pure_subsets, useful_rules,
)
from axial.linalg import rat

ONE, ZERO, Q, T = rat(1), rat(0), rat(1, 4), rat(1, 32)


def fz(*vals):
    return frozenset(vals)


def test_monster_table_values():
    law = monster_law()
    assert law.star(ONE, ONE) == fz(ONE)
    assert law.star(ONE, ZERO) == fz()
    assert law.star(ONE, Q) == fz(Q)
    assert law.star(ONE, T) == fz(T)
    assert law.star(ZERO, ZERO) == fz(ZERO)
    assert law.star(ZERO, Q) == fz(Q)
    assert law.star(ZERO, T) == fz(T)
    assert law.star(Q, Q) == fz(ONE, ZERO)
    assert law.star(Q, T) == fz(T)
    assert law.star(T, T) == fz(ONE, ZERO, Q)
    assert law.plus == fz(ONE, ZERO, Q)
    assert law.minus == fz(T)
    # symmetry
    for a in law.values:
        for b in law.values:
            assert law.star(a, b) == law.star(b, a)


def test_monster_is_ising_quarter_thirtysecond():
    assert monster_law() == ising_law('1/4', '1/32')


def test_law_validation_rejects_bad_gradings():
    one, zero, q, t = ONE, ZERO, Q, T
    tab = {
        (one, one): {one}, (one, zero): set(), (one, q): {q},
        (one, t): {t}, (zero, zero): {zero}, (zero, q): {q},
        (zero, t): {t}, (q, q): {one, zero}, (q, t): {t},
        (t, t): {one, zero, q},
    }
    # odd part must be a singleton
    with pytest.raises(ValueError):
        FusionLaw((one, zero, q, t), tab, {one, zero}, {q, t})
    # table must respect the grading
    bad = dict(tab)
    bad[(t, t)] = {t}
    with pytest.raises(ValueError):
        FusionLaw((one, zero, q, t), bad, {one, zero, q}, {t})
    # 1 * 1 inside {1}
    bad2 = dict(tab)
    bad2[(one, one)] = {one, zero}
    with pytest.raises(ValueError):
        FusionLaw((one, zero, q, t), bad2, {one, zero, q}, {t})
    with pytest.raises(ValueError):
        ising_law(1, '1/32')


def test_extended_star():
    law = monster_law()
    assert extended_star(law, fz(Q), fz(Q)) == fz(ONE, ZERO)
    assert extended_star(law, fz(T), fz(T)) == fz(ONE, ZERO, Q)
    assert extended_star(law, fz(ONE, ZERO), fz(ONE, ZERO)) == fz(ONE, ZERO)
    assert extended_star(law, fz(ONE), fz(ZERO)) == fz()
    assert extended_star(law, fz(ONE, ZERO, Q), fz(ONE, ZERO, Q)) \
        == fz(ONE, ZERO, Q)
    assert extended_star(law, fz(), fz(ONE)) == fz()


def test_grade_split():
    law = monster_law()
    ev, od = grade_split(law, [ONE, Q, T])
    assert ev == fz(ONE, Q) and od == fz(T)
    ev, od = grade_split(law, [ZERO])
    assert ev == fz(ZERO) and od == fz()


def test_pure_subsets_order_and_count():
    law = monster_law()
    plus = pure_subsets(law, law.plus)
    assert len(plus) == 7
    assert plus[0] == fz(ZERO) and plus[1] == fz(ONE) and plus[2] == fz(Q)
    assert plus[-1] == fz(ONE, ZERO, Q)
    assert pure_subsets(law, law.minus) == [fz(T)]


def test_monster_useful_rules_are_the_twelve():
    law = monster_law()
    rules = useful_rules(law)
    got = {(r.i_set, r.j_set, r.k_set) for r in rules} | \
          {(r.j_set, r.i_set, r.k_set) for r in rules}
    expected = [
        (fz(ONE), fz(ZERO), fz()),
        (fz(ONE), fz(ONE, ZERO), fz(ONE)),
        (fz(ONE), fz(ZERO, Q), fz(Q)),
        (fz(ONE), fz(ONE, ZERO, Q), fz(ONE, Q)),
        (fz(ZERO), fz(ONE, ZERO), fz(ZERO)),
        (fz(ZERO), fz(ONE, Q), fz(Q)),
        (fz(ZERO), fz(ONE, ZERO, Q), fz(ZERO, Q)),
        (fz(Q), fz(Q), fz(ONE, ZERO)),
        (fz(Q), fz(ONE, ZERO), fz(Q)),
        (fz(ONE, ZERO), fz(ONE, ZERO), fz(ONE, ZERO)),
        (fz(ONE, ZERO), fz(ONE, Q), fz(ONE, Q)),
        (fz(ONE, ZERO), fz(ZERO, Q), fz(ZERO, Q)),
    ]
    assert len(rules) == 12
    for i_set, j_set, k_set in expected:
        assert (i_set, j_set, k_set) in got


def test_ising_generic_rules_same_shape():
    law = ising_law('1/3', '1/27')
    rules = useful_rules(law)
    assert len(rules) == 12
    a = rat(1, 3)
    got = {(r.i_set, r.j_set, r.k_set) for r in rules} | \
          {(r.j_set, r.i_set, r.k_set) for r in rules}
    assert (fz(a), fz(a), fz(ONE, ZERO)) in got
    assert (fz(ONE), fz(ZERO), fz()) in got
