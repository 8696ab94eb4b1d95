import random

from axial.perms import Perm, PermGroup, dihedral_data

from helpers import (
    a5_on15, group16_on8, l32_on21, ns_group, s3xs3_on33, s3xs3_on339,
    s4_on6, s4_on63, s5_on10, v4_on221,
)


def test_perm_basics():
    p = Perm.from_cycles(4, [(0, 1, 2, 3)])
    q = Perm.from_cycles(4, [(0, 1)])
    assert (p * q)(0) == (q)(p(0))
    assert (p * p.inv()).is_identity()
    assert p.order() == 4 and q.order() == 2
    assert q.conj(p) == Perm.from_cycles(4, [(1, 2)])
    assert p.on_pair((0, 2)) == (1, 3)


def test_known_group_orders():
    grp, _ = s4_on6()
    assert grp.order() == 24
    grp, _ = s4_on63()
    assert grp.order() == 24
    grp, _ = s3xs3_on33()
    assert grp.order() == 36
    grp, _ = s3xs3_on339()
    assert grp.order() == 36
    grp, _ = a5_on15()
    assert grp.order() == 60
    grp, _ = s5_on10()
    assert grp.order() == 120
    grp, _ = l32_on21()
    assert grp.order() == 168
    grp, _ = v4_on221()
    assert grp.order() == 4
    assert group16_on8().order() == 16


def test_element_words_compose():
    grp, _ = s4_on6()
    for p in grp.elements():
        assert grp.word_to_perm(grp.element_word(p)) == p


def test_orbit_words_and_partition():
    grp, _ = s4_on63()
    assert grp.orbits() == [(0, 1, 2, 3, 4, 5), (6, 7, 8)]
    for rep in grp.orbit_reps():
        orb, words = grp.orbit_with_words(rep)
        for pt in orb:
            w = words[pt]
            x = rep
            for gi in w:
                x = grp.gens_ext[gi](x)
            assert x == pt
    grp, _ = v4_on221()
    assert grp.orbits() == [(0, 1), (2, 3), (4,)]


def test_orbit_stabilizer_product():
    for grp, _ in [s4_on6(), s3xs3_on33(), a5_on15(), l32_on21()]:
        for x in grp.orbit_reps():
            stab = grp.stabilizer(x)
            assert len(grp.orbit(x)) * stab.order() == grp.order()


def test_orbits_on_2subsets_s4_on6():
    grp, _ = s4_on6()
    orbs = grp.orbits_on_2subsets()
    sizes = sorted(len(o) for _, o in orbs)
    # 12 intersecting transposition pairs, 3 disjoint ones
    assert sizes == [3, 12]
    tot = set()
    for _, o in orbs:
        tot |= o
    assert len(tot) == 15


def test_central_involutions_s4_on6():
    grp, tau = s4_on6()
    cands = grp.central_involutions_of_stabilizer(0)
    # stabilizer of the (0,1) transposition point is V4, all central
    assert len(cands) == 4
    assert any(c.is_identity() for c in cands)
    assert tau[0] in cands
    for c in cands:
        assert (c * c).is_identity() and c(0) == 0


def test_normalizer_frozen_cases():
    g = PermGroup(4, [Perm.from_cycles(4, [(0, 1), (2, 3)])])
    n = g.normalizer_in_sym()
    assert n.order() == 8
    g3 = PermGroup(3, [Perm.from_cycles(3, [(0, 1, 2)])])
    assert g3.normalizer_in_sym().order() == 6
    g2 = PermGroup(2, [])
    assert g2.normalizer_in_sym().order() == 2
    # refuses big degrees
    g13 = PermGroup(13, [Perm.from_cycles(13, [(0, 1)])])
    assert g13.normalizer_in_sym() is None


def test_normalizer_contains_group_and_normalizes():
    grp, _ = s3xs3_on33()
    n = grp.normalizer_in_sym()
    assert n is not None
    for g in grp.gens:
        assert n.contains(g)
    # the factor swap (03)(14)(25) normalizes S3 x S3
    swap = Perm.from_cycles(6, [(0, 3), (1, 4), (2, 5)])
    assert n.contains(swap)
    for s in n.gens:
        for g in grp.gens:
            assert grp.contains(g.conj(s))


def test_dihedral_data_s4_on6():
    grp, tau = s4_on6()
    # points 0=(0,1), 1=(0,2): intersecting transpositions, type 3
    d = dihedral_data(tau[0], tau[1], 0, 1)
    assert d.n_type == 3 and d.same_orbit and len(d.xset) == 3
    assert d.rho_order == 3
    # disjoint transpositions (0,1) and (2,3): commuting, type 2
    j = 5  # point (2,3)
    d2 = dihedral_data(tau[0], tau[j], 0, j)
    assert d2.n_type == 2 and not d2.same_orbit
    assert d2.orbit_a == (0,) and d2.orbit_b == (j,)
    assert d2.rho_order <= 2


def test_dihedral_data_ns_groups():
    # each NS dihedral image: the marked pair generates the full axis set
    for n, same in [(2, False), (3, True), (4, False), (5, True),
                    (6, False)]:
        grp, tau = ns_group(n)
        off = (n - 1) // 2
        d = dihedral_data(tau[off], tau[off + 1], off, off + 1)
        assert d.n_type == n
        assert d.same_orbit == same
        assert len(d.xset) == n


def test_dihedral_orbit_size_invariants():
    # |a^D| == |b^D|; same orbit -> odd size; different -> n = 2|a^D|
    rng = random.Random(9)
    for grp, tau in [s4_on6(), s4_on63(), s3xs3_on33(), a5_on15(),
                     v4_on221()]:
        pairs = [rep for rep, _ in grp.orbits_on_2subsets()]
        for a, b in pairs:
            d = dihedral_data(tau[a], tau[b], a, b)
            assert len(d.orbit_a) == len(d.orbit_b)
            if d.same_orbit:
                assert len(d.orbit_a) % 2 == 1
            else:
                assert d.n_type == 2 * len(d.orbit_a)


def test_tau_equivariance_of_helper_maps():
    for grp, tau in [s4_on6(), s4_on63(), s3xs3_on33(), s3xs3_on339(),
                     a5_on15(), s5_on10(), l32_on21(), v4_on221()]:
        for g in grp.gens:
            for x in range(grp.degree):
                assert tau[g(x)] == tau[x].conj(g)
        for x in range(grp.degree):
            assert (tau[x] * tau[x]).is_identity()
            assert tau[x](x) == x


def test_random_groups_orbit_oracle():
    rng = random.Random(77)
    for _ in range(15):
        n = rng.randint(4, 7)
        gens = []
        for _ in range(2):
            img = list(range(n))
            rng.shuffle(img)
            gens.append(Perm(img))
        grp = PermGroup(n, gens)
        # brute-force orbit closure oracle
        def orbit_oracle(x):
            orb = {x}
            changed = True
            while changed:
                changed = False
                for g in gens:
                    for y in list(orb):
                        if g(y) not in orb:
                            orb.add(g(y))
                            changed = True
            return tuple(sorted(orb))
        for x in range(n):
            assert tuple(sorted(grp.orbit(x))) == orbit_oracle(x)
        assert grp.order() % 1 == 0
        for x in grp.orbit_reps():
            assert len(grp.orbit(x)) * grp.stabilizer(x).order() \
                == grp.order()
