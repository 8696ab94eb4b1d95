"""Group-and-tau constructions shared by the test modules.

Each builder returns (PermGroup, {point: Perm tau}) on a fixed point
numbering, documented per builder.
"""

from itertools import combinations, permutations

from axial.perms import Perm, PermGroup


def _perm_on_points(points, f):
    idx = {p: i for i, p in enumerate(points)}
    return Perm([idx[f(p)] for p in points])


# ------------------------------------------------------------ S4 family

S4_PAIRS = list(combinations(range(4), 2))            # 6 points, lex
S4_PARTS = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]


def _s4_pair_image(g, pair):
    a, b = sorted((g[pair[0]], g[pair[1]]))
    return (a, b)


def _s4_part_image(g, part):
    halves = []
    for h in part:
        halves.append(tuple(sorted((g[h[0]], g[h[1]]))))
    return tuple(sorted(halves))


def _s4_elements():
    return list(permutations(range(4)))


def s4_on6():
    """S4 on the 6 transposition points. tau = the transposition itself."""
    points = S4_PAIRS

    def act(g):
        return _perm_on_points(points, lambda p: _s4_pair_image(g, p))

    gens = [act((1, 0, 2, 3)), act((1, 2, 3, 0))]
    grp = PermGroup(6, gens)
    tau = {}
    for i, (a, b) in enumerate(points):
        g = list(range(4))
        g[a], g[b] = g[b], g[a]
        tau[i] = act(tuple(g))
    return grp, tau


def s4_on63():
    """S4 on 6 transpositions + 3 partitions (points 6,7,8).
    tau on a partition point is the matching double transposition."""
    points = list(S4_PAIRS) + S4_PARTS

    def act(g):
        def f(p):
            if isinstance(p[0], int):
                return _s4_pair_image(g, p)
            return _s4_part_image(g, p)
        return _perm_on_points(points, f)

    gens = [act((1, 0, 2, 3)), act((1, 2, 3, 0))]
    grp = PermGroup(9, gens)
    tau = {}
    for i, p in enumerate(points):
        if isinstance(p[0], int):
            a, b = p
            g = list(range(4))
            g[a], g[b] = g[b], g[a]
            tau[i] = act(tuple(g))
        else:
            (a, b), (c, d) = p
            g = list(range(4))
            g[a], g[b] = g[b], g[a]
            g[c], g[d] = g[d], g[c]
            tau[i] = act(tuple(g))
    return grp, tau


# ------------------------------------------------------------ S3 x S3

def _s3_tau_perm(i, offset, n):
    # transposition of {0,1,2}\{i} acting naturally, shifted by offset
    a, b = [x for x in range(3) if x != i]
    return Perm.from_cycles(n, [(offset + a, offset + b)])


def s3xs3_on33():
    """S3 x S3 on 3+3 points. tau_i = the transposition avoiding i,
    inside i's own factor."""
    n = 6
    gens = [Perm.from_cycles(n, [(0, 1)]), Perm.from_cycles(n, [(0, 1, 2)]),
            Perm.from_cycles(n, [(3, 4)]), Perm.from_cycles(n, [(3, 4, 5)])]
    grp = PermGroup(n, gens)
    tau = {}
    for i in range(3):
        tau[i] = _s3_tau_perm(i, 0, n)
    for j in range(3):
        tau[3 + j] = _s3_tau_perm(j, 3, n)
    return grp, tau


def s3xs3_on339():
    """S3 x S3 on 3+3+9; product point (i,j) is 6+3i+j.
    tau_(i,j) = t_i t'_j, tau on the 3-orbits as in s3xs3_on33."""
    n = 15

    def lift(s, t):
        img = list(range(n))
        for i in range(3):
            img[i] = s[i]
        for j in range(3):
            img[3 + j] = 3 + t[j]
        for i in range(3):
            for j in range(3):
                img[6 + 3 * i + j] = 6 + 3 * s[i] + t[j]
        return Perm(img)

    e3 = (0, 1, 2)
    gens = [lift((1, 0, 2), e3), lift((1, 2, 0), e3),
            lift(e3, (1, 0, 2)), lift(e3, (1, 2, 0))]
    grp = PermGroup(n, gens)

    def t3(i):
        a, b = [x for x in range(3) if x != i]
        img = list(e3)
        img[a], img[b] = img[b], img[a]
        return tuple(img)

    tau = {}
    for i in range(3):
        tau[i] = lift(t3(i), e3)
    for j in range(3):
        tau[3 + j] = lift(e3, t3(j))
    for i in range(3):
        for j in range(3):
            tau[6 + 3 * i + j] = lift(t3(i), t3(j))
    return grp, tau


# ------------------------------------------------------------ A5, S5

def a5_on15():
    """A5 by conjugation on its 15 involutions. tau = the involution."""
    invols = []
    for a, b in combinations(range(5), 2):
        rest = [x for x in range(5) if x not in (a, b)]
        for c, d in combinations(rest, 2):
            if (a, b) < (c, d):
                invols.append(((a, b), (c, d)))
    invols = sorted(set(invols))
    assert len(invols) == 15

    def as_perm5(iv):
        (a, b), (c, d) = iv
        return Perm.from_cycles(5, [(a, b), (c, d)])

    def canon(p5):
        cyc = sorted(tuple(sorted(c)) for c in p5.cycles())
        return (tuple(cyc[0]), tuple(cyc[1]))

    def act(g5):
        return _perm_on_points(
            invols, lambda iv: canon(g5.inv() * as_perm5(iv) * g5))

    g1 = Perm.from_cycles(5, [(0, 1, 2)])
    g2 = Perm.from_cycles(5, [(0, 1, 2, 3, 4)])
    grp = PermGroup(15, [act(g1), act(g2)])
    tau = {i: act(as_perm5(iv)) for i, iv in enumerate(invols)}
    return grp, tau


def s5_on10():
    """S5 on the 10 transposition points. tau = the transposition."""
    pairs = list(combinations(range(5), 2))

    def act(g):
        def f(p):
            a, b = sorted((g(p[0]), g(p[1])))
            return (a, b)
        return _perm_on_points(pairs, f)

    g1 = Perm.from_cycles(5, [(0, 1)])
    g2 = Perm.from_cycles(5, [(0, 1, 2, 3, 4)])
    grp = PermGroup(10, [act(g1), act(g2)])
    tau = {i: act(Perm.from_cycles(5, [p])) for i, p in enumerate(pairs)}
    return grp, tau


# ------------------------------------------------------------ L3(2)

def _gl32_mul(a, b):
    return tuple(tuple(
        (a[i][0] & b[0][j]) ^ (a[i][1] & b[1][j]) ^ (a[i][2] & b[2][j])
        for j in range(3)) for i in range(3))


def _gl32_elements():
    i3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    g1 = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    g2 = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
    els = {i3}
    queue = [i3]
    while queue:
        m = queue.pop()
        for g in (g1, g2):
            w = _gl32_mul(m, g)
            if w not in els:
                els.add(w)
                queue.append(w)
    return els, g1, g2, i3


def l32_on21():
    """L3(2) = GL(3,2) by conjugation on its 21 involutions.
    tau = the involution."""
    els, g1, g2, i3 = _gl32_elements()
    assert len(els) == 168
    invols = sorted(m for m in els if m != i3 and _gl32_mul(m, m) == i3)
    assert len(invols) == 21
    inv_of = {}
    for m in els:
        for w in els:
            if _gl32_mul(m, w) == i3:
                inv_of[m] = w
                break

    def act(g):
        gi = inv_of[g]
        return _perm_on_points(
            invols, lambda m: _gl32_mul(_gl32_mul(gi, m), g))

    grp = PermGroup(21, [act(g1), act(g2)])
    tau = {i: act(m) for i, m in enumerate(invols)}
    return grp, tau


# ------------------------------------------------------------ small cases

def v4_on221():
    """V4 on 2+2+1 points. tau_0 = tau_1 = (23), tau_2 = tau_3 = (01),
    tau_4 = identity (isolated axis)."""
    n = 5
    alpha = Perm.from_cycles(n, [(0, 1)])
    beta = Perm.from_cycles(n, [(2, 3)])
    grp = PermGroup(n, [alpha, beta])
    ident = Perm.identity(n)
    tau = {0: beta, 1: beta, 2: alpha, 3: alpha, 4: ident}
    return grp, tau


def group16_on8():
    """Elementary abelian 2^4 on four 2-point blocks."""
    n = 8
    gens = [Perm.from_cycles(n, [(2 * i, 2 * i + 1)]) for i in range(4)]
    return PermGroup(n, gens)


def d7_on7():
    """Dihedral group of order 14 on 7 points, tau_x the reflection
    fixing x. Every pair generates the whole group, so no pair matches
    a catalog algebra (orbit size 7)."""
    n = 7
    rot = Perm([(i + 1) % n for i in range(n)])

    def refl(x):
        return Perm([(2 * x - i) % n for i in range(n)])

    grp = PermGroup(n, [rot, refl(0)])
    tau = {x: refl(x) for x in range(n)}
    return grp, tau


def s4_natural():
    """S4 on 4 points. Point stabilizers are S3, whose involutions are
    not central, so only the identity tau-map is admissible."""
    gens = [Perm.from_cycles(4, [(0, 1)]), Perm.from_cycles(4, [(0, 1, 2, 3)])]
    return PermGroup(4, gens)


# ------------------------------------------------------------ L2(11)

def l2_11_on55():
    """L2(11) = PSL(2,11) by conjugation on its 55 involutions.
    tau = the involution. Built from the degree-12 action on the
    projective line {0..10, 11 = infinity}."""
    p = 11
    inf = p

    def frac_perm(f):
        return Perm([f(x) for x in range(p + 1)])

    def shift(x):
        return inf if x == inf else (x + 1) % p

    def neg_inv(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return (-pow(x, p - 2, p)) % p

    g1 = frac_perm(shift)
    g2 = frac_perm(neg_inv)
    base = PermGroup(p + 1, [g1, g2])
    els = base.elements()
    assert len(els) == 660
    invols = sorted((m for m in els
                     if not m.is_identity() and (m * m).is_identity()),
                    key=lambda m: m.img)
    assert len(invols) == 55

    def act(g):
        gi = g.inv()
        return _perm_on_points(invols, lambda m: gi * m * g)

    grp = PermGroup(55, [act(g1), act(g2)])
    tau = {i: act(m) for i, m in enumerate(invols)}
    return grp, tau


# ------------------------------------------------------------ NS dihedrals

def ns_group(n_axes):
    """Miyamoto image of a Norton-Sakuma type on its cycle axes.

    Points 0..n-1 stand for a_eps with eps = i - ((n_axes - 1) // 2),
    matching the catalog's cycle order (a_{-1} a_0 a_1 a_2 for n = 4 and
    so on). tau_point(j) maps i by eps -> 2*eps_j - eps mod n.
    Returns (PermGroup, tau)."""
    n = n_axes
    off = (n - 1) // 2

    def tau_perm(j):
        ej = j - off
        img = []
        for i in range(n):
            e = i - off
            e2 = (2 * ej - e) % n
            # back to point index: find i2 with (i2 - off) % n == e2
            i2 = (e2 + off) % n
            img.append(i2)
        return Perm(img)

    tau = {j: tau_perm(j) for j in range(n)}
    if n == 2:
        # 2A/2B: taus are trivial on the two axes, use the swap
        grp = PermGroup(2, [Perm((1, 0))])
        ident = Perm.identity(2)
        tau = {0: ident, 1: ident}
        return grp, tau
    grp = PermGroup(n, [tau[off], tau[off + 1]])
    return grp, tau
