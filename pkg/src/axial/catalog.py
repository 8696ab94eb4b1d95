"""The nine dihedral (2-generated) algebras for the Monster fusion law.

Each algebra is built from a handful of seed products on the basis
a_{-k} .. a_0 a_1 .. plus extra vectors, completed by the index dihedral
group (rotation eps -> eps+2, negation eps -> -eps, marked-pair swap
eps -> 1-eps; the extra basis vectors are fixed by all three). The
completion asserts overlap consistency and totality, then solves for the
unique Frobenius form with unit axis norms and checks it against frozen
values. self_check verifies idempotency, primitivity, diagonalisability,
the fusion law, and Miyamoto sign behavior from scratch.
"""

from .fusion import monster_law
from .linalg import (
    Mat, Subspace, kernel_of_images, rat, solve, vec_to_dict, vec_to_list,
)
from .perms import Perm

_Q0 = rat(0)
_Q1 = rat(1)

TYPE_NAMES = ('1A', '2A', '2B', '3A', '3C', '4A', '4B', '5A', '6A')


class DihedralAlgebraSpec:
    """A finished dihedral algebra: dense multiplication table, axis
    bookkeeping, Frobenius form."""

    __slots__ = ('name', 'dim', 'labels', 'mu', 'axes', 'cycle_axes',
                 'marked', 'form', 'law', '_decomp')

    def __init__(self, name, dim, labels, mu, axes, cycle_axes, marked,
                 form, law):
        self.name = name
        self.dim = dim
        self.labels = tuple(labels)
        self.mu = mu                      # {(i,j) i<=j: tuple of mpq}
        self.axes = tuple(axes)           # every basis index that is an axis
        self.cycle_axes = tuple(cycle_axes)   # the n dihedral-cycle axes
        self.marked = tuple(marked)       # (index of a_0, index of a_1)
        self.form = form                  # Mat, Gram on the basis
        self.law = law
        self._decomp = {}

    def product(self, i, j):
        return self.mu[(i, j) if i <= j else (j, i)]

    def mult(self, x, y):
        """Multiply two coordinate vectors (lists)."""
        out = [_Q0] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, m in enumerate(self.product(i, j)):
                    if m:
                        out[k] += c * m
        return out

    def ad(self, i):
        """Left-multiplication matrix of basis vector i (row k = b_i b_k)."""
        return Mat([self.product(i, k) for k in range(self.dim)])

    def __repr__(self):
        return 'DihedralAlgebraSpec(%s, dim %d)' % (self.name, self.dim)


def _eps_index(n):
    """Catalog cycle order: a_{eps} for eps = -off .. n-1-off."""
    off = (n - 1) // 2
    return off


def _index_perm(n, extras, f):
    """Basis permutation from an index map eps -> f(eps) mod n, extras
    fixed."""
    off = _eps_index(n)
    img = []
    for i in range(n):
        e = i - off
        e2 = f(e) % n
        img.append((e2 + off) % n)
    img.extend(range(n, n + extras))
    return Perm(img)


def _complete(name, n, extras, seeds, law):
    """Orbit-complete seed products under the index dihedral group."""
    dim = n + extras
    gens = [_index_perm(n, extras, lambda e: e + 2),
            _index_perm(n, extras, lambda e: -e),
            _index_perm(n, extras, lambda e: 1 - e)]
    mu = {}
    queue = []
    for (i, j), vec in seeds.items():
        key = (i, j) if i <= j else (j, i)
        mu[key] = tuple(rat(c) for c in vec)
        queue.append(key)
    while queue:
        i, j = queue.pop()
        vec = mu[(i, j)]
        for g in gens:
            i2, j2 = g(i), g(j)
            key = (i2, j2) if i2 <= j2 else (j2, i2)
            # push coordinates through the basis permutation
            v2 = [_Q0] * dim
            for k, c in enumerate(vec):
                if c:
                    v2[g(k)] = c
            v2 = tuple(v2)
            old = mu.get(key)
            if old is None:
                mu[key] = v2
                queue.append(key)
            elif old != v2:
                raise AssertionError(
                    '%s: inconsistent completion at %s' % (name, key))
    for i in range(dim):
        for j in range(i, dim):
            if (i, j) not in mu:
                raise AssertionError(
                    '%s: product %s not reached by completion' % (name,
                                                                  (i, j)))
    return mu


def _solve_form(name, dim, mu, marked, axes):
    """Unique symmetric associating form with unit marked-axis norms."""
    unknowns = [(i, j) for i in range(dim) for j in range(i, dim)]
    uidx = {u: t for t, u in enumerate(unknowns)}

    def g_at(i, j):
        return uidx[(i, j) if i <= j else (j, i)]

    rows = []
    rhs = []
    # (b_i, b_j b_k) = (b_i b_j, b_k) for all triples
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                row = [_Q0] * len(unknowns)
                pjk = mu[(j, k) if j <= k else (k, j)]
                for m, c in enumerate(pjk):
                    if c:
                        row[g_at(i, m)] += c
                pij = mu[(i, j) if i <= j else (j, i)]
                for m, c in enumerate(pij):
                    if c:
                        row[g_at(m, k)] -= c
                if any(row):
                    rows.append(row)
                    rhs.append(_Q0)
    for a in marked:
        row = [_Q0] * len(unknowns)
        row[g_at(a, a)] = _Q1
        rows.append(row)
        rhs.append(_Q1)
    a_mat = Mat(rows)
    cols = [{r: a_mat.a[r][c] for r in range(a_mat.m) if a_mat.a[r][c]}
            for c in range(len(unknowns))]
    if kernel_of_images(cols):
        raise AssertionError('%s: Frobenius form not unique' % name)
    x = solve(a_mat, rhs)
    if x is None:
        raise AssertionError('%s: no Frobenius form' % name)
    g = Mat.zero(dim, dim)
    for (i, j), t in uidx.items():
        g.a[i][j] = x[t]
        g.a[j][i] = x[t]
    for a in axes:
        if g.a[a][a] != 1:
            raise AssertionError('%s: axis norm not 1' % name)
    return g


def _build(name, n, extras, labels, seeds, axes, cycle_axes, marked):
    law = monster_law()
    dim = n + extras
    mu = _complete(name, n, extras, seeds, law)
    form = _solve_form(name, dim, mu, marked, axes)
    return DihedralAlgebraSpec(name, dim, labels, mu, axes, cycle_axes,
                               marked, form, law)


def _vec(dim, entries):
    v = [_Q0] * dim
    for i, c in entries.items():
        v[i] = rat(c)
    return v


def _build_1a():
    law = monster_law()
    mu = {(0, 0): (rat(1),)}
    form = Mat([[rat(1)]])
    return DihedralAlgebraSpec('1A', 1, ('a0',), mu, (0,), (0,), (0, 0),
                               form, law)


def _build_2a():
    # basis a0 a1 ar
    d = 3
    seeds = {
        (0, 0): _vec(d, {0: 1}),
        (2, 2): _vec(d, {2: 1}),
        (0, 1): _vec(d, {0: rat(1, 8), 1: rat(1, 8), 2: rat(-1, 8)}),
        (0, 2): _vec(d, {0: rat(1, 8), 2: rat(1, 8), 1: rat(-1, 8)}),
    }
    return _build('2A', 2, 1, ('a0', 'a1', 'ar'), seeds, (0, 1, 2),
                  (0, 1), (0, 1))


def _build_2b():
    d = 2
    seeds = {
        (0, 0): _vec(d, {0: 1}),
        (0, 1): _vec(d, {}),
    }
    return _build('2B', 2, 0, ('a0', 'a1'), seeds, (0, 1), (0, 1), (0, 1))


def _build_3a():
    # basis a-1 a0 a1 u
    d = 4
    seeds = {
        (1, 1): _vec(d, {1: 1}),
        (3, 3): _vec(d, {3: 1}),
        (1, 2): _vec(d, {1: rat(2, 32), 2: rat(2, 32), 0: rat(1, 32),
                         3: rat(-135, 2048)}),
        (1, 3): _vec(d, {1: rat(2, 9), 2: rat(-1, 9), 0: rat(-1, 9),
                         3: rat(5, 32)}),
    }
    return _build('3A', 3, 1, ('a-1', 'a0', 'a1', 'u'), seeds,
                  (0, 1, 2), (0, 1, 2), (1, 2))


def _build_3c():
    d = 3
    seeds = {
        (1, 1): _vec(d, {1: 1}),
        (1, 2): _vec(d, {1: rat(1, 64), 2: rat(1, 64), 0: rat(-1, 64)}),
    }
    return _build('3C', 3, 0, ('a-1', 'a0', 'a1'), seeds, (0, 1, 2),
                  (0, 1, 2), (1, 2))


def _build_4a():
    # basis a-1 a0 a1 a2 v
    d = 5
    seeds = {
        (1, 1): _vec(d, {1: 1}),
        (4, 4): _vec(d, {4: 1}),
        (1, 2): _vec(d, {1: rat(3, 64), 2: rat(3, 64), 0: rat(1, 64),
                         3: rat(1, 64), 4: rat(-3, 64)}),
        (1, 3): _vec(d, {}),
        (1, 4): _vec(d, {1: rat(5, 16), 2: rat(-2, 16), 3: rat(-1, 16),
                         0: rat(-2, 16), 4: rat(3, 16)}),
    }
    return _build('4A', 4, 1, ('a-1', 'a0', 'a1', 'a2', 'v'), seeds,
                  (0, 1, 2, 3), (0, 1, 2, 3), (1, 2))


def _build_4b():
    # basis a-1 a0 a1 a2 ar2
    d = 5
    seeds = {
        (1, 1): _vec(d, {1: 1}),
        (4, 4): _vec(d, {4: 1}),
        (1, 2): _vec(d, {1: rat(1, 64), 2: rat(1, 64), 0: rat(-1, 64),
                         3: rat(-1, 64), 4: rat(1, 64)}),
        (1, 3): _vec(d, {1: rat(1, 8), 3: rat(1, 8), 4: rat(-1, 8)}),
        (1, 4): _vec(d, {1: rat(1, 8), 4: rat(1, 8), 3: rat(-1, 8)}),
    }
    return _build('4B', 4, 1, ('a-1', 'a0', 'a1', 'a2', 'ar2'), seeds,
                  (0, 1, 2, 3, 4), (0, 1, 2, 3), (1, 2))


def _build_5a():
    # basis a-2 a-1 a0 a1 a2 w
    d = 6
    seeds = {
        (2, 2): _vec(d, {2: 1}),
        (5, 5): _vec(d, {0: rat(175, 524288), 1: rat(175, 524288),
                         2: rat(175, 524288), 3: rat(175, 524288),
                         4: rat(175, 524288)}),
        (2, 3): _vec(d, {2: rat(3, 128), 3: rat(3, 128), 4: rat(-1, 128),
                         1: rat(-1, 128), 0: rat(-1, 128), 5: 1}),
        (2, 4): _vec(d, {2: rat(3, 128), 4: rat(3, 128), 3: rat(-1, 128),
                         1: rat(-1, 128), 0: rat(-1, 128), 5: -1}),
        (2, 5): _vec(d, {3: rat(7, 4096), 1: rat(7, 4096),
                         4: rat(-7, 4096), 0: rat(-7, 4096),
                         5: rat(7, 32)}),
    }
    return _build('5A', 5, 1, ('a-2', 'a-1', 'a0', 'a1', 'a2', 'w'),
                  seeds, (0, 1, 2, 3, 4), (0, 1, 2, 3, 4), (2, 3))


def _build_6a():
    # basis a-2 a-1 a0 a1 a2 a3 ar3 u
    d = 8
    seeds = {
        (2, 2): _vec(d, {2: 1}),
        (6, 6): _vec(d, {6: 1}),
        (7, 7): _vec(d, {7: 1}),
        (2, 3): _vec(d, {2: rat(1, 64), 3: rat(1, 64), 0: rat(-1, 64),
                         1: rat(-1, 64), 4: rat(-1, 64), 5: rat(-1, 64),
                         6: rat(1, 64), 7: rat(45, 2048)}),
        (2, 4): _vec(d, {2: rat(2, 32), 4: rat(2, 32), 0: rat(1, 32),
                         7: rat(-135, 2048)}),
        (2, 5): _vec(d, {2: rat(1, 8), 5: rat(1, 8), 6: rat(-1, 8)}),
        (2, 7): _vec(d, {2: rat(2, 9), 4: rat(-1, 9), 0: rat(-1, 9),
                         7: rat(5, 32)}),
        (2, 6): _vec(d, {2: rat(1, 8), 6: rat(1, 8), 5: rat(-1, 8)}),
        (6, 7): _vec(d, {}),
    }
    return _build('6A', 6, 2,
                  ('a-2', 'a-1', 'a0', 'a1', 'a2', 'a3', 'ar3', 'u'),
                  seeds, (0, 1, 2, 3, 4, 5, 6), (0, 1, 2, 3, 4, 5),
                  (2, 3))


_BUILDERS = {
    '1A': _build_1a, '2A': _build_2a, '2B': _build_2b, '3A': _build_3a,
    '3C': _build_3c, '4A': _build_4a, '4B': _build_4b, '5A': _build_5a,
    '6A': _build_6a,
}

_CACHE = {}


def ns_algebra(name):
    name = name.upper()
    if name not in _BUILDERS:
        raise KeyError('unknown dihedral type %r' % name)
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]


# subalgebra type generated inside a larger type by a pair whose own
# X-set has the given size
CONTAINED_TYPE = {
    ('4A', 2): '2B',
    ('4B', 2): '2A',
    ('6A', 2): '2A',
    ('6A', 3): '3A',
}


def contained_type(name, m):
    spec_n = int(name[0])
    if m == spec_n:
        return name
    return CONTAINED_TYPE[(name, m)]


def axis_decomposition(spec, axis):
    """{eigenvalue: Subspace} of ad_axis. Cached per spec."""
    if axis in spec._decomp:
        return spec._decomp[axis]
    ad = spec.ad(axis)
    out = {}
    total = 0
    for lam in spec.law.values:
        rows = []
        for i in range(spec.dim):
            r = dict(vec_to_dict(ad.a[i]))
            r[i] = r.get(i, _Q0) - lam
            rows.append({k: v for k, v in r.items() if v})
        kers = kernel_of_images(rows)
        vecs = [vec_to_list(k, spec.dim) for k in kers]
        sub = Subspace.span(vecs, spec.dim)
        if sub.dim:
            out[lam] = sub
            total += sub.dim
    if total != spec.dim:
        raise AssertionError('%s: ad_%d not diagonalisable over the law'
                             % (spec.name, axis))
    spec._decomp[axis] = out
    return out


def miyamoto_perm(spec, axis):
    """The Miyamoto involution of an axis as a basis permutation."""
    dec = axis_decomposition(spec, axis)
    n = spec.dim
    # sigma = +1 on even eigenspaces, -1 on the odd one; express each
    # basis vector in the eigenbasis, flip, and map back
    basis_rows = []
    signs = []
    for lam in spec.law.values:
        sub = dec.get(lam)
        if sub is None:
            continue
        sign = rat(-1) if lam in spec.law.minus else rat(1)
        for row in sub.basis.a:
            basis_rows.append(row)
            signs.append(sign)
    bmat = Mat(basis_rows)
    bt = bmat.transpose()
    img_rows = []
    for i in range(n):
        e = [_Q0] * n
        e[i] = _Q1
        coords = solve(bt, e)
        assert coords is not None
        img = [_Q0] * n
        for t, c in enumerate(coords):
            if c:
                s = c * signs[t]
                for k, v in enumerate(basis_rows[t]):
                    if v:
                        img[k] += s * v
        img_rows.append(img)
    perm = []
    for i, img in enumerate(img_rows):
        hits = [k for k, v in enumerate(img) if v]
        if len(hits) != 1 or img[hits[0]] != 1:
            raise AssertionError('%s: Miyamoto map of axis %d is not a '
                                 'basis permutation' % (spec.name, axis))
        perm.append(hits[0])
    return Perm(perm)


def self_check(spec):
    """Full verification of a catalog algebra from scratch."""
    law = spec.law
    dim = spec.dim
    # commutativity is structural (table on i <= j); axes idempotent
    for a in spec.axes:
        e = [_Q0] * dim
        e[a] = _Q1
        if spec.mult(e, e) != e:
            raise AssertionError('%s: axis %d not idempotent'
                                 % (spec.name, a))
    for a in spec.axes:
        dec = axis_decomposition(spec, a)
        # primitive: the 1-eigenspace is the axis line
        one = dec[rat(1)]
        e = [_Q0] * dim
        e[a] = _Q1
        if one.dim != 1 or not one.contains(e):
            raise AssertionError('%s: axis %d not primitive'
                                 % (spec.name, a))
        # fusion law
        for lam, sub_l in dec.items():
            for mv, sub_m in dec.items():
                allowed = law.star(lam, mv)
                target_rows = []
                for nu in allowed:
                    if nu in dec:
                        target_rows.extend(dec[nu].basis.a)
                target = Subspace.span(target_rows, dim)
                for x in sub_l.basis.a:
                    for y in sub_m.basis.a:
                        p = spec.mult(x, y)
                        if any(p) and not target.contains(p):
                            raise AssertionError(
                                '%s: fusion violated at axis %d: '
                                '%s * %s' % (spec.name, a, lam, mv))
        # Miyamoto permutes the basis and preserves products
        tau = miyamoto_perm(spec, a)
        for i in range(dim):
            for j in range(i, dim):
                lhs = spec.product(i, j)
                moved = [_Q0] * dim
                for k, c in enumerate(lhs):
                    if c:
                        moved[tau(k)] = c
                rhs = spec.product(tau(i), tau(j))
                if list(moved) != list(rhs):
                    raise AssertionError(
                        '%s: Miyamoto of axis %d is not an automorphism'
                        % (spec.name, a))
    # form associates and is tau-invariant
    g = spec.form
    for i in range(dim):
        adi = spec.ad(i)
        left = adi.mul(g)
        right = g.mul(adi.transpose())
        if left != right:
            raise AssertionError('%s: form does not associate'
                                 % spec.name)
    return True
