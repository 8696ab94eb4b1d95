"""Universal axial algebra construction by expand / saturate / reduce.

Builds the universal algebra for a group acting on a set of axes with a
chosen shape. The state is a partial algebra: a module W with a group
action, a submodule V on which the product is known, and bookkeeping for
the forced dihedral subalgebra on each pair orbit (a gluing). Each round

  * expansion adjoins formal products V (x) C and S^2(C) for a complement
    C of V in W, extends the action and the gluings, and records the
    gluing kernels as relations;
  * saturation splits W into tau-eigenparts per axis orbit and grows the
    per-axis eigenspace table to a fixpoint using sums, intersections,
    multiplication by the axis, and the fusion rules, pushing vectors
    with empty eigenvalue support into the relations;
  * reduction closes the relations into a G-invariant, product-stable,
    gluing-stable submodule and quotients everything by it.

The run completes when V = W after a reduction; the result is the
structure-constant table in a canonical basis (axes first, then the
oldest surviving coordinates in creation order).

Vectors are sparse {coordinate: Rat} dicts. Group actions are stored as
one row matrix per extended generator; other elements act through their
generator words. New formal coordinates are indexed before the old ones,
so leftmost-pivot echelons eliminate the newest coordinates first: the
known-product submodule V stays an exact coordinate suffix block, which
makes intersections with V a pivot filter instead of a computation.
"""

from time import monotonic

from .algebra import Algebra
from .catalog import TYPE_NAMES, axis_decomposition, miyamoto_perm, ns_algebra
from .fusion import monster_law, pure_subsets, useful_rules
from .linalg import Ech, Mat, Subspace, kernel_of_images, rat, vec_to_dict, \
    vec_to_list
from .shape import TauMap

_Q0 = rat(0)
_Q1 = rat(1)


class EngineError(Exception):
    """Inconsistent input: inadmissible tau/shape data or a violated
    structural invariant."""


class EngineOptions:
    """Knobs for run(); the defaults are the documented caps."""

    __slots__ = ('max_expansions', 'max_dim', 'time_limit', 'fix_trick',
                 'partial_expand', 'maschke_bound', 'reduce_num',
                 'reduce_den')

    def __init__(self, max_expansions=8, max_dim=20000, time_limit=None,
                 fix_trick=True, partial_expand=False, maschke_bound=100000,
                 reduce_fraction=(1, 8)):
        self.max_expansions = max_expansions
        self.max_dim = max_dim
        self.time_limit = time_limit
        self.fix_trick = fix_trick
        self.partial_expand = partial_expand
        self.maschke_bound = maschke_bound
        self.reduce_num, self.reduce_den = reduce_fraction


# ---------------------------------------------------------------------------
# sparse vector / echelon helpers

def _acc(out, k, v):
    if not v:
        return
    w = out.get(k, _Q0) + v
    if w:
        out[k] = w
    else:
        del out[k]


def _vadd_into(out, vec, c):
    """out += c * vec, dropping exact zeros."""
    if not c:
        return
    for k, v in vec.items():
        w = out.get(k, _Q0) + c * v
        if w:
            out[k] = w
        else:
            del out[k]


def _apply_rows(vec, rows):
    """Image of a row vector under a row-matrix (list of dict rows)."""
    out = {}
    for i, c in vec.items():
        _vadd_into(out, rows[i], c)
    return out


def _shift_vec(vec, off):
    return {k + off: v for k, v in vec.items()}


def _shift_ech(e, off):
    """Same echelon with every coordinate shifted up by off."""
    e.rrefize()
    out = Ech.__new__(Ech)
    out.rows = {p + off: {k + off: v for k, v in r.items()}
                for p, r in e.rows.items()}
    out.aux = {}
    out.reduced = True
    return out


def _grow(e, rows):
    """Insert rows; report whether the span grew."""
    grew = False
    for r in rows:
        if r and e.insert(r)[0] is not None:
            grew = True
    return grew


def _block_rows(e, start):
    """Basis rows of span(e) supported on coordinates >= start.

    Exact for a leftmost-pivot echelon: a row with pivot >= start is zero
    before it, and no combination involving a smaller pivot can cancel
    that pivot.
    """
    e.rrefize()
    out = []
    for p in sorted(e.rows):
        if p >= start:
            r = e.rows[p]
            lead = r[p]
            out.append({k: rat(v, lead) for k, v in r.items()})
    return out


def _intersect_rows(e1, e2, shift):
    """Canonical basis rows of span(e1) & span(e2); shift > all coords."""
    z = Ech()
    for r in e1.basis_rows():
        row = dict(r)
        for k, v in r.items():
            row[k + shift] = v
        z.insert(row)
    for r in e2.basis_rows():
        z.insert(dict(r))
    out = []
    for p in sorted(z.rows):
        if p >= shift:
            r = z.rows[p]
            lead = r[p]
            out.append({k - shift: rat(v, lead) for k, v in r.items()})
    return out


def _preimage_rows(pairs, space_rows, tdim):
    """Rows u with image(u) in the span of space_rows.

    pairs: (vector, image) with images in target coordinates < tdim;
    the map is the linear extension of the pairs. The result includes
    the kernel. Complete by the usual two-block echelon argument.
    """
    z = Ech()
    for vec, img in pairs:
        row = dict(img)
        for k, v in vec.items():
            row[tdim + k] = v
        z.insert(row)
    for s in space_rows:
        z.insert(dict(s))
    out = []
    for p in sorted(z.rows):
        if p >= tdim:
            r = z.rows[p]
            lead = r[p]
            out.append({k - tdim: rat(v, lead) for k, v in r.items()})
    return out


class _Decomp:
    """Coefficient splitter against a fixed direct sum V (+) C."""

    __slots__ = ('e', 'mv')

    def __init__(self, vrows, crows):
        self.e = Ech()
        self.mv = len(vrows)
        for t, r in enumerate(vrows):
            p, _ = self.e.insert(dict(r), {t: _Q1})
            if p is None:
                raise EngineError('dependent V basis row')
        for t, r in enumerate(crows):
            p, _ = self.e.insert(dict(r), {self.mv + t: _Q1})
            if p is None:
                raise EngineError('complement meets V')

    def split(self, w):
        """w = sum va[i]*vrows[i] + sum cb[j]*crows[j]."""
        res, combo = self.e.reduce_with_combo(w)
        if res:
            raise EngineError('vector outside V + C')
        va = {}
        cb = {}
        mv = self.mv
        aux = self.e.aux
        for p, coeff in combo.items():
            if not coeff:
                continue
            for t, val in aux[p].items():
                if t < mv:
                    _acc(va, t, coeff * val)
                else:
                    _acc(cb, t - mv, coeff * val)
        return va, cb


# ---------------------------------------------------------------------------
# gluings

class GluingTarget:
    """Concrete algebra a gluing maps onto. Starts as the catalogued
    dihedral algebra of the chosen type; reduction may quotient it."""

    __slots__ = ('name', 'dim', 'mu', 'axes', 'eig', 'taus')

    def __init__(self, name, dim, mu, axes, eig, taus):
        self.name = name
        self.dim = dim
        self.mu = mu        # {(i, j) i<=j: dict vector}
        self.axes = axes    # {point: dict vector}
        self.eig = eig      # {point: {eigenvalue: [dict rows]}}
        self.taus = taus    # {point: row matrix of the axis involution}

    @staticmethod
    def from_spec(spec, assign):
        mu = {k: vec_to_dict(row) for k, row in spec.mu.items()}
        axes = {}
        eig = {}
        taus = {}
        for y, idx in assign.items():
            axes[y] = {idx: _Q1}
            dec = axis_decomposition(spec, idx)
            eig[y] = {lam: [vec_to_dict(r) for r in sub.basis.a]
                      for lam, sub in dec.items()}
            perm = miyamoto_perm(spec, idx)
            taus[y] = [{perm(i): _Q1} for i in range(spec.dim)]
        return GluingTarget(spec.name, spec.dim, mu, axes, eig, taus)

    def mult(self, u, v):
        out = {}
        mu = self.mu
        for i, a in u.items():
            for j, b in v.items():
                _vadd_into(out, mu[(i, j) if i <= j else (j, i)], a * b)
        return out

    def quo(self, colmap, kept):
        """Quotient by an ideal encoded as a column map; kept lists the
        old coordinates whose images are the new unit vectors."""
        def papply(vec):
            out = {}
            for k, v in vec.items():
                _vadd_into(out, colmap[k], v)
            return out

        newdim = len(kept)
        mu2 = {}
        for i in range(newdim):
            li = kept[i]
            for j in range(i, newdim):
                lj = kept[j]
                key = (li, lj) if li <= lj else (lj, li)
                mu2[(i, j)] = papply(self.mu[key])
        axes2 = {y: papply(v) for y, v in self.axes.items()}
        eig2 = {y: {lam: [r for r in (papply(x) for x in rows) if r]
                    for lam, rows in d.items()}
                for y, d in self.eig.items()}
        taus2 = {y: [papply(rows[kept[i]]) for i in range(newdim)]
                 for y, rows in self.taus.items()}
        return GluingTarget(self.name, newdim, mu2, axes2, eig2, taus2)


class Gluing:
    """Pinned dihedral subalgebra on the closure Y of one pair orbit.

    wy spans the part of W generated so far from the axes of Y; phi maps
    each canonical basis row of wy (keyed by its pivot) into the target.
    psi is carried per point of Y as the target-side involution matrix.
    """

    __slots__ = ('y', 'assign', 'target', 'wy', 'phi')

    def __init__(self, y, assign, target, wy, phi):
        self.y = y
        self.assign = assign
        self.target = target
        self.wy = wy
        self.phi = phi

    @property
    def psi(self):
        return self.target.taus

    def phi_of(self, vec):
        """Image of a wy member, read off its pivot coefficients."""
        out = {}
        phi = self.phi
        for p, img in phi.items():
            c = vec.get(p)
            if c:
                _vadd_into(out, img, c)
        return out

    def wy_rows(self):
        return [vec_to_dict(r) for r in self.wy.basis.a]


# ---------------------------------------------------------------------------
# the partial algebra

class PartialAlgebra:
    """Module with a partially defined product and gluing bookkeeping."""

    __slots__ = ('group', 'tau', 'law', 'rules', 'keys', 'supersets',
                 'dim', 'V', 'vstart', 'mu', 'act', 'axes', 'gluings',
                 'eig', 'rel', 'axis_reps', 'rep_of', 'orbit_words',
                 'inv_idx', 'fix_done', 'tags', 'round', 'matcache',
                 'stats')

    def __init__(self, group, tau, law=None):
        self.group = group
        if not isinstance(tau, TauMap):
            tau = TauMap(group, tau)
        self.tau = tau
        law = law if law is not None else monster_law()
        self.law = law
        self.rules = useful_rules(law)
        evens = pure_subsets(law, law.plus)
        odds = pure_subsets(law, law.minus)
        self.keys = evens + odds
        self.supersets = {k: [k2 for k2 in self.keys if k <= k2]
                          for k in self.keys}
        self.dim = group.degree
        self.V = Subspace.zero(self.dim)
        self.vstart = self.dim          # V = coordinates >= vstart (empty)
        self.mu = {}
        self.act = [[{g(i): _Q1} for i in range(self.dim)]
                    for g in group.gens_ext]
        self.axes = {x: {x: _Q1} for x in range(group.degree)}
        self.gluings = []
        self.eig = {}
        self.rel = Ech()
        self.axis_reps = group.orbit_reps()
        self.rep_of = {}
        self.orbit_words = {}
        for rep in self.axis_reps:
            orb, words = group.orbit_with_words(rep)
            self.orbit_words[rep] = words
            for x in orb:
                self.rep_of[x] = rep
        self.inv_idx = tuple(
            next(i for i, h in enumerate(group.gens_ext)
                 if h.img == g.inv().img)
            for g in group.gens_ext)
        self.fix_done = set()
        self.tags = [(0, i) for i in range(self.dim)]
        self.round = 0
        self.matcache = {}
        self.stats = {'expansions': 0, 'max_dim': self.dim,
                      'fix_trick_fired': False,
                      'timings': {'expand': 0.0, 'saturate': 0.0,
                                  'reduce': 0.0}}

    # -- products -----------------------------------------------------------

    def mult(self, u, v):
        """Product of two members of V via the structure-constant table."""
        vs = self.vstart
        if vs is not None:
            pu = [(p, c) for p, c in u.items() if p >= vs]
            pv = [(q, c) for q, c in v.items() if q >= vs]
        else:
            ps = set(self.V.pivots)
            pu = [(p, c) for p, c in u.items() if p in ps]
            pv = [(q, c) for q, c in v.items() if q in ps]
        out = {}
        mu = self.mu
        for p, cu in pu:
            for q, cv in pv:
                _vadd_into(out, mu[(p, q) if p <= q else (q, p)], cu * cv)
        return out

    def in_v(self, vec):
        if self.vstart is not None:
            return all(k >= self.vstart for k in vec)
        return self.V.contains(vec)

    def v_rows(self):
        return [vec_to_dict(r) for r in self.V.basis.a]

    # -- group action -------------------------------------------------------

    def apply_gen(self, t, vec):
        return _apply_rows(vec, self.act[t])

    def apply_word(self, vec, word):
        for t in word:
            vec = _apply_rows(vec, self.act[t])
        return vec

    def inv_word(self, word):
        inv = self.inv_idx
        return tuple(inv[t] for t in reversed(word))

    def perm_rows(self, p):
        """Full action matrix of a group element, cached per round."""
        hit = self.matcache.get(p.img)
        if hit is not None:
            return hit
        word = self.group.element_word(p)
        rows = [{i: _Q1} for i in range(self.dim)]
        for t in word:
            act = self.act[t]
            rows = [_apply_rows(r, act) for r in rows]
        self.matcache[p.img] = rows
        return rows

    # -- eigenspace table ---------------------------------------------------

    def eig_ensure(self, rep):
        if rep not in self.eig:
            self.eig[rep] = {k: Ech() for k in self.keys}

    def add_eig(self, rep, key, rows):
        """Record rows in the eigenspace for key and all supersets."""
        self.eig_ensure(rep)
        table = self.eig[rep]
        grew = False
        for k2 in self.supersets[key]:
            g = _grow(table[k2], (dict(r) for r in rows))
            if k2 is key or k2 == key:
                grew = g
        return grew

    def add_relations(self, rows):
        """Record relation rows; relations sit inside every eigenspace."""
        fresh = []
        for r in rows:
            if r and self.rel.insert(dict(r))[0] is not None:
                fresh.append(r)
        if fresh:
            minimal = [k for k in self.keys if len(k) == 1]
            for rep in self.eig:
                for k in minimal:
                    self.add_eig(rep, k, fresh)
        return bool(fresh)

    def rel_cap_v_rows(self):
        if self.vstart is not None:
            return _block_rows(self.rel, self.vstart)
        return _intersect_rows(self.rel, self.V.to_ech(), self.dim)

    @property
    def relations(self):
        return Subspace.from_ech(self.rel.copy(), self.dim)

    def eigenspaces(self, rep):
        self.eig_ensure(rep)
        return {k: Subspace.from_ech(e.copy(), self.dim)
                for k, e in self.eig[rep].items()}


class Collapsed:
    """Reduction identified distinct axes (or killed one): the run stops
    and the algebra is reported as 0."""

    __slots__ = ('merged', 'zeroed')

    def __init__(self, merged, zeroed):
        self.merged = merged
        self.zeroed = zeroed

    def __repr__(self):
        return 'Collapsed(merged=%r, zeroed=%r)' % (self.merged, self.zeroed)


class RunResult:
    __slots__ = ('status', 'algebra', 'stats')

    def __init__(self, status, algebra, stats):
        self.status = status
        self.algebra = algebra
        self.stats = stats

    def __repr__(self):
        return 'RunResult(%s, dim=%s)' % (
            self.status, self.stats.get('final_dim'))


# ---------------------------------------------------------------------------
# initialisation

def _default_catalog():
    return {name: ns_algebra(name) for name in TYPE_NAMES}


def _glue_assignment(pa, yset, spec, a, b):
    """Extend a -> first marked axis, b -> second equivariantly over the
    dihedral group generated by the axis involutions of the pair."""
    tau = pa.tau
    assign = {a: spec.marked[0], b: spec.marked[1]}
    miy = {}

    def miy_of(z):
        if z not in miy:
            miy[z] = miyamoto_perm(spec, assign[z])
        return miy[z]

    frontier = [a, b]
    while frontier:
        nxt = []
        for z in (a, b):
            mz = miy_of(z)
            tz = tau[z]
            for y in list(assign):
                y2 = tz(y)
                img = mz(assign[y])
                if y2 in assign:
                    if assign[y2] != img:
                        raise EngineError(
                            'gluing of %s onto %s is inconsistent'
                            % ((a, b), spec.name))
                elif y2 in yset:
                    assign[y2] = img
                    nxt.append(y2)
                else:
                    raise EngineError('axis involution leaves the pair '
                                      'closure')
        frontier = nxt
    if len(assign) != len(yset):
        raise EngineError('pair closure size does not match type %s'
                          % spec.name)
    if len(set(assign.values())) != len(assign):
        raise EngineError('gluing onto %s is not injective on axes'
                          % spec.name)
    # full equivariance check over every axis of the closure
    for z in assign:
        mz = miy_of(z)
        tz = tau[z]
        for y in assign:
            if assign[tz(y)] != mz(assign[y]):
                raise EngineError('gluing of %s onto %s breaks '
                                  'equivariance' % ((a, b), spec.name))
    return assign


def _init_eig_from_gluing(pa, gl):
    """Pull each target axis eigenspace back through phi and transport it
    to the axis orbit representative."""
    pairs = [(vec_to_dict(r), gl.phi[p])
             for p, r in zip(gl.wy.pivots, gl.wy.basis.a)]
    tdim = gl.target.dim
    for y in gl.y:
        rep = pa.rep_of[y]
        word = pa.orbit_words[rep][y]
        iword = pa.inv_word(word)
        for lam, srows in gl.target.eig[y].items():
            pre = _preimage_rows(pairs, srows, tdim)
            if not pre:
                continue
            moved = [pa.apply_word(r, iword) for r in pre] if iword \
                else pre
            pa.add_eig(rep, frozenset((lam,)), moved)


def init_partial(group, tau, shape, catalog=None, law=None):
    """Permutation module with no products, one gluing per pair orbit."""
    pa = PartialAlgebra(group, tau, law)
    cat = catalog if catalog is not None else _default_catalog()
    n = group.degree
    if n == 1:
        # lone axis: pin it to the one-dimensional algebra directly
        spec = cat['1A']
        assign = {0: spec.marked[0]}
        target = GluingTarget.from_spec(spec, assign)
        wy = Subspace.span([{0: _Q1}], n)
        phi = {0: dict(target.axes[0])}
        pa.gluings.append(Gluing((0,), assign, target, wy, phi))
    else:
        for vertex in shape.graph.vertices:
            name = shape.choice[vertex.index]
            spec = cat[name]
            data = vertex.data
            yset = data.xset
            assign = _glue_assignment(pa, set(yset), spec, data.a, data.b)
            target = GluingTarget.from_spec(spec, assign)
            wy = Subspace.span([{y: _Q1} for y in yset], n)
            phi = {y: dict(target.axes[y]) for y in yset}
            pa.gluings.append(Gluing(tuple(sorted(yset)), assign, target,
                                     wy, phi))
    for gl in pa.gluings:
        _init_eig_from_gluing(pa, gl)
    one = frozenset((_Q1,))
    for rep in pa.axis_reps:
        pa.add_eig(rep, one, [pa.axes[rep]])
    return pa


# ---------------------------------------------------------------------------
# expansion

def _complement(pa, opts):
    """Basis of a complement of V in W, G-invariant via averaging when
    the group is small enough, coordinate-based otherwise."""
    n = pa.dim
    mv = pa.V.dim
    if mv == 0:
        return [{i: _Q1} for i in range(n)]
    if pa.vstart is not None:
        nonpiv = list(range(pa.vstart))
    else:
        ps = set(pa.V.pivots)
        nonpiv = [j for j in range(n) if j not in ps]
    if pa.group.order() > opts.maschke_bound:
        return [{j: _Q1} for j in nonpiv]
    vrows = pa.v_rows()
    vpiv = pa.V.pivots
    acc = {j: {} for j in nonpiv}
    for p in pa.group.elements():
        word = pa.group.element_word(p)
        iword = pa.inv_word(word)
        for j in nonpiv:
            u = pa.apply_word({j: _Q1}, word)
            for pos, piv in enumerate(vpiv):
                c = u.get(piv)
                if c:
                    _vadd_into(u, vrows[pos], -c)
            _vadd_into(acc[j], pa.apply_word(u, iword), _Q1)
    e = Ech()
    for j in nonpiv:
        e.insert(acc[j])
    if len(e) != len(nonpiv):
        raise EngineError('averaged complement lost rank')
    return e.basis_rows()


def _partial_piece(pa, crows):
    """Smallest usable slice of the complement: the G-closure of its
    first line, re-reduced against V."""
    piece = Ech()
    queue = [dict(crows[0])]
    piece.insert(dict(crows[0]))
    while queue:
        r = queue.pop()
        for t in range(len(pa.group.gens_ext)):
            img = pa.apply_gen(t, r)
            if piece.insert(dict(img))[0] is not None:
                queue.append(img)
    ev = Ech()
    for r in pa.v_rows():
        ev.insert(dict(r))
    out = []
    for r in piece.basis_rows():
        res = ev.reduce(r)
        if res:
            ev.insert(dict(res))
            out.append(res)
    return out


def expand(pa, opts=None):
    """Adjoin formal products of V with a complement C and of C with
    itself; extend action, gluings, eigenspace data. Returns False
    without touching pa when the result would exceed the size cap."""
    opts = opts if opts is not None else EngineOptions()
    n = pa.dim
    mv = pa.V.dim
    if mv >= n:
        raise EngineError('nothing to expand: V = W')
    vrows = pa.v_rows()
    vpiv = list(pa.V.pivots)
    crows = _complement(pa, opts)
    if opts.partial_expand and mv:
        crows = _partial_piece(pa, crows)
    c = len(crows)
    nf = mv * c + c * (c + 1) // 2
    ndim = nf + n
    if opts.max_dim is not None and ndim > opts.max_dim:
        return False
    full = not (opts.partial_expand and mv)
    decomp = _Decomp(vrows, crows)
    vs = pa.vstart
    oldmu = pa.mu

    # new-coordinate layout: V(x)C block, then S^2(C), then old W shifted
    cc = {}
    k = mv * c
    for b in range(c):
        for g in range(b, c):
            cc[(b, g)] = k
            k += 1

    def mu_pair(su, sw):
        """Product of two old-W vectors given as (V, C) coefficient
        splits, expressed in new coordinates."""
        va_u, cb_u = su
        va_w, cb_w = sw
        out = {}
        for i, a in va_u.items():
            pi = vpiv[i]
            for j, b in va_w.items():
                pj = vpiv[j]
                _vadd_into(out, oldmu[(pi, pj) if pi <= pj else (pj, pi)],
                           a * b)
        out = {kk + nf: v for kk, v in out.items()}
        for i, a in va_u.items():
            row = i * c
            for j, b in cb_w.items():
                _acc(out, row + j, a * b)
        for i, a in va_w.items():
            row = i * c
            for j, b in cb_u.items():
                _acc(out, row + j, a * b)
        for i, a in cb_u.items():
            for j, b in cb_w.items():
                _acc(out, cc[(i, j) if i <= j else (j, i)], a * b)
        return out

    def split(w):
        if vs is not None and w and min(w) >= vs:
            return {k2 - vs: v for k2, v in w.items()}, {}
        return decomp.split(w)

    if full:
        # full expansion: the new V is all of old W
        usplit = [split({j: _Q1}) for j in range(n)]
        newpiv = list(range(nf, ndim))
        urows_new = [{nf + j: _Q1} for j in range(n)]
        newmu = {}
        for i in range(n):
            for j in range(i, n):
                newmu[(nf + i, nf + j)] = mu_pair(usplit[i], usplit[j])
        new_vstart = nf
    else:
        # partial expansion: the new V is old V plus the chosen slice
        ue = Ech()
        for r in vrows + crows:
            ue.insert(dict(r))
        urows_old = ue.basis_rows()
        usplit = [split(r) for r in urows_old]
        urows_new = [_shift_vec(r, nf) for r in urows_old]
        newpiv = [p + nf for p in sorted(ue.rows)]
        newmu = {}
        for i in range(len(urows_old)):
            for j in range(i, len(urows_old)):
                pi, pj = newpiv[i], newpiv[j]
                key = (pi, pj) if pi <= pj else (pj, pi)
                newmu[key] = mu_pair(usplit[i], usplit[j])
        new_vstart = None

    # action on the new module: old block shifted, formal block via the
    # product of the transformed factors
    newact = []
    for t in range(len(pa.group.gens_ext)):
        rows = pa.act[t]
        vimg = []
        for r in vrows:
            im = _apply_rows(r, rows)
            va = {}
            for pos, piv in enumerate(vpiv):
                cval = im.get(piv)
                if cval:
                    va[pos] = cval
            vimg.append((va, {}))
        cimg = [split(_apply_rows(r, rows)) for r in crows]
        nrows = []
        for a in range(mv):
            sa = vimg[a]
            for b in range(c):
                nrows.append(mu_pair(sa, cimg[b]))
        for b in range(c):
            sb = cimg[b]
            for g in range(b, c):
                nrows.append(mu_pair(sb, cimg[g]))
        for j in range(n):
            nrows.append(_shift_vec(rows[j], nf))
        newact.append(nrows)

    # gluings: multiply the glued span down through phi
    newgl = []
    relrows = []
    for gl in pa.gluings:
        wye = gl.wy.to_ech()
        if pa.vstart is not None:
            uv = _block_rows(wye, pa.vstart)
        else:
            uv = _intersect_rows(wye, pa.V.to_ech(), n)
        de = Ech()
        for r in uv:
            de.insert(dict(r))
        if full:
            xu_rows = [vec_to_dict(r) for r in gl.wy.basis.a]
        else:
            ue2 = Ech()
            for r in vrows + crows:
                ue2.insert(dict(r))
            xu_rows = _intersect_rows(wye, ue2, n)
        drows = []
        for r in xu_rows:
            if de.insert(dict(r))[0] is not None:
                drows.append(r)
        pairs = []
        for p, r in zip(gl.wy.pivots, gl.wy.basis.a):
            pairs.append((_shift_vec(vec_to_dict(r), nf), dict(gl.phi[p])))
        uv_splits = [split(r) for r in uv]
        uv_phi = [gl.phi_of(r) for r in uv]
        d_splits = [split(r) for r in drows]
        d_phi = [gl.phi_of(r) for r in drows]
        tgt = gl.target
        for i, su in enumerate(uv_splits):
            for j, sd in enumerate(d_splits):
                pairs.append((mu_pair(su, sd),
                              tgt.mult(uv_phi[i], d_phi[j])))
        for i in range(len(drows)):
            for j in range(i, len(drows)):
                pairs.append((mu_pair(d_splits[i], d_splits[j]),
                              tgt.mult(d_phi[i], d_phi[j])))
        ge = Ech()
        for vec, img in pairs:
            p, left = ge.insert(vec, img if img else None)
            if p is None:
                # dependent span vector: its image mismatch is a relation
                # only if nonzero, which the construction rules out
                if left:
                    raise EngineError('gluing span dependency with '
                                      'mismatched image')
        wy2 = Subspace.from_ech(ge, ndim)
        ge.rrefize()
        phi2 = {}
        for p in sorted(ge.rows):
            lead = rat(ge.rows[p][p])
            aux = ge.aux.get(p, {})
            phi2[p] = {kk: v / lead for kk, v in aux.items()}
        images = [phi2[p] for p in wy2.pivots]
        wrows = [vec_to_dict(r) for r in wy2.basis.a]
        at = {p: i for i, p in enumerate(wy2.pivots)}
        for ker in kernel_of_images(images, tags=list(wy2.pivots)):
            vec = {}
            for p, coeff in ker.items():
                _vadd_into(vec, wrows[at[p]], coeff)
            relrows.append(vec)
        newgl.append(Gluing(gl.y, gl.assign, gl.target, wy2, phi2))

    # install the expanded module
    pa.mu = newmu
    pa.act = newact
    pa.axes = {x: _shift_vec(v, nf) for x, v in pa.axes.items()}
    pa.rel = _shift_ech(pa.rel, nf)
    pa.eig = {rep: {kk: _shift_ech(e, nf) for kk, e in table.items()}
              for rep, table in pa.eig.items()}
    pa.tags = [(pa.round + 1, i) for i in range(nf)] + pa.tags
    pa.round += 1
    pa.fix_done = set()
    pa.matcache.clear()
    pa.dim = ndim
    pa.V = Subspace(ndim, Mat([vec_to_list(r, ndim) for r in urows_new]),
                    newpiv)
    pa.vstart = new_vstart
    pa.gluings = newgl
    pa.add_relations(relrows)

    # pull target eigenspaces back through the extended gluings
    for gl in pa.gluings:
        _init_eig_from_gluing(pa, gl)
    one = frozenset((_Q1,))
    for rep in pa.axis_reps:
        pa.add_eig(rep, one, [pa.axes[rep]])
    return True


# ---------------------------------------------------------------------------
# saturation

def saturate(pa, rep, fix_trick=True, stop=None):
    """Grow the eigenspace table at one axis representative to a
    fixpoint; push eigenvalue-free vectors into the relations. A stop
    predicate may end the pass early (the caller reduces and retries)."""
    pa.eig_ensure(rep)
    law = pa.law
    even_full = frozenset(law.plus)
    odd_full = frozenset(law.minus)
    lam_odd = next(iter(law.minus))
    a_vec = pa.axes[rep]
    dim = pa.dim
    table = pa.eig[rep]

    trows = pa.perm_rows(pa.tau[rep])
    eplus = Ech()
    eminus = Ech()
    for i in range(dim):
        r = trows[i]
        p = dict(r)
        _acc(p, i, _Q1)
        m = dict(r)
        _acc(m, i, -_Q1)
        eplus.insert(p)
        eminus.insert(m)
    if len(eplus) + len(eminus) != dim:
        raise EngineError('axis involution failed to split W')
    pa.add_eig(rep, even_full, eplus.basis_rows())
    pa.add_eig(rep, odd_full, eminus.basis_rows())

    a_known = pa.in_v(a_vec)

    # the odd part multiplies down once: all the useful rules are even
    if a_known:
        if pa.vstart is not None:
            odd_v = _block_rows(table[odd_full], pa.vstart)
        else:
            odd_v = _intersect_rows(table[odd_full], pa.V.to_ech(), dim)
        found = []
        for u in odd_v:
            w = pa.mult(u, a_vec)
            _vadd_into(w, u, -lam_odd)
            found.append(w)
        pa.add_relations(found)

    evens = [k for k in pa.keys if k <= law.plus]
    incomparable = [(k1, k2) for i, k1 in enumerate(evens)
                    for k2 in evens[i + 1:]
                    if not (k1 <= k2 or k2 <= k1)]

    # stable spanning lists for eig[k] & V: append-only, so watermarks
    # make the product passes incremental
    lists = {k: ([], Ech()) for k in pa.keys}
    seen_dim = {k: -1 for k in pa.keys}

    def refresh(k):
        d = len(table[k])
        if d == seen_dim[k]:
            return lists[k][0]
        seen_dim[k] = d
        if pa.vstart is not None:
            rows = _block_rows(table[k], pa.vstart)
        else:
            rows = _intersect_rows(table[k], pa.V.to_ech(), dim)
        lst, ech = lists[k]
        for r in rows:
            if ech.insert(dict(r))[0] is not None:
                lst.append(r)
        return lst

    done_int = set()
    md_mark = {}
    rule_mark = {}

    def dims():
        return tuple(len(table[k]) for k in pa.keys) + (len(pa.rel),)

    def pass_intersections():
        for k1, k2 in incomparable:
            sig = (k1, k2, len(table[k1]), len(table[k2]))
            if sig in done_int:
                continue
            done_int.add(sig)
            meet = _intersect_rows(table[k1], table[k2], dim)
            tgt = k1 & k2
            if tgt:
                pa.add_eig(rep, tgt, meet)
            else:
                pa.add_relations(meet)

    def pass_multiply_down():
        for k in evens:
            lst = refresh(k)
            for lam in sorted(k, key=lambda q: (q.denominator,
                                                q.numerator)):
                tgt = k - frozenset((lam,))
                start = md_mark.get((k, lam), 0)
                if start >= len(lst):
                    continue
                out = []
                for u in lst[start:]:
                    w = pa.mult(u, a_vec)
                    _vadd_into(w, u, -lam)
                    out.append(w)
                md_mark[(k, lam)] = len(lst)
                if tgt:
                    pa.add_eig(rep, tgt, out)
                else:
                    pa.add_relations(out)

    def pass_rules():
        for ridx, rule in enumerate(pa.rules):
            ki, kj, kk = rule.i_set, rule.j_set, rule.k_set
            li = refresh(ki)
            lj = refresh(kj)
            ci, cj = rule_mark.get(ridx, (0, 0))
            if not li or not lj:
                continue
            out = []
            if ki == kj:
                for i in range(len(li)):
                    for j in range(max(i, cj), len(li)):
                        out.append(pa.mult(li[i], li[j]))
                rule_mark[ridx] = (len(li), len(li))
            else:
                for i, u in enumerate(li):
                    for j, v in enumerate(lj):
                        if i < ci and j < cj:
                            continue
                        out.append(pa.mult(u, v))
                rule_mark[ridx] = (len(li), len(lj))
            if out:
                if kk:
                    pa.add_eig(rep, kk, out)
                else:
                    pa.add_relations(out)

    while True:
        if stop is not None and stop():
            break
        before = dims()
        pass_intersections()
        if a_known:
            pass_multiply_down()
            pass_rules()
        if dims() != before:
            continue
        if fix_trick and rep not in pa.fix_done:
            pa.fix_done.add(rep)
            if _fix_trick(pa, rep, even_full):
                pa.stats['fix_trick_fired'] = True
                continue
        break
    return pa


def _fix_trick(pa, rep, even_full):
    """Members of the full even part move by stabilizer elements only
    inside the non-identity even eigenvalues."""
    tgt = even_full - frozenset((_Q1,))
    if not tgt:
        return False
    stab = pa.group.stabilizer(rep)
    if not stab.gens:
        return False
    rows = pa.eig[rep][even_full].basis_rows()
    grew = False
    for g in stab.gens:
        mat = pa.perm_rows(g)
        out = []
        for u in rows:
            w = _apply_rows(u, mat)
            _vadd_into(w, u, -_Q1)
            if w:
                out.append(w)
        if out and pa.add_eig(rep, tgt, out):
            grew = True
    return grew


# ---------------------------------------------------------------------------
# reduction

def _colmap_of(ech, dim):
    """Sparse column map of the quotient by span(ech): coordinate j maps
    to a vector over the kept coordinates."""
    ech.rrefize()
    pivs = sorted(ech.rows)
    pivset = set(pivs)
    kept = [j for j in range(dim) if j not in pivset]
    pos = {j: t for t, j in enumerate(kept)}
    colmap = {}
    for j in kept:
        colmap[j] = {pos[j]: _Q1}
    for p in pivs:
        r = ech.rows[p]
        lead = r[p]
        colmap[p] = {pos[j]: rat(-v, lead) for j, v in r.items() if j != p}
    return colmap, kept, pos


def _papply(colmap, vec):
    out = {}
    for k, v in vec.items():
        _vadd_into(out, colmap[k], v)
    return out


def _grow_relations(pa):
    """Close the relations under the group, products with V, and the
    gluings (push through phi, grow as an ideal, pull back). Work is
    watermarked so each row is processed once per closure pass."""
    rel = pa.rel
    dim = pa.dim
    queue = [dict(r) for r in rel.basis_rows()]
    # one of each inverse pair closes the span: g**-1 = g**(n-1)
    gsel = [t for t in range(len(pa.group.gens_ext))
            if t <= pa.inv_idx[t]]
    vrows = None
    rv_seen = Ech()
    rv_mark = -1
    gstate = []
    for gl in pa.gluings:
        pairs = [(vec_to_dict(r), gl.phi[p])
                 for p, r in zip(gl.wy.pivots, gl.wy.basis.a)]
        # [wy echelon, pushed rows, ideal span, pulled size, pairs, mark]
        gstate.append([gl.wy.to_ech(), Ech(), Ech(), 0, pairs, -1])
    while True:
        while queue:
            r = queue.pop()
            for t in gsel:
                img = pa.apply_gen(t, r)
                if img and rel.insert(dict(img))[0] is not None:
                    queue.append(img)
        grew = False
        fresh = []
        if len(rel) != rv_mark:
            rv_mark = len(rel)
            for r in pa.rel_cap_v_rows():
                if rv_seen.insert(dict(r))[0] is not None:
                    fresh.append(r)
        if fresh:
            if vrows is None:
                vrows = pa.v_rows()
            for r in fresh:
                for w in vrows:
                    prod = pa.mult(r, w)
                    if prod and rel.insert(dict(prod))[0] is not None:
                        queue.append(prod)
                        grew = True
        for gl, st in zip(pa.gluings, gstate):
            wye, pushed, sb, done, pairs, mark = st
            if len(rel) == mark:
                continue
            st[5] = len(rel)
            news = []
            for r in _intersect_rows(rel, wye, dim):
                if pushed.insert(dict(r))[0] is not None:
                    news.append(r)
            if not news:
                continue
            _ideal_grow(gl.target, sb, [gl.phi_of(r) for r in news])
            if len(sb) == done:
                continue
            st[3] = len(sb)
            pre = _preimage_rows(pairs, sb.basis_rows(), gl.target.dim)
            for r in pre:
                if r and rel.insert(dict(r))[0] is not None:
                    queue.append(r)
                    grew = True
        if not grew and not queue:
            return


def _ideal_closure(target, rows):
    """Span of the rows closed under multiplication by the target."""
    e = Ech()
    _ideal_grow(target, e, rows)
    return e


def _ideal_grow(target, e, rows):
    queue = []
    for r in rows:
        if r and e.insert(dict(r))[0] is not None:
            queue.append(r)
    while queue:
        s = queue.pop()
        for k in range(target.dim):
            w = target.mult(s, {k: _Q1})
            if w and e.insert(dict(w))[0] is not None:
                queue.append(w)


def reduce(pa):
    """Quotient by the grown relation submodule. Returns pa, or a
    Collapsed marker when distinct axes become identified."""
    if not len(pa.rel):
        return pa
    _grow_relations(pa)
    rel = pa.rel

    merged = []
    zeroed = []
    pts = sorted(pa.axes)
    for i, x in enumerate(pts):
        ax = pa.axes[x]
        if rel.contains(ax):
            zeroed.append(x)
            continue
        for y in pts[i + 1:]:
            d = dict(ax)
            _vadd_into(d, pa.axes[y], -_Q1)
            if rel.contains(d):
                merged.append((x, y))
    if merged or zeroed:
        return Collapsed(merged, zeroed)

    dim = pa.dim
    colmap, kept, pos = _colmap_of(rel, dim)
    newdim = len(kept)

    # gluing targets may shrink by the image of the glued relations
    newgl = []
    for gl in pa.gluings:
        wye = gl.wy.to_ech()
        ry = _intersect_rows(rel, wye, dim)
        target = gl.target
        tmap = None
        if ry:
            sb = _ideal_closure(target, [gl.phi_of(r) for r in ry])
            if len(sb):
                tmap, tkept, _ = _colmap_of(sb, target.dim)
                target = target.quo(tmap, tkept)
        ge = Ech()
        for p, r in zip(gl.wy.pivots, gl.wy.basis.a):
            img = gl.phi[p]
            if tmap is not None:
                img = _papply(tmap, img)
            piv, left = ge.insert(_papply(colmap, vec_to_dict(r)),
                                  img if img else None)
            if piv is None and left:
                raise EngineError('gluing image mismatch across quotient')
        wy2 = Subspace.from_ech(ge, newdim)
        ge.rrefize()
        phi2 = {}
        for p in sorted(ge.rows):
            lead = rat(ge.rows[p][p])
            aux = ge.aux.get(p, {})
            phi2[p] = {kk: v / lead for kk, v in aux.items()}
        newgl.append(Gluing(gl.y, gl.assign, target, wy2, phi2))

    # push the product table through the kept-coordinate lifts
    oldmu = pa.mu
    oldpiv = list(pa.V.pivots)
    if pa.vstart is not None:
        newpivs = [pos[j] for j in kept if j >= pa.vstart]
        lift_vecs = [{j: _Q1} for j in kept if j >= pa.vstart]
    else:
        ve2 = Ech()
        vrows = pa.v_rows()
        for t, r in enumerate(vrows):
            ve2.insert(_papply(colmap, r), {t: _Q1})
        ve2.rrefize()
        newpivs = sorted(ve2.rows)
        lift_vecs = []
        for p in newpivs:
            lead = rat(ve2.rows[p][p])
            lift = {}
            for t, coeff in ve2.aux.get(p, {}).items():
                _vadd_into(lift, vrows[t], coeff / lead)
            lift_vecs.append(lift)
    vs = pa.vstart
    pset = set(oldpiv)

    def mult_old(u, v):
        if vs is not None:
            pu = [(p, cq) for p, cq in u.items() if p >= vs]
            pv = [(q, cq) for q, cq in v.items() if q >= vs]
        else:
            pu = [(p, cq) for p, cq in u.items() if p in pset]
            pv = [(q, cq) for q, cq in v.items() if q in pset]
        out = {}
        for p, cu in pu:
            for q, cv in pv:
                _vadd_into(out, oldmu[(p, q) if p <= q else (q, p)],
                           cu * cv)
        return out

    newmu = {}
    for i in range(len(newpivs)):
        for j in range(i, len(newpivs)):
            pi, pj = newpivs[i], newpivs[j]
            key = (pi, pj) if pi <= pj else (pj, pi)
            newmu[key] = _papply(colmap, mult_old(lift_vecs[i],
                                                  lift_vecs[j]))

    newact = []
    for t in range(len(pa.group.gens_ext)):
        rows = pa.act[t]
        newact.append([_papply(colmap, rows[j]) for j in kept])

    pa.axes = {x: _papply(colmap, v) for x, v in pa.axes.items()}
    # eigenspace data is only needed for further rounds; when the
    # quotient leaves V = W the run is over and the push is dead weight
    if len(newpivs) == newdim:
        pa.eig = {}
    else:
        neweig = {}
        for rep2, tab in pa.eig.items():
            nt = {}
            for kk, e in tab.items():
                ne = Ech()
                for r in e.basis_rows():
                    ne.insert(_papply(colmap, r))
                nt[kk] = ne
            neweig[rep2] = nt
        pa.eig = neweig
    pa.tags = [pa.tags[j] for j in kept]
    pa.mu = newmu
    pa.act = newact
    pa.gluings = newgl
    pa.rel = Ech()
    pa.matcache.clear()
    pa.dim = newdim
    if pa.vstart is not None:
        nv = len(newpivs)
        pa.vstart = newdim - nv
        if newpivs != list(range(pa.vstart, newdim)):
            raise EngineError('suffix block lost in quotient')
        rows = [{p: _Q1} for p in newpivs]
        pa.V = Subspace(newdim, Mat([vec_to_list(r, newdim) for r in rows]),
                        newpivs)
    else:
        e = Ech()
        for r in lift_vecs:
            e.insert(_papply(colmap, r))
        pa.V = Subspace.from_ech(e, newdim)
    return pa


# ---------------------------------------------------------------------------
# the driver

def _reltrig(pa, opts):
    return len(pa.rel) * opts.reduce_den > pa.dim * opts.reduce_num


def _finalize(pa):
    """Structure constants on the canonical basis: independent axis
    vectors in point order first, then unit coordinates from oldest to
    newest. Axes may be linearly dependent (more marked points than
    dimensions); dependent ones are expressed in the chosen basis."""
    d = pa.dim
    order = sorted(range(d), key=lambda j: pa.tags[j])
    e = Ech()
    basis = []
    for x in sorted(pa.axes):
        v = pa.axes[x]
        if e.insert(dict(v), {len(basis): _Q1})[0] is not None:
            basis.append(dict(v))
    for j in order:
        if len(basis) == d:
            break
        v = {j: _Q1}
        if e.insert(dict(v), {len(basis): _Q1})[0] is not None:
            basis.append(v)
    if len(basis) != d:
        raise EngineError('canonical basis incomplete')

    def coords(vec):
        res, combo = e.reduce_with_combo(vec)
        if res:
            raise EngineError('vector escaped the completed module')
        out = [_Q0] * d
        for p, coeff in combo.items():
            for t, val in e.aux[p].items():
                out[t] += coeff * val
        return out

    mu = {}
    for i in range(d):
        for j in range(i, d):
            mu[(i, j)] = tuple(coords(pa.mult(basis[i], basis[j])))
    axes = {x: tuple(coords(pa.axes[x])) for x in sorted(pa.axes)}
    alg = Algebra(d, mu, axes, pa.law)
    for x in sorted(pa.axes):
        aa = alg.mult(alg.axes[x], alg.axes[x])
        if list(aa) != list(alg.axes[x]):
            raise EngineError('axis is not idempotent after completion')
    return alg


def run(group, tau, shape, options=None, catalog=None, law=None):
    """Drive expand / saturate / reduce to completion or a cap."""
    opts = options if options is not None else EngineOptions()
    pa = init_partial(group, tau, shape, catalog=catalog, law=law)
    stats = pa.stats
    t0 = monotonic()
    status = 'incomplete'
    reason = None
    collapsed = None

    def overtime():
        return (opts.time_limit is not None
                and monotonic() - t0 > opts.time_limit)

    def timed(kind, fn, *args, **kw):
        t = monotonic()
        try:
            return fn(*args, **kw)
        finally:
            stats['timings'][kind] += monotonic() - t

    while True:
        if (opts.max_expansions is not None
                and stats['expansions'] >= opts.max_expansions):
            reason = 'max_expansions'
            break
        if overtime():
            reason = 'time_limit'
            break
        if not timed('expand', expand, pa, opts):
            reason = 'max_dim'
            break
        stats['expansions'] += 1
        stats['max_dim'] = max(stats['max_dim'], pa.dim)
        if _reltrig(pa, opts):
            out = timed('reduce', reduce, pa)
            if isinstance(out, Collapsed):
                collapsed = out
                break
        # saturate and reduce until the dimension settles; expanding an
        # unsettled module lets junk coordinates multiply
        while collapsed is None and not overtime():
            n0 = pa.dim
            for rep in pa.axis_reps:
                if overtime():
                    break
                timed('saturate', saturate, pa, rep, opts.fix_trick,
                      lambda: _reltrig(pa, opts) or overtime())
                if _reltrig(pa, opts):
                    out = timed('reduce', reduce, pa)
                    if isinstance(out, Collapsed):
                        collapsed = out
                        break
                    if pa.V.dim == pa.dim:
                        break
            if collapsed is not None:
                break
            out = timed('reduce', reduce, pa)
            if isinstance(out, Collapsed):
                collapsed = out
                break
            if pa.V.dim == pa.dim or pa.dim == n0:
                break
        if collapsed is not None:
            break
        if overtime():
            reason = 'time_limit'
            break
        if pa.V.dim == pa.dim:
            status = 'completed'
            break

    if collapsed is not None:
        stats['final_dim'] = 0
        stats['merged'] = collapsed.merged
        stats['zeroed'] = collapsed.zeroed
        return RunResult('collapsed', None, stats)
    if status == 'completed':
        alg = _finalize(pa)
        stats['final_dim'] = alg.dim
        return RunResult('completed', alg, stats)
    stats['final_dim'] = pa.dim
    stats['reason'] = reason
    return RunResult('incomplete', None, stats)


# ---------------------------------------------------------------------------
# structural invariants (exercised by the tests after every stage)

def check_invariants(pa, sample=30, rel_invariant=False):
    """Invariance and equivariance of every component; raises
    EngineError with a description on the first violation."""
    dim = pa.dim
    ve = pa.V.to_ech()
    vrows = pa.v_rows()
    ngen = len(pa.group.gens_ext)
    for t in range(ngen):
        for r in vrows:
            if ve.reduce(pa.apply_gen(t, r)):
                raise EngineError('V is not invariant')
    pairs = [(i, j) for i in range(len(vrows))
             for j in range(i, len(vrows))][:sample]
    for t in range(ngen):
        for i, j in pairs:
            lhs = pa.mult(pa.apply_gen(t, vrows[i]),
                          pa.apply_gen(t, vrows[j]))
            rhs = pa.apply_gen(t, pa.mult(vrows[i], vrows[j]))
            _vadd_into(lhs, rhs, -_Q1)
            if lhs:
                raise EngineError('product is not equivariant')
    # relation rows are only G-closed by reduction; earlier they may be
    # gluing-local
    if rel_invariant:
        for r in pa.rel.basis_rows():
            for t in range(ngen):
                if pa.rel.reduce(pa.apply_gen(t, r)):
                    raise EngineError('relations are not invariant')
    for t, g in enumerate(pa.group.gens_ext):
        for x, v in pa.axes.items():
            img = pa.apply_gen(t, v)
            _vadd_into(img, pa.axes[g(x)], -_Q1)
            if img:
                raise EngineError('axes are not permuted correctly')
    for gl in pa.gluings:
        wrows = gl.wy_rows()
        wye = gl.wy.to_ech()
        tgt = gl.target
        for y in gl.y:
            word = pa.group.element_word(pa.tau[y])
            for r in wrows:
                moved = pa.apply_word(r, word)
                if wye.reduce(moved):
                    raise EngineError('glued span not tau-stable')
                lhs = gl.phi_of(moved)
                rhs = _apply_rows(gl.phi_of(r), tgt.taus[y])
                _vadd_into(lhs, rhs, -_Q1)
                if lhs:
                    raise EngineError('phi is not tau-equivariant')
        if pa.vstart is not None:
            uv = _block_rows(wye, pa.vstart)
        else:
            uv = _intersect_rows(wye, ve, dim)
        for i in range(len(uv)):
            for j in range(i, len(uv)):
                lhs = gl.phi_of(pa.mult(uv[i], uv[j]))
                rhs = tgt.mult(gl.phi_of(uv[i]), gl.phi_of(uv[j]))
                _vadd_into(lhs, rhs, -_Q1)
                if lhs:
                    raise EngineError('phi does not respect the product')
        prod_rows = []
        for i in range(len(uv)):
            for j in range(len(uv)):
                prod_rows.append(pa.mult(uv[i], uv[j]))
        for r in prod_rows:
            if r and wye.reduce(r):
                raise EngineError('glued span not closed under products')
    for rep, tab in pa.eig.items():
        for k1 in pa.keys:
            for k2 in pa.keys:
                if k1 < k2 and len(tab[k1]) > len(tab[k2]):
                    raise EngineError('eigenspace table not monotone')
    return True
