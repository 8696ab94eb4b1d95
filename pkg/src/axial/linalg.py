"""Exact rational linear algebra.

Scalars are gmpy2.mpq (Fraction fallback). Public matrices are dense;
subspaces are canonical row-RREF bases, so equal subspaces compare equal.
The Ech accumulator is the internal workhorse: forward echelon over
scale-invariant integer rows, with an optional rational side-vector carried
through the same row operations (used for kernels, solves and gluing maps).
"""

try:
    from gmpy2 import mpq, mpz, gcd as _gcd
    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    from fractions import Fraction as mpq
    from math import gcd as _gcd
    mpz = int
    HAVE_GMPY2 = False

_Q0 = mpq(0)
_Q1 = mpq(1)


def rat(x, y=None):
    """Coerce to an exact rational. Accepts int, 'p/q' strings, pairs."""
    if y is not None:
        return mpq(x, y)
    if isinstance(x, str):
        return mpq(x)
    return mpq(x)


def rat_str(x):
    return str(x)


# ---------------------------------------------------------------- vectors

def vec_to_dict(v):
    return {i: mpq(c) for i, c in enumerate(v) if c}


def vec_to_list(d, n):
    out = [_Q0] * n
    for i, c in d.items():
        out[i] = mpq(c)
    return out


def vadd(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        if w is None:
            out[k] = v
        else:
            w = w + v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def vscale(a, c):
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def vaddmul(a, c, b):
    # a + c*b, in place on a copy
    if not c:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, _Q0) + c * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def intify(d):
    """Clear denominators and content; sign is left alone. {} stays {}."""
    return intify_scaled(d)[0]


def intify_scaled(d):
    """(integer_row, s) with integer_row = s * d, s a positive rational."""
    if not d:
        return {}, _Q1
    l = 1
    for c in d.values():
        q = c.denominator
        l = l // _gcd(l, q) * q
    g = 0
    ints = {}
    for k, c in d.items():
        w = c.numerator * (l // c.denominator)
        ints[k] = w
        g = _gcd(g, w)
    if g > 1:
        return {k: w // g for k, w in ints.items()}, mpq(l, g)
    return ints, mpq(l)


# ---------------------------------------------------------------- echelon

class Ech:
    """Forward echelon of integer rows, leftmost-pivot convention.

    Rows are scale-invariant: each stored row is primitive (content 1,
    positive pivot). An optional aux vector per row is carried through the
    identical row operations over mpq, so (row, aux) pairs stay jointly
    scaled. rrefize() back-substitutes once to the canonical reduced form.
    """

    __slots__ = ('rows', 'aux', 'reduced')

    def __init__(self):
        self.rows = {}      # pivot col -> {col: mpz}
        self.aux = {}       # pivot col -> {key: mpq}, only for tracked rows
        self.reduced = True

    def copy(self):
        e = Ech.__new__(Ech)
        e.rows = {p: dict(r) for p, r in self.rows.items()}
        e.aux = {p: dict(a) for p, a in self.aux.items()}
        e.reduced = self.reduced
        return e

    def __len__(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def insert(self, row, aux=None):
        """Insert an integer dict row. Returns (pivot, leftover_aux).

        pivot is None when the row was dependent; leftover_aux is then the
        aux of (row, aux) minus the matching stored combination, i.e. the
        aux value of a vector that reduces to zero.
        """
        a = dict(aux) if aux else None
        r = {}
        for k, v in row.items():
            if v:
                if getattr(v, 'denominator', 1) != 1:
                    ir, s = intify_scaled(row)
                    r = {k2: mpz(v2) for k2, v2 in ir.items()}
                    if a:
                        a = {k2: s * v2 for k2, v2 in a.items()}
                    break
                r[k] = mpz(v)
        rows = self.rows
        auxs = self.aux
        steps = 0
        while r:
            p = min(r)
            hit = rows.get(p)
            if hit is None:
                g = mpz(0)
                for v in r.values():
                    g = _gcd(g, v)
                neg = r[p] < 0
                if g > 1 or neg:
                    if neg:
                        g = -g
                    r = {k: v // g for k, v in r.items()}
                    if a:
                        qg = mpq(g)
                        a = {k: v / qg for k, v in a.items() if v}
                rows[p] = r
                if a:
                    auxs[p] = a
                self.reduced = False
                return p, None
            ha = auxs.get(p)
            c1 = hit[p]
            c2 = r[p]
            g = _gcd(c1, c2)
            c1 //= g
            c2 //= g
            # r := c1*r - c2*hit  (kills column p)
            nr = {}
            for k, v in r.items():
                w = c1 * v - c2 * hit.get(k, 0)
                if w:
                    nr[k] = w
            for k, v in hit.items():
                if k not in r:
                    w = -c2 * v
                    if w:
                        nr[k] = w
            r = nr
            if a is not None or ha is not None:
                qc1 = mpq(c1)
                qc2 = mpq(c2)
                na = {}
                if a:
                    for k, v in a.items():
                        na[k] = qc1 * v
                if ha:
                    for k, v in ha.items():
                        w = na.get(k, _Q0) - qc2 * v
                        if w:
                            na[k] = w
                        else:
                            na.pop(k, None)
                a = na
            # entries grow along a long elimination; strip the content
            # now and then to keep multiplications cheap
            steps += 1
            if not (steps & 7) and r:
                g = mpz(0)
                for v in r.values():
                    g = _gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    r = {k: v // g for k, v in r.items()}
                    if a:
                        qg = mpq(g)
                        a = {k: v / qg for k, v in a.items() if v}
        return None, (a if a else None)

    def reduce(self, row):
        """Residue of an mpq dict row modulo the span. {} means contained."""
        r = {k: mpq(v) for k, v in row.items() if v}
        rows = self.rows
        while r:
            p = min(r)
            hit = rows.get(p)
            if hit is None:
                return r
            c = r[p] / hit[p]
            for k, v in hit.items():
                w = r.get(k, _Q0) - c * v
                if w:
                    r[k] = w
                else:
                    r.pop(k, None)
        return r

    def reduce_with_combo(self, row):
        """As reduce(), also returning {pivot: coeff} with
        row = sum coeff * stored_row + residue."""
        r = {k: mpq(v) for k, v in row.items() if v}
        combo = {}
        rows = self.rows
        while r:
            p = min(r)
            hit = rows.get(p)
            if hit is None:
                return r, combo
            c = r[p] / hit[p]
            combo[p] = c
            for k, v in hit.items():
                w = r.get(k, _Q0) - c * v
                if w:
                    r[k] = w
                else:
                    r.pop(k, None)
        return r, combo

    def contains(self, row):
        return not self.reduce(row)

    def rrefize(self):
        """Back-substitute to canonical reduced echelon (integer rows,
        positive primitive pivots)."""
        if self.reduced:
            return
        pivs = sorted(self.rows)
        rows = self.rows
        auxs = self.aux
        for i in range(len(pivs) - 1, 0, -1):
            p = pivs[i]
            low = rows[p]
            lowa = auxs.get(p)
            for q in pivs[:i]:
                up = rows[q]
                b = up.get(p)
                if not b:
                    continue
                a = low[p]
                g = _gcd(a, b)
                a //= g
                b //= g
                nr = {}
                for k, v in up.items():
                    w = a * v - b * low.get(k, 0)
                    if w:
                        nr[k] = w
                for k, v in low.items():
                    if k not in up:
                        w = -b * v
                        if w:
                            nr[k] = w
                g = mpz(0)
                for v in nr.values():
                    g = _gcd(g, v)
                neg = nr[q] < 0
                upa = auxs.get(q)
                if upa is not None or lowa is not None:
                    qa = mpq(a)
                    qb = mpq(b)
                    na = {}
                    if upa:
                        for k, v in upa.items():
                            na[k] = qa * v
                    if lowa:
                        for k, v in lowa.items():
                            w = na.get(k, _Q0) - qb * v
                            if w:
                                na[k] = w
                            else:
                                na.pop(k, None)
                    if g > 1 or neg:
                        gg = mpq(-g if neg else g)
                        na = {k: v / gg for k, v in na.items() if v}
                    auxs[q] = na
                if g > 1 or neg:
                    if neg:
                        g = -g
                    nr = {k: v // g for k, v in nr.items()}
                rows[q] = nr
        self.reduced = True

    def basis_rows(self):
        """Canonical leading-1 mpq rows, sorted by pivot."""
        self.rrefize()
        out = []
        for p in sorted(self.rows):
            r = self.rows[p]
            lead = mpq(r[p])
            out.append({k: v / lead for k, v in r.items()})
        return out

    def int_rows(self):
        return [self.rows[p] for p in sorted(self.rows)]


def span_of(vectors):
    """Ech spanning the given mpq or int dict vectors."""
    e = Ech()
    for v in vectors:
        e.insert(v)
    return e


def kernel_of_images(images, tags=None):
    """Coefficient vectors k with sum k_i * images[i] = 0.

    images: list of dict vectors. Returns list of mpq dicts keyed by index
    (or by tags[i] when given). Complete: one kernel vector per dependent
    image.
    """
    e = Ech()
    out = []
    for i, im in enumerate(images):
        key = tags[i] if tags is not None else i
        p, left = e.insert(im, {key: _Q1})
        if p is None:
            out.append(left if left else {key: _Q1})
    return out


# ---------------------------------------------------------------- matrices

class Mat:
    """Dense matrix of mpq entries."""

    __slots__ = ('m', 'n', 'a')

    def __init__(self, rows):
        self.a = [[mpq(c) for c in r] for r in rows]
        self.m = len(self.a)
        self.n = len(self.a[0]) if self.a else 0

    @staticmethod
    def zero(m, n):
        M = Mat.__new__(Mat)
        M.m, M.n = m, n
        M.a = [[_Q0] * n for _ in range(m)]
        return M

    @staticmethod
    def identity(n):
        M = Mat.zero(n, n)
        for i in range(n):
            M.a[i][i] = _Q1
        return M

    def shape(self):
        return (self.m, self.n)

    def row(self, i):
        return list(self.a[i])

    def col(self, j):
        return [r[j] for r in self.a]

    def transpose(self):
        M = Mat.__new__(Mat)
        M.m, M.n = self.n, self.m
        M.a = [list(col) for col in zip(*self.a)] if self.a else []
        return M

    def mul(self, other):
        assert self.n == other.m
        ot = list(zip(*other.a))
        out = Mat.zero(self.m, other.n)
        for i, r in enumerate(self.a):
            oi = out.a[i]
            for j, c in enumerate(ot):
                s = _Q0
                for x, y in zip(r, c):
                    if x and y:
                        s += x * y
                oi[j] = s
        return out

    def mulvec(self, v):
        assert self.n == len(v)
        return [sum((x * y for x, y in zip(r, v) if x and y), _Q0)
                for r in self.a]

    def add(self, other):
        assert self.shape() == other.shape()
        return Mat([[x + y for x, y in zip(r, s)]
                    for r, s in zip(self.a, other.a)])

    def scale(self, c):
        c = mpq(c)
        return Mat([[c * x for x in r] for r in self.a])

    def __eq__(self, other):
        return isinstance(other, Mat) and self.a == other.a

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.a))

    def __repr__(self):
        return 'Mat(%d x %d)' % (self.m, self.n)


def rref(mat):
    """Canonical reduced row echelon form. Returns (Mat, pivot columns)."""
    e = Ech()
    for r in mat.a:
        e.insert(intify(vec_to_dict(r)))
    rows = e.basis_rows()
    pivots = tuple(sorted(e.rows))
    out = Mat([vec_to_list(r, mat.n) for r in rows]) if rows else Mat.zero(0, mat.n)
    return out, pivots


# ---------------------------------------------------------------- subspaces

class Subspace:
    """Subspace of Q^ambient, held as a canonical RREF basis."""

    __slots__ = ('ambient', 'basis', 'pivots')

    def __init__(self, ambient, basis, pivots):
        self.ambient = ambient
        self.basis = basis          # Mat, rows = RREF basis
        self.pivots = tuple(pivots)

    @staticmethod
    def span(vectors, ambient):
        """vectors: iterable of length-ambient lists or dict rows."""
        e = Ech()
        for v in vectors:
            d = v if isinstance(v, dict) else vec_to_dict(v)
            e.insert(intify(d))
        return Subspace.from_ech(e, ambient)

    @staticmethod
    def from_ech(e, ambient):
        rows = e.basis_rows()
        b = Mat([vec_to_list(r, ambient) for r in rows]) if rows \
            else Mat.zero(0, ambient)
        return Subspace(ambient, b, sorted(e.rows))

    @staticmethod
    def full(n):
        return Subspace(n, Mat.identity(n), range(n))

    @staticmethod
    def zero(n):
        return Subspace(n, Mat.zero(0, n), ())

    @property
    def dim(self):
        return self.basis.m

    def to_ech(self):
        e = Ech()
        for r in self.basis.a:
            e.insert(intify(vec_to_dict(r)))
        e.reduced = True
        return e

    def contains(self, vec):
        d = vec if isinstance(vec, dict) else vec_to_dict(vec)
        return self.to_ech().contains(d)

    def contains_space(self, other):
        e = self.to_ech()
        return all(e.contains(vec_to_dict(r)) for r in other.basis.a)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.pivots == other.pivots and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.pivots, self.basis))

    def __repr__(self):
        return 'Subspace(dim %d of %d)' % (self.dim, self.ambient)


def subspace_sum(a, b):
    assert a.ambient == b.ambient
    e = a.to_ech()
    for r in b.basis.a:
        e.insert(intify(vec_to_dict(r)))
    return Subspace.from_ech(e, a.ambient)


def subspace_intersect(a, b):
    """Zassenhaus: echelonize stacked (u|u) for u in A, (v|0) for v in B;
    rows with pivot in the right half carry the intersection there."""
    assert a.ambient == b.ambient
    n = a.ambient
    e = Ech()
    for r in a.basis.a:
        d = vec_to_dict(r)
        for k, v in list(d.items()):
            d[n + k] = v
        e.insert(intify(d))
    for r in b.basis.a:
        e.insert(intify(vec_to_dict(r)))
    out = Ech()
    for p in sorted(e.rows):
        if p >= n:
            out.insert({k - n: v for k, v in e.rows[p].items()})
    return Subspace.from_ech(out, n)


def quotient(sub):
    """Quotient of Q^n by a subspace R. Returns (proj, new_dim) with proj
    a (n-k) x n Mat; the image of a row vector x is proj.mulvec(x)."""
    n = sub.ambient
    pivset = set(sub.pivots)
    kept = [j for j in range(n) if j not in pivset]
    proj = Mat.zero(len(kept), n)
    rrows = sub.basis.a
    pivlist = list(sub.pivots)
    for r_i, j in enumerate(kept):
        proj.a[r_i][j] = _Q1
        for t, p in enumerate(pivlist):
            c = rrows[t][j]
            if c:
                proj.a[r_i][p] = -c
    return proj, len(kept)


def solve(a, b):
    """One solution x of A x = b with free variables 0, or None."""
    m, n = a.shape()
    assert len(b) == m
    e = Ech()
    for j in range(n):
        col = {i: a.a[i][j] for i in range(m) if a.a[i][j]}
        e.insert(col, {j: _Q1})
    # express b in the stored columns
    res, combo = e.reduce_with_combo(vec_to_dict(b))
    if res:
        return None
    x = [_Q0] * n
    for p, c in combo.items():
        for j, v in e.aux.get(p, {}).items():
            x[j] += c * v
    # stored rows are reduced versions of columns; aux tracks the original
    # column combination exactly, so x is already correct
    return x


def symmetric_signature(g):
    """Signature (pos, zero, neg) of a symmetric Mat by congruence."""
    n = g.m
    assert g.n == n
    a = [[mpq(c) for c in r] for r in g.a]
    alive = list(range(n))
    pos = neg = zero = 0
    while alive:
        piv = None
        for i in alive:
            if a[i][i]:
                piv = i
                break
        if piv is None:
            # look for an off-diagonal entry, make a hyperbolic pair
            hit = None
            for ii in alive:
                for jj in alive:
                    if ii < jj and a[ii][jj]:
                        hit = (ii, jj)
                        break
                if hit:
                    break
            if hit is None:
                zero += len(alive)
                break
            i, j = hit
            # row/col i += row/col j makes a[i][i] = 2 a[i][j] nonzero
            for k in range(n):
                a[i][k] = a[i][k] + a[j][k]
            for k in range(n):
                a[k][i] = a[k][i] + a[k][j]
            piv = i
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        alive.remove(piv)
        for i in alive:
            c = a[i][piv]
            if c:
                f = c / d
                for k in range(n):
                    a[i][k] = a[i][k] - f * a[piv][k]
                for k in range(n):
                    a[k][i] = a[k][i] - f * a[k][piv]
    return pos, zero, neg
