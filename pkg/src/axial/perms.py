"""Finite permutation groups, BFS element enumeration with words.

Perms are image tuples; p * q applies p first, then q, matching the row
convention used for matrices elsewhere (row i of an action matrix is the
image of basis vector i). Words are tuples of indices into gens_ext, the
generator list closed under inverses, so transporting along an inverse
word never needs a matrix inversion downstream.
"""

from math import lcm


class Perm:
    __slots__ = ('img',)

    def __init__(self, img):
        self.img = tuple(img)

    @staticmethod
    def identity(n):
        return Perm(range(n))

    @staticmethod
    def from_cycles(n, cycles):
        img = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                img[x] = cyc[(i + 1) % len(cyc)]
        return Perm(img)

    @property
    def n(self):
        return len(self.img)

    def __call__(self, x):
        return self.img[x]

    def __mul__(self, other):
        # apply self first, then other
        oi = other.img
        return Perm(tuple(oi[x] for x in self.img))

    def inv(self):
        img = self.img
        out = [0] * len(img)
        for i, x in enumerate(img):
            out[x] = i
        return Perm(out)

    def conj(self, s):
        # self^s = s^-1 * self * s
        return s.inv() * self * s

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.img))

    def order(self):
        seen = [False] * len(self.img)
        o = 1
        for i in range(len(self.img)):
            if not seen[i]:
                l, j = 0, i
                while not seen[j]:
                    seen[j] = True
                    j = self.img[j]
                    l += 1
                o = lcm(o, l)
        return o

    def on_pair(self, pair):
        a, b = pair
        x, y = self.img[a], self.img[b]
        return (x, y) if x < y else (y, x)

    def cycles(self):
        seen = [False] * len(self.img)
        out = []
        for i in range(len(self.img)):
            if not seen[i]:
                cyc = []
                j = i
                while not seen[j]:
                    seen[j] = True
                    cyc.append(j)
                    j = self.img[j]
                if len(cyc) > 1:
                    out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __lt__(self, other):
        return self.img < other.img

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return 'Perm(id/%d)' % len(self.img)
        return 'Perm(%s)' % ' '.join('(%s)' % ' '.join(map(str, c))
                                     for c in cyc)


class PermGroup:
    """Group generated by perms on {0..degree-1}."""

    __slots__ = ('degree', 'gens', 'gens_ext', '_elements', '_words',
                 '_orbit_cache')

    def __init__(self, degree, gens):
        self.degree = degree
        seen = set()
        gs = []
        for g in sorted(gens, key=lambda p: p.img):
            if not g.is_identity() and g.img not in seen:
                seen.add(g.img)
                gs.append(g)
        self.gens = tuple(gs)
        ext = list(gs)
        for g in gs:
            gi = g.inv()
            if gi.img not in seen:
                seen.add(gi.img)
                ext.append(gi)
        self.gens_ext = tuple(ext)
        self._elements = None
        self._words = None
        self._orbit_cache = {}

    def elements(self):
        """All elements, BFS order from the identity. Cached."""
        if self._elements is None:
            ident = Perm.identity(self.degree)
            words = {ident.img: ()}
            queue = [ident]
            out = [ident]
            while queue:
                nxt = []
                for p in queue:
                    w = words[p.img]
                    for gi, g in enumerate(self.gens_ext):
                        q = p * g
                        if q.img not in words:
                            words[q.img] = w + (gi,)
                            nxt.append(q)
                            out.append(q)
                queue = nxt
            self._elements = out
            self._words = words
        return self._elements

    def order(self):
        return len(self.elements())

    def element_word(self, p):
        """Word over gens_ext composing to p (apply left to right)."""
        self.elements()
        return self._words[p.img]

    def word_to_perm(self, word):
        p = Perm.identity(self.degree)
        for gi in word:
            p = p * self.gens_ext[gi]
        return p

    def contains(self, p):
        self.elements()
        return p.img in self._words

    def __contains__(self, p):
        return self.contains(p)

    def orbit(self, x):
        orb, _ = self.orbit_with_words(x)
        return orb

    def orbit_with_words(self, x):
        """(orbit list in BFS order, {point: word}) with x^word = point."""
        if x in self._orbit_cache:
            return self._orbit_cache[x]
        words = {x: ()}
        queue = [x]
        orb = [x]
        while queue:
            nxt = []
            for y in queue:
                w = words[y]
                for gi, g in enumerate(self.gens_ext):
                    z = g(y)
                    if z not in words:
                        words[z] = w + (gi,)
                        nxt.append(z)
                        orb.append(z)
            queue = nxt
        self._orbit_cache[x] = (orb, words)
        return orb, words

    def orbits(self):
        """Orbits on points, each sorted, ordered by least element."""
        seen = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                orb = sorted(self.orbit(x))
                seen.update(orb)
                out.append(tuple(orb))
        return out

    def orbit_reps(self):
        return [o[0] for o in self.orbits()]

    def orbits_on_2subsets(self):
        """Orbits on unordered pairs: list of (rep, frozenset of pairs),
        rep the lexicographically least pair, ordered by rep."""
        seen = set()
        out = []
        n = self.degree
        for a in range(n):
            for b in range(a + 1, n):
                p0 = (a, b)
                if p0 in seen:
                    continue
                orb = {p0}
                queue = [p0]
                while queue:
                    pr = queue.pop()
                    for g in self.gens_ext:
                        q = g.on_pair(pr)
                        if q not in orb:
                            orb.add(q)
                            queue.append(q)
                seen.update(orb)
                out.append((p0, frozenset(orb)))
        return out

    def stabilizer(self, x):
        """Point stabilizer as a PermGroup (generated by all its
        elements; fine at the corpus scale)."""
        els = [g for g in self.elements() if g(x) == x]
        return PermGroup(self.degree, [g for g in els if not g.is_identity()])

    def central_involutions_of_stabilizer(self, x):
        """Elements t of Z(G_x) with t^2 = 1, identity included.
        Sorted by image tuple for determinism."""
        stab = [g for g in self.elements() if g(x) == x]
        out = []
        for t in stab:
            if (t * t).is_identity():
                if all((t * h).img == (h * t).img for h in stab):
                    out.append(t)
        out.sort(key=lambda p: p.img)
        return out

    def normalizer_in_sym(self, max_degree=12):
        """Normalizer of this group in Sym(degree), by brute force over
        the symmetric group. Returns None when degree > max_degree (the
        caller is expected to warn and skip dedup)."""
        n = self.degree
        if n > max_degree:
            return None
        self.elements()
        from itertools import permutations
        gens = self.gens
        if not gens:
            return PermGroup(n, [Perm(p) for p in permutations(range(n))
                                 if p != tuple(range(n))])
        found = []
        for imgs in permutations(range(n)):
            s = Perm(imgs)
            si = s.inv()
            ok = True
            for g in gens:
                if (si * g * s).img not in self._words:
                    ok = False
                    break
            if ok:
                found.append(s)
        return PermGroup(n, [p for p in found if not p.is_identity()])


class DihedralData:
    """Orbit data of D = <tau_a, tau_b> on the axis set."""

    __slots__ = ('a', 'b', 'orbit_a', 'orbit_b', 'xset', 'n_type',
                 'same_orbit', 'rho_order')

    def __init__(self, a, b, orbit_a, orbit_b, xset, n_type, same_orbit,
                 rho_order):
        self.a = a
        self.b = b
        self.orbit_a = orbit_a
        self.orbit_b = orbit_b
        self.xset = xset
        self.n_type = n_type
        self.same_orbit = same_orbit
        self.rho_order = rho_order

    def __repr__(self):
        return 'DihedralData(a=%d b=%d n=%d)' % (self.a, self.b, self.n_type)


def dihedral_data(tau_a, tau_b, a, b):
    """X_{a,b} = a^D cup b^D for D = <tau_a, tau_b>."""
    def close(x):
        orb = {x}
        queue = [x]
        while queue:
            y = queue.pop()
            for t in (tau_a, tau_b):
                z = t(y)
                if z not in orb:
                    orb.add(z)
                    queue.append(z)
        return tuple(sorted(orb))

    oa = close(a)
    ob = close(b)
    xset = tuple(sorted(set(oa) | set(ob)))
    rho = tau_a * tau_b
    return DihedralData(a, b, oa, ob, xset, len(xset), oa == ob,
                        rho.order())
