"""Z2-graded fusion laws and their useful multiplication rules.

A law lists eigenvalues (1 and 0 always present), a symmetric star table
on eigenvalues, and a Z2 grading with a singleton odd part. Rules derived
here drive the eigenspace saturation: a rule I * J = K says products of
I-eigenvectors by J-eigenvectors land in the K-eigenspace, and is kept
only when K is strictly smaller than the full target part and neither
side can be enlarged without growing K.
"""

from itertools import combinations

from .linalg import rat


class FusionLaw:
    __slots__ = ('values', 'table', 'plus', 'minus', 'name')

    def __init__(self, values, table, plus, minus, name='custom'):
        self.values = tuple(values)
        self.plus = frozenset(plus)
        self.minus = frozenset(minus)
        self.name = name
        t = {}
        for (a, b), k in table.items():
            t[(a, b)] = frozenset(k)
            t[(b, a)] = frozenset(k)
        self.table = t
        self._validate()

    def _validate(self):
        vals = set(self.values)
        if len(self.values) != len(vals):
            raise ValueError('repeated eigenvalues')
        one, zero = rat(1), rat(0)
        if one not in vals or zero not in vals:
            raise ValueError('law must contain eigenvalues 1 and 0')
        if self.plus | self.minus != vals or (self.plus & self.minus):
            raise ValueError('grading must partition the eigenvalues')
        if len(self.minus) != 1:
            raise ValueError('odd part must be a single eigenvalue')
        if one not in self.plus:
            raise ValueError('1 must be even')
        for a in vals:
            for b in vals:
                k = self.table.get((a, b))
                if k is None:
                    raise ValueError('star table incomplete at %s * %s'
                                     % (a, b))
                if not k <= vals:
                    raise ValueError('star table leaves the eigenvalue set')
                # Z2 grading of the table
                sa = a in self.minus
                sb = b in self.minus
                target = self.minus if (sa != sb) else self.plus
                if not k <= target:
                    raise ValueError('star table breaks the grading at '
                                     '%s * %s' % (a, b))
        if self.table[(one, one)] - {one}:
            raise ValueError('1 * 1 must be contained in {1}')

    def star(self, a, b):
        return self.table[(a, b)]

    def part_of(self, value):
        return self.minus if value in self.minus else self.plus

    def part(self, sign):
        # sign: +1 even, -1 odd
        return self.plus if sign > 0 else self.minus

    def __eq__(self, other):
        return (isinstance(other, FusionLaw)
                and set(self.values) == set(other.values)
                and self.plus == other.plus and self.minus == other.minus
                and self.table == other.table)

    def __hash__(self):
        return hash((frozenset(self.values), self.plus, self.minus))

    def __repr__(self):
        return 'FusionLaw(%s)' % self.name


def ising_law(alpha, beta):
    """The Ising-shaped law with eigenvalues 1, 0, alpha, beta; beta odd."""
    one, zero = rat(1), rat(0)
    al, be = rat(alpha), rat(beta)
    if len({one, zero, al, be}) != 4:
        raise ValueError('eigenvalues 1, 0, alpha, beta must be distinct')
    table = {
        (one, one): {one},
        (one, zero): set(),
        (one, al): {al},
        (one, be): {be},
        (zero, zero): {zero},
        (zero, al): {al},
        (zero, be): {be},
        (al, al): {one, zero},
        (al, be): {be},
        (be, be): {one, zero, al},
    }
    name = 'ising(%s,%s)' % (al, be)
    return FusionLaw((one, zero, al, be), table, {one, zero, al}, {be},
                     name)


def monster_law():
    law = ising_law(rat(1, 4), rat(1, 32))
    law.name = 'monster'
    return law


def extended_star(law, i_set, j_set):
    """Union of the star table over a pair of eigenvalue sets."""
    out = set()
    for a in i_set:
        for b in j_set:
            out |= law.star(a, b)
    return frozenset(out)


def pure_subsets(law, part):
    """Nonempty subsets of one part, canonical order: by size then by
    sorted eigenvalue list."""
    vals = sorted(part, key=lambda v: (v.denominator, v.numerator))
    out = []
    for k in range(1, len(vals) + 1):
        for c in combinations(vals, k):
            out.append(frozenset(c))
    return out


class UsefulRule:
    __slots__ = ('i_set', 'j_set', 'k_set')

    def __init__(self, i_set, j_set, k_set):
        self.i_set = frozenset(i_set)
        self.j_set = frozenset(j_set)
        self.k_set = frozenset(k_set)

    def key(self):
        def skey(s):
            return tuple(sorted((str(v) for v in s)))
        a, b = skey(self.i_set), skey(self.j_set)
        if b < a:
            a, b = b, a
        return (a, b, skey(self.k_set))

    def __eq__(self, other):
        return isinstance(other, UsefulRule) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        def show(s):
            return '{%s}' % ','.join(sorted((str(v) for v in s)))
        return '%s * %s -> %s' % (show(self.i_set), show(self.j_set),
                                  show(self.k_set))


def useful_rules(law):
    """All maximal star rules that constrain products.

    I * J = K is useful when K is a proper subset of the full target part
    and neither I nor J can be replaced by a strict pure superset without
    changing K. Unordered in (I, J)."""
    parts = [law.plus, law.minus]
    rules = {}
    for fs in parts:
        subs_i = pure_subsets(law, fs)
        for ft in parts:
            subs_j = pure_subsets(law, ft)
            # Z2: even*even = odd*odd = even, mixed = odd
            if (fs == law.minus) == (ft == law.minus):
                target = law.plus
            else:
                target = law.minus
            for i_set in subs_i:
                for j_set in subs_j:
                    k = extended_star(law, i_set, j_set)
                    if not (k < target):
                        continue
                    maximal = True
                    for i2 in subs_i:
                        if i_set < i2 and \
                                extended_star(law, i2, j_set) == k:
                            maximal = False
                            break
                    if maximal:
                        for j2 in subs_j:
                            if j_set < j2 and \
                                    extended_star(law, i_set, j2) == k:
                                maximal = False
                                break
                    if maximal:
                        r = UsefulRule(i_set, j_set, k)
                        rules[r.key()] = r
    return sorted(rules.values(), key=lambda r: r.key())


def grade_split(law, values):
    """Split an eigenvalue set by the grading: (even part, odd part)."""
    vs = frozenset(values)
    return vs & law.plus, vs & law.minus
