"""Finished-algebra container: a total commutative product on Q^dim."""

from .fusion import monster_law
from .linalg import rat

_Q0 = rat(0)
_Q1 = rat(1)


class Algebra:
    """Commutative algebra over Q with marked generating idempotents.

    mu maps (i, j) with i <= j to the product of basis vectors i and j as
    a dense coefficient tuple. axes maps each marked point to its
    coordinate vector (a tuple). In the canonical basis produced by the
    engine the axes are the leading unit vectors in point order.
    """

    __slots__ = ('dim', 'mu', 'axes', 'law')

    def __init__(self, dim, mu, axes, law=None):
        self.dim = dim
        self.mu = mu
        self.axes = axes
        self.law = law if law is not None else monster_law()

    def product(self, i, j):
        return self.mu[(i, j) if i <= j else (j, i)]

    def mult(self, u, v):
        out = [_Q0] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for k, w in enumerate(self.product(i, j)):
                    if w:
                        out[k] += c * w
        return out

    def ad(self, u):
        """Rows of left multiplication by u (u acting on row vectors)."""
        rows = []
        for i in range(self.dim):
            e = [_Q0] * self.dim
            e[i] = _Q1
            rows.append(self.mult(e, u))
        return rows

    def __repr__(self):
        return 'Algebra(dim=%d, axes=%d)' % (self.dim, len(self.axes))


def from_catalog(spec):
    """View a catalogued dihedral algebra as an Algebra; every listed
    basis axis becomes a marked point keyed by its basis index."""
    axes = {}
    for i in spec.axes:
        v = [_Q0] * spec.dim
        v[i] = _Q1
        axes[i] = tuple(v)
    mu = {k: tuple(row) for k, row in spec.mu.items()}
    return Algebra(spec.dim, mu, axes, spec.law)
