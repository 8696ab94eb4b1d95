"""Exact construction of universal axial algebras for Z2-graded fusion laws.

Point a finite permutation group at a set of axes, pick a Miyamoto tau-map
and a shape (one Norton-Sakuma type per 2-generated subalgebra orbit), and
the engine builds the universal algebra by expanding a partial algebra,
saturating eigenspaces, and reducing by discovered relations until the
multiplication closes or a cap is hit.
"""

__version__ = "0.1.0"
