"""tau-maps, the pair-orbit graph with domination, and shape enumeration.

A tau-map assigns to each point an involution (or the identity) that is
central in the point stabilizer, equivariantly across orbits. It is
admissible when every pair of points generates a dihedral action matching
one of the nine catalog algebras. Pair orbits form a directed graph whose
edges record domination (both points of one pair inside the closure
X_{a,b} of another); a shape is a choice of catalog algebra per vertex
consistent with domination, one free choice per weakly connected
component.
"""

import itertools

from .catalog import contained_type
from .perms import PermGroup, dihedral_data


# candidate catalog types per n_type of a pair orbit
TYPES_BY_N = {2: ('2A', '2B'), 3: ('3A', '3C'), 4: ('4A', '4B'),
              5: ('5A',), 6: ('6A',)}


class TauMap:
    """Point -> involution assignment; taus is a tuple indexed by point."""

    __slots__ = ('group', 'taus')

    def __init__(self, group, taus):
        self.group = group
        if isinstance(taus, dict):
            taus = [taus[x] for x in range(group.degree)]
        self.taus = tuple(taus)

    def __getitem__(self, x):
        return self.taus[x]

    def key(self):
        return tuple(t.img for t in self.taus)

    def conj(self, n):
        """tau^n: x -> tau_{x^{n^-1}} conjugated by n."""
        ninv = n.inv()
        return TauMap(self.group,
                      [self.taus[ninv(x)].conj(n)
                       for x in range(self.group.degree)])

    def miyamoto_group(self):
        return PermGroup(self.group.degree, list(self.taus))

    def __eq__(self, other):
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return 'TauMap(%s)' % (list(self.taus),)


def validate_tau(group, tau, check_pairs=True):
    """None when admissible, else a string naming the violated condition
    with a witness."""
    deg = group.degree
    if len(tau.taus) != deg:
        return 'tau map has %d entries for degree %d' % (len(tau.taus),
                                                         deg)
    for x in range(deg):
        t = tau[x]
        if not (t * t).is_identity():
            return 'tau_%d is not an involution' % x
        if t(x) != x:
            return 'tau_%d does not fix %d' % (x, x)
        if t not in group:
            return 'tau_%d lies outside the group' % x
    for x in range(deg):
        st = group.stabilizer(x)
        for s in st.gens:
            if tau[x] * s != s * tau[x]:
                return 'tau_%d not central in the stabilizer of %d' % (x,
                                                                       x)
    for g in group.gens:
        for x in range(deg):
            if tau[x].conj(g) != tau[g(x)]:
                return 'tau not equivariant at point %d, generator %s' \
                    % (x, g)
    if not check_pairs:
        return None
    for (a, b), _ in group.orbits_on_2subsets():
        d = dihedral_data(tau[a], tau[b], a, b)
        ka, kb = len(d.orbit_a), len(d.orbit_b)
        if ka != kb:
            return 'pair (%d,%d): unequal orbit sizes %d, %d' % (a, b, ka,
                                                                 kb)
        if d.same_orbit and ka not in (1, 3, 5):
            return 'pair (%d,%d): same-orbit size %d not 1, 3 or 5' \
                % (a, b, ka)
        if not d.same_orbit and ka not in (1, 2, 3):
            return 'pair (%d,%d): split-orbit size %d not 1, 2 or 3' \
                % (a, b, ka)
        if d.n_type not in TYPES_BY_N:
            return 'pair (%d,%d): no catalog algebra on %d points' \
                % (a, b, d.n_type)
    return None


def enumerate_tau_maps(group, dedup='N', full=True):
    """All admissible tau-maps, one per normalizer class when dedup='N'
    and the normalizer is computable. full=True keeps only maps whose
    images generate the whole group, i.e. the group really is the
    Miyamoto group of any algebra built on the map; full=False keeps
    every admissible map."""
    reps = group.orbit_reps()
    rep_candidates = [group.central_involutions_of_stabilizer(r)
                      for r in reps]
    orbit_words = [group.orbit_with_words(r)[1] for r in reps]
    out = []
    for combo in itertools.product(*rep_candidates):
        taus = [None] * group.degree
        for r_i, t in enumerate(combo):
            for point, word in orbit_words[r_i].items():
                w = group.word_to_perm(word)
                taus[point] = t.conj(w)
        tm = TauMap(group, taus)
        if full and tm.miyamoto_group().order() != group.order():
            continue
        if validate_tau(group, tm) is None:
            out.append(tm)
    if dedup == 'N' and out:
        norm = group.normalizer_in_sym()
        if norm is not None:
            nelems = norm.elements()
            seen = {}
            for tm in out:
                canon = min(tm.conj(n).key() for n in nelems)
                if canon not in seen:
                    seen[canon] = tm
            out = list(seen.values())
    return out


def tau_stabilizer_in_normalizer(group, tau):
    """K = the normalizer elements fixing tau; None when the normalizer
    is out of reach."""
    norm = group.normalizer_in_sym()
    if norm is None:
        return None
    key = tau.key()
    return [n for n in norm.elements() if tau.conj(n).key() == key]


class ShapeVertex:
    __slots__ = ('index', 'rep', 'orbit', 'n_type', 'data')

    def __init__(self, index, rep, orbit, n_type, data):
        self.index = index
        self.rep = rep
        self.orbit = orbit
        self.n_type = n_type
        self.data = data

    def __repr__(self):
        return 'ShapeVertex(%d, rep=%s, n=%d)' % (self.index, self.rep,
                                                  self.n_type)


class ShapeGraph:
    __slots__ = ('group', 'tau', 'vertices', 'vertex_of', 'edges',
                 'components')

    def __init__(self, group, tau, vertices, vertex_of, edges,
                 components):
        self.group = group
        self.tau = tau
        self.vertices = vertices
        self.vertex_of = vertex_of     # sorted pair -> vertex index
        self.edges = edges             # {u: set of v}, u dominates v
        self.components = components   # list of sorted vertex-index lists

    def component_of(self, v):
        for comp in self.components:
            if v in comp:
                return comp
        raise KeyError(v)


def shape_graph(group, tau):
    """Pair-orbit graph with domination edges for an admissible tau."""
    vertices = []
    vertex_of = {}
    for (a, b), orbit in group.orbits_on_2subsets():
        d = dihedral_data(tau[a], tau[b], a, b)
        v = ShapeVertex(len(vertices), (a, b), orbit, d.n_type, d)
        for pair in orbit:
            vertex_of[pair] = v.index
        vertices.append(v)
    edges = {v.index: set() for v in vertices}
    for v in vertices:
        xs = sorted(v.data.xset)
        for c, d in itertools.combinations(xs, 2):
            w = vertex_of[(c, d)]
            if w != v.index:
                edges[v.index].add(w)
    # weakly connected components
    undirected = {v.index: set() for v in vertices}
    for u, outs in edges.items():
        for w in outs:
            undirected[u].add(w)
            undirected[w].add(u)
    seen = set()
    components = []
    for v in vertices:
        if v.index in seen:
            continue
        comp = []
        stack = [v.index]
        seen.add(v.index)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in undirected[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        components.append(sorted(comp))
    components.sort()
    return ShapeGraph(group, tau, vertices, vertex_of, edges, components)


class Shape:
    __slots__ = ('graph', 'choice', 'label', 'free_vertices')

    def __init__(self, graph, choice, label, free_vertices):
        self.graph = graph
        self.choice = choice            # {vertex index: type name}
        self.label = label
        self.free_vertices = free_vertices

    def key(self):
        return tuple(self.choice[v.index] for v in self.graph.vertices)

    def __repr__(self):
        return 'Shape(%s)' % self.label


def _component_assignments(graph, comp):
    """The determining vertex of a component and every consistent
    {vertex: type} map on it."""
    det = min(comp, key=lambda v: (-graph.vertices[v].n_type,
                                   graph.vertices[v].rep))
    results = []

    def consistent(t, w, assign):
        # type t at w against already-assigned dominated neighbours
        for z in graph.edges[w]:
            if z in assign:
                try:
                    if contained_type(t, graph.vertices[z].n_type) != \
                            assign[z]:
                        return False
                except KeyError:
                    return False
        return True

    def extend(assign):
        assign = dict(assign)
        while True:
            progress = False
            for u in comp:
                if u not in assign:
                    continue
                for w in graph.edges[u]:
                    try:
                        req = contained_type(assign[u],
                                             graph.vertices[w].n_type)
                    except KeyError:
                        return
                    if w in assign:
                        if assign[w] != req:
                            return
                    else:
                        assign[w] = req
                        progress = True
            for w in comp:
                if w in assign:
                    continue
                cands = [t for t in TYPES_BY_N[graph.vertices[w].n_type]
                         if consistent(t, w, assign)]
                if not cands:
                    return
                if len(cands) == 1:
                    assign[w] = cands[0]
                    progress = True
            if not progress:
                break
        rest = [v for v in comp if v not in assign]
        if not rest:
            results.append(assign)
            return
        v = min(rest, key=lambda u: (-graph.vertices[u].n_type,
                                     graph.vertices[u].rep))
        for t in TYPES_BY_N[graph.vertices[v].n_type]:
            if consistent(t, v, assign):
                a2 = dict(assign)
                a2[v] = t
                extend(a2)

    for t in TYPES_BY_N[graph.vertices[det].n_type]:
        extend({det: t})
    uniq = {}
    for a in results:
        uniq[tuple(sorted(a.items()))] = a
    return det, list(uniq.values())


def enumerate_shapes(graph, dedup=None):
    """All domination-consistent shapes; dedup is an optional iterable of
    normalizer elements fixing tau (K) for quotienting. Labels show one
    catalog name per free component; with nothing free, one name per
    vertex on 4 or more points instead (the maximal subalgebras), so a
    fully forced shape still gets a non-empty label. Largest n_type
    first."""
    per_comp = []
    for comp in graph.components:
        det, assigns = _component_assignments(graph, comp)
        per_comp.append((comp, det, assigns))
    if any(not assigns for _, _, assigns in per_comp):
        return []
    free = [i for i, (_, _, assigns) in enumerate(per_comp)
            if len(assigns) > 1]
    if free:
        shown = [per_comp[ci][1] for ci in free]
    else:
        shown = [v.index for v in graph.vertices if v.n_type >= 4]
        if not shown:
            shown = [det for _, det, _ in per_comp]
    shapes = []
    for pick in itertools.product(*[range(len(a)) for _, _, a in
                                    per_comp]):
        choice = {}
        for (comp, det, assigns), idx in zip(per_comp, pick):
            choice.update(assigns[idx])
        letters = []
        for vi in shown:
            v = graph.vertices[vi]
            letters.append((-v.n_type, v.rep, choice[vi]))
        letters.sort()
        label = ''.join(t for _, _, t in letters)
        free_vertices = tuple(per_comp[ci][1] for ci in free)
        shapes.append(Shape(graph, choice, label, free_vertices))
    if dedup:
        shapes = _dedup_shapes(graph, shapes, dedup)
    return shapes


def _vertex_image(graph, v, n):
    a, b = graph.vertices[v].rep
    ia, ib = n(a), n(b)
    return graph.vertex_of[(min(ia, ib), max(ia, ib))]


def _dedup_shapes(graph, shapes, kelems):
    kept = []
    seen = set()
    for s in sorted(shapes, key=lambda s: s.key()):
        if s.key() in seen:
            continue
        orbit = set()
        for n in kelems:
            mapped = {}
            for v in range(len(graph.vertices)):
                mapped[_vertex_image(graph, v, n)] = s.choice[v]
            orbit.add(tuple(mapped[v]
                            for v in range(len(graph.vertices))))
        seen |= orbit
        kept.append(s)
    return kept
