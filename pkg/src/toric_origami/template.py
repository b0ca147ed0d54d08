"""Origami templates: a multigraph of Delzant polytopes glued along fold facets.

Graph vertices carry polytopes; each edge names one facet on each endpoint
polytope (the fold facet). Edge ids are positions in ``OrigamiTemplate.edges``.
"""

from collections import deque
from dataclasses import dataclass, field

from scipy.cluster.hierarchy import DisjointSet

from .errors import PreconditionError, Report
from .polytope import check_delzant, face_lattice, facet_h_vector


@dataclass(frozen=True)
class FoldEdge:
    v1: int
    f1: int
    v2: int
    f2: int

    @property
    def ends(self):
        return (self.v1, self.f1), (self.v2, self.f2)

    @property
    def is_loop(self):
        return self.v1 == self.v2


@dataclass(frozen=True)
class OrigamiTemplate:
    n: int
    polytopes: tuple
    edges: tuple = ()
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "polytopes", tuple(self.polytopes))
        object.__setattr__(self, "edges", tuple(
            e if isinstance(e, FoldEdge) else FoldEdge(*e) for e in self.edges))

    @property
    def num_vertices(self):
        return len(self.polytopes)

    def incident(self, v):
        """``(edge_id, facet_index)`` for every edge end at graph vertex ``v``."""
        out = []
        for k, e in enumerate(self.edges):
            if e.v1 == v:
                out.append((k, e.f1))
            if e.v2 == v:
                out.append((k, e.f2))
        return out

    def fold_facets(self, v):
        return {f for _, f in self.incident(v)}

    def without_edge(self, edge_id):
        edges = self.edges[:edge_id] + self.edges[edge_id + 1:]
        return OrigamiTemplate(self.n, self.polytopes, edges, self.label)


@dataclass(frozen=True)
class CutResult:
    template: OrigamiTemplate
    edge: FoldEdge
    folded_facet_h: tuple
    was_bridge: bool = field(default=False)


def _components(num_vertices, edges):
    ds = DisjointSet(range(num_vertices))
    for e in edges:
        if 0 <= e.v1 < num_vertices and 0 <= e.v2 < num_vertices:
            ds.merge(e.v1, e.v2)
    return ds


def is_connected(t):
    if t.num_vertices == 0:
        return False
    return _components(t.num_vertices, t.edges).n_subsets == 1


def graph_cycle_rank(t):
    """First Betti number ``|E| - |V| + 1`` of the (connected) template graph."""
    if not is_connected(t):
        raise PreconditionError("template graph is not connected")
    return len(t.edges) - t.num_vertices + 1


def bridges(t):
    """Ids of edges whose removal increases the number of components."""
    base = _components(t.num_vertices, t.edges).n_subsets
    out = []
    for k in range(len(t.edges)):
        rest = t.edges[:k] + t.edges[k + 1:]
        if _components(t.num_vertices, rest).n_subsets > base:
            out.append(k)
    return out


def non_bridges(t):
    b = set(bridges(t))
    return [k for k in range(len(t.edges)) if k not in b]


def check_coorientable(t):
    return not any(e.is_loop for e in t.edges)


def orientation_signs(t):
    """A proper 2-colouring of the template graph as +1/-1, or None.

    Vertex 0 of each component gets +1. Polytopes of opposite sign lie on
    opposite sheets of a fold, so the sign is the orientation of the
    polytope relative to the ambient orientation of R^n.
    """
    sign = [0] * t.num_vertices
    adj = [[] for _ in range(t.num_vertices)]
    for e in t.edges:
        adj[e.v1].append(e.v2)
        adj[e.v2].append(e.v1)
    for root in range(t.num_vertices):
        if sign[root]:
            continue
        sign[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if sign[w] == 0:
                    sign[w] = -sign[v]
                    queue.append(w)
                elif sign[w] == sign[v]:
                    return None
    return sign


def check_orientable(t):
    """Heuristic criterion: coorientable and the graph has no odd cycle."""
    return check_coorientable(t) and orientation_signs(t) is not None


def validate_template(t):
    """Check the origami template axioms; returns a Report, never raises."""
    rep = Report(f"template {t.label}" if t.label else "template")
    if t.n < 1:
        rep.add("dimension", "template", f"n = {t.n}")
        return rep
    if t.num_vertices == 0:
        rep.add("empty", "template", "no polytopes")
        return rep
    good = set()
    for v, p in enumerate(t.polytopes):
        if p.dim != t.n:
            rep.add("dimension", f"polytope {v}", f"dim {p.dim} != n = {t.n}")
            continue
        sub = check_delzant(p)
        rep.extend(sub, prefix=f"polytope {v}: ")
        if sub.ok:
            good.add(v)
    for k, e in enumerate(t.edges):
        where = f"edge {k}"
        bad_end = False
        for v, f in e.ends:
            if not 0 <= v < t.num_vertices:
                rep.add("bad-index", where, f"vertex {v} does not exist")
                bad_end = True
            elif not 0 <= f < len(t.polytopes[v].facets):
                rep.add("bad-index", where, f"polytope {v} has no facet {f}")
                bad_end = True
        if bad_end or e.v1 not in good or e.v2 not in good:
            continue
        if e.is_loop and e.f1 != e.f2:
            rep.add("loop-facets", where,
                    "a loop must name the same facet at both ends")
            continue
        _check_fold(t, k, e, rep)
    for v in range(t.num_vertices):
        inc = t.incident(v)
        if v not in good:
            continue
        p = t.polytopes[v]
        seen = {}
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                (ka, fa), (kb, fb) = inc[a], inc[b]
                if ka == kb:
                    continue  # both ends of one loop edge
                if fa == fb or p.face_vertices({fa, fb}):
                    pair = (ka, kb)
                    if pair not in seen:
                        seen[pair] = True
                        rep.add("folds-not-disjoint", f"vertex {v}",
                                f"fold facets {fa} (edge {ka}) and {fb} "
                                f"(edge {kb}) intersect")
    if not is_connected(t):
        rep.add("disconnected", "template graph", "graph is not connected")
    if not check_coorientable(t):
        rep.notes.append("template has a loop edge: not coorientable")
    return rep


def facet_partners(t, edge):
    """Map facets of the first polytope meeting the fold to their twins.

    Twins are facets of the second polytope with the same supporting
    hyperplane; only facets meeting the fold facet are mapped. Returns
    ``(mapping, problems)``.
    """
    p1, p2 = t.polytopes[edge.v1], t.polytopes[edge.v2]
    by_plane = {}
    for j, fc in enumerate(p2.facets):
        by_plane.setdefault((fc.normal, fc.offset), j)
    mapping, problems = {}, []
    for i, fc in enumerate(p1.facets):
        if i == edge.f1 or not p1.face_vertices({i, edge.f1}):
            continue
        j = by_plane.get((fc.normal, fc.offset))
        if j is None:
            problems.append(f"facet {i} of polytope {edge.v1} meets the fold "
                            f"but has no twin in polytope {edge.v2}")
        else:
            mapping[i] = j
    return mapping, problems


def _trace(p, i, fold):
    return {p.vertices[k] for k in p.face_vertices({i, fold})}


def _check_fold(t, k, e, rep):
    where = f"edge {k}"
    p1, p2 = t.polytopes[e.v1], t.polytopes[e.v2]
    a, b = p1.facets[e.f1], p2.facets[e.f2]
    if (a.normal, a.offset) != (b.normal, b.offset):
        rep.add("fold-mismatch", where,
                f"facet {e.f1} of polytope {e.v1} ({a}) and facet {e.f2} of "
                f"polytope {e.v2} ({b}) have different supporting hyperplanes")
        return
    if _trace(p1, e.f1, e.f1) != _trace(p2, e.f2, e.f2):
        rep.add("fold-mismatch", where, "fold facets have different vertex sets")
        return
    for (x, fx, px), (y, fy, py) in (((e.v1, e.f1, p1), (e.v2, e.f2, p2)),
                                     ((e.v2, e.f2, p2), (e.v1, e.f1, p1))):
        mapping, problems = facet_partners(
            t, FoldEdge(x, fx, y, fy))
        for msg in problems:
            rep.add("not-coincident-near-fold", where, msg)
        for i, j in mapping.items():
            if _trace(px, i, fx) != _trace(py, j, fy):
                rep.add("not-coincident-near-fold", where,
                        f"facet {i} of polytope {x} and facet {j} of polytope "
                        f"{y} meet the fold differently")


def cut(t, edge_id, allow_bridge=False):
    """Remove a fold: delete the edge, demoting its facet to an ordinary facet.

    Unless ``allow_bridge`` is set, the edge must lie on a cycle so the
    resulting template stays connected.
    """
    if not 0 <= edge_id < len(t.edges):
        raise IndexError(f"edge {edge_id} does not exist")
    is_bridge = edge_id in bridges(t)
    if is_bridge and not allow_bridge:
        raise PreconditionError(
            f"edge {edge_id} is a bridge; cutting it disconnects the template")
    e = t.edges[edge_id]
    hf = facet_h_vector(t.polytopes[e.v1], e.f1)
    return CutResult(t.without_edge(edge_id), e, hf, is_bridge)


def cycle_edge_basis(t):
    """Edges outside the spanning tree grown by lowest edge id first.

    These are the folds whose duals freely generate degree-1 cohomology;
    all their mutual products vanish.
    """
    if not is_connected(t):
        raise PreconditionError("template graph is not connected")
    ds = DisjointSet(range(t.num_vertices))
    out = []
    for k, e in enumerate(t.edges):
        if not ds.merge(e.v1, e.v2):
            out.append(k)
    return out


def lowest_non_bridge(t):
    nb = non_bridges(t)
    return nb[0] if nb else None


def fold_lattices(t):
    """Face lattice of every polytope (validates each as a side effect)."""
    return [face_lattice(p) for p in t.polytopes]
