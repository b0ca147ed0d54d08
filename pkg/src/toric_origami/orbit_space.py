"""Face structure of the glued orbit space of an origami template.

A *constituent* is a pair ``(v, S)``: the face of polytope ``v`` with active
facet set ``S``. Faces lying in a fold facet are dropped; the remaining ones
are merged across each fold, and the merged classes are the faces of the
orbit space. Each class remembers the multigraph of identifications that
produced it, and the class is acyclic exactly when that graph is a tree.
"""

from dataclasses import dataclass, field
from itertools import combinations

from scipy.cluster.hierarchy import DisjointSet

from .errors import PreconditionError, StructuralError
from .polynomials import binomial
from .template import check_coorientable, facet_partners, validate_template


@dataclass(frozen=True)
class FaceClass:
    id: int
    dim: int
    codim: int
    constituents: tuple  # sorted ((v, tuple(sorted(S))), ...)
    gluing_edges: tuple  # ((constituent_a, constituent_b, template_edge_id), ...)

    @property
    def cycle_rank(self):
        return len(self.gluing_edges) - len(self.constituents) + 1

    @property
    def acyclic(self):
        return self.cycle_rank == 0

    def key(self):
        return self.constituents[0]


@dataclass
class FacePoset:
    n: int
    classes: list
    # class id -> frozenset of ids of classes strictly containing it
    above: dict = field(repr=False)
    # constituent -> class id
    owner: dict = field(repr=False)

    @property
    def top(self):
        return self.classes[0]

    @property
    def proper(self):
        return [c for c in self.classes if c.codim > 0]

    def of_codim(self, k):
        return [c for c in self.classes if c.codim == k]

    def leq(self, a, b):
        """Whether class ``a`` is contained in class ``b``."""
        return a == b or b in self.above[a]

    def facets_containing(self, a):
        return sorted(b for b in self.above[a] if self.classes[b].codim == 1)

    def vertices_of(self, a):
        """Codimension-n classes contained in class ``a``."""
        return sorted(c.id for c in self.of_codim(self.n) if self.leq(c.id, a))

    def class_of(self, v, active):
        return self.owner.get((v, tuple(sorted(active))))


def build_face_classes(t, validate=True):
    """Glue the faces of the template polytopes into orbit-space face classes."""
    if validate:
        rep = validate_template(t)
        if not rep.ok:
            raise PreconditionError(f"invalid template:\n{rep}")
    if not check_coorientable(t):
        raise PreconditionError("template has a loop edge (not coorientable)")
    n = t.n
    lattices = [p._lattice for p in t.polytopes]
    folds = [t.fold_facets(v) for v in range(t.num_vertices)]

    constituents = []
    for v, lat in enumerate(lattices):
        for act in lat.faces:
            if not (act & folds[v]):
                constituents.append((v, tuple(sorted(act))))
    constituents.sort()
    ds = DisjointSet(constituents)
    glue = []
    for k, e in enumerate(t.edges):
        mapping, problems = facet_partners(t, e)
        if problems:
            raise StructuralError(f"edge {k}: {problems[0]}")
        lat1, lat2 = lattices[e.v1], lattices[e.v2]
        for act in lat1.faces:
            if e.f1 not in act:
                continue
            g1 = act - {e.f1}
            try:
                g2 = frozenset(mapping[i] for i in g1)
            except KeyError as exc:
                raise StructuralError(
                    f"edge {k}: facet {exc.args[0]} of polytope {e.v1} has no "
                    f"twin across the fold") from None
            if g2 | {e.f2} not in lat2.faces or g2 not in lat2.faces:
                raise StructuralError(
                    f"edge {k}: face {sorted(act)} of polytope {e.v1} has no "
                    f"counterpart in polytope {e.v2}")
            a = (e.v1, tuple(sorted(g1)))
            b = (e.v2, tuple(sorted(g2)))
            if a not in ds or b not in ds:
                raise StructuralError(
                    f"edge {k}: merge partner lies in another fold facet")
            ds.merge(a, b)
            glue.append((a, b, k))

    groups = {}
    for c in constituents:
        groups.setdefault(ds[c], []).append(c)
    members = sorted((sorted(g) for g in groups.values()),
                     key=lambda g: (len(g[0][1]), g[0]))
    owner = {}
    for cid, g in enumerate(members):
        for c in g:
            owner[c] = cid
    edges_of = {cid: [] for cid in range(len(members))}
    for a, b, k in glue:
        edges_of[owner[a]].append((a, b, k))
    classes = []
    for cid, g in enumerate(members):
        codims = {len(s) for _, s in g}
        if len(codims) != 1:
            raise StructuralError(f"class {cid} mixes face dimensions")
        codim = codims.pop()
        classes.append(FaceClass(cid, n - codim, codim, tuple(g),
                                 tuple(edges_of[cid])))
    if len([c for c in classes if c.codim == 0]) != 1:
        raise StructuralError("orbit space does not have exactly one top face")

    above = {}
    for c in classes:
        cand = None
        for v, s in c.constituents:
            up = set()
            for k in range(len(s)):
                for sub in combinations(s, k):
                    o = owner.get((v, sub))
                    if o is not None:
                        up.add(o)
            cand = up if cand is None else cand & up
        above[c.id] = frozenset(cand or ())
    return FacePoset(n, classes, above, owner)


def f_vector(fp):
    """``f_i`` = number of classes of dimension ``n - 1 - i``."""
    n = fp.n
    counts = [0] * n
    for c in fp.proper:
        counts[n - 1 - c.dim] += 1
    return tuple(counts)


@dataclass(frozen=True)
class AcyclicityReport:
    cycle_ranks: dict
    non_acyclic: tuple  # ((class id, codim, cycle rank), ...)
    r_min: int

    @property
    def all_acyclic(self):
        return self.r_min == 1


def acyclicity_report(fp):
    ranks = {c.id: c.cycle_rank for c in fp.proper}
    bad = tuple((c.id, c.codim, c.cycle_rank) for c in fp.proper
                if c.cycle_rank != 0)
    r_min = max((codim for _, codim, _ in bad), default=0) + 1
    return AcyclicityReport(ranks, bad, r_min)


def check_simplicial_poset(fp):
    """Raise StructuralError unless every interval below a proper class is Boolean.

    In the dual poset the interval under a codim-k face is Boolean iff the
    face lies in exactly ``C(k, j)`` classes of each codimension ``j``.
    """
    for c in fp.proper:
        counts = [0] * (c.codim + 1)
        for b in fp.above[c.id]:
            cb = fp.classes[b].codim
            if cb >= c.codim:
                raise StructuralError(
                    f"class {c.id} lies in class {b} of codimension {cb}")
            counts[cb] += 1
        counts[c.codim] += 1
        want = [binomial(c.codim, j) for j in range(c.codim + 1)]
        if counts != want:
            raise StructuralError(
                f"class {c.id} (codim {c.codim}) is contained in {counts} "
                f"classes by codimension, expected {want}")


@dataclass(frozen=True)
class BoundaryComponent:
    facets: tuple
    # for n = 2: vertices[i] joins facets[i] and facets[i + 1] (cyclically)
    vertices: tuple = ()


def boundary_components(fp):
    """Connected components of the boundary, as sets of facet classes.

    For n = 2 each component is a cyclic sequence starting at its lowest
    facet class and heading first to the lower-numbered neighbour.
    """
    facets = [c.id for c in fp.of_codim(1)]
    ds = DisjointSet(facets)
    ridge_facets = {}
    for r in (fp.of_codim(2) if fp.n >= 2 else []):
        fs = fp.facets_containing(r.id)
        ridge_facets[r.id] = fs
        for a, b in zip(fs, fs[1:]):
            ds.merge(a, b)
    comps = sorted(sorted(s) for s in ds.subsets())
    if fp.n != 2:
        return [BoundaryComponent(tuple(c)) for c in comps]

    # each vertex class joins exactly two facet classes
    incid = {f: [] for f in facets}
    for r, fs in ridge_facets.items():
        if len(fs) != 2 or fs[0] == fs[1]:
            raise StructuralError(f"vertex class {r} lies on facets {fs}")
        incid[fs[0]].append((fs[1], r))
        incid[fs[1]].append((fs[0], r))
    out = []
    for comp in comps:
        for f in comp:
            if len(incid[f]) not in (0, 2):
                raise StructuralError(
                    f"facet class {f} has {len(incid[f])} end points")
        start = comp[0]
        if not incid[start]:
            if len(comp) != 1:
                raise StructuralError("boundary component is not a cycle")
            out.append(BoundaryComponent((start,), ()))
            continue
        seq_f, seq_v = [start], []
        nxt, via = min(incid[start])
        prev_vertex = None
        cur = start
        while True:
            seq_v.append(via)
            prev_vertex = via
            if nxt == start:
                break
            seq_f.append(nxt)
            cur = nxt
            (a, ra), (b, rb) = incid[cur]
            nxt, via = (b, rb) if ra == prev_vertex else (a, ra)
            if len(seq_f) > len(comp):
                raise StructuralError("boundary walk did not close")
        if sorted(seq_f) != comp:
            raise StructuralError("boundary component is not a simple cycle")
        out.append(BoundaryComponent(tuple(seq_f), tuple(seq_v)))
    return out


@dataclass(frozen=True)
class OrderComplex:
    vertices: tuple
    simplices: tuple  # all chains, each a tuple sorted by class id

    @property
    def dim(self):
        return max((len(s) for s in self.simplices), default=0) - 1

    def count_by_dim(self):
        out = [0] * (self.dim + 1)
        for s in self.simplices:
            out[len(s) - 1] += 1
        return tuple(out)


def order_complex(fp):
    """Chains of proper face classes: the barycentric subdivision of the dual poset."""
    check_simplicial_poset(fp)
    proper = [c.id for c in fp.proper]
    up = {a: sorted(b for b in fp.above[a] if fp.classes[b].codim > 0)
          for a in proper}
    chains = []

    def extend(chain):
        chains.append(tuple(sorted(chain)))
        for b in up[chain[-1]]:
            extend(chain + [b])

    for a in proper:
        extend([a])
    chains.sort(key=lambda s: (len(s), s))
    return OrderComplex(tuple(proper), tuple(chains))
