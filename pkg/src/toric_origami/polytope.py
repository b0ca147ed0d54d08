"""Delzant polytopes in H-representation and their face lattices.

A polytope is ``{x : <a_i, x> + c_i >= 0}`` with primitive integer inward
normals ``a_i`` and rational offsets ``c_i``. Vertices and faces are derived
data. Because the polytopes are simple, every face is identified with the set
of facets containing it (its *active set*); the whole polytope has the empty
active set.
"""

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations
from math import gcd

from .errors import DimensionError, NotAPolytopeError, PreconditionError, Report
from .exact_linalg import determinant, positively_spans, rank, solve_rational
from .polynomials import h_vector


class NormalizationWarning(UserWarning):
    """A non-primitive facet normal was divided by its gcd."""


@dataclass(frozen=True)
class Facet:
    normal: tuple
    offset: Fraction

    def value(self, x):
        return sum(a * xi for a, xi in zip(self.normal, x)) + self.offset

    def __str__(self):
        return f"<{self.normal}, x> + {self.offset} >= 0"


@dataclass(frozen=True)
class Face:
    active: frozenset
    dim: int
    vertices: frozenset


@dataclass(frozen=True)
class FaceLattice:
    dim: int
    faces: dict = field(hash=False)  # active set -> Face

    def of_dim(self, d):
        return sorted(
            (f for f in self.faces.values() if f.dim == d),
            key=lambda f: sorted(f.active),
        )

    def counts(self):
        """Number of faces of each dimension ``0..dim``."""
        out = [0] * (self.dim + 1)
        for f in self.faces.values():
            out[f.dim] += 1
        return tuple(out)

    def contains(self, big, small):
        """Whether face ``small`` lies in face ``big`` (both given as active sets)."""
        return frozenset(big) <= frozenset(small)

    def __contains__(self, active):
        return frozenset(active) in self.faces


@dataclass(frozen=True)
class DelzantPolytope:
    dim: int
    facets: tuple
    label: str = ""
    notes: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("polytope dimension must be positive")
        if not self.facets:
            raise NotAPolytopeError("empty facet list")
        canon, notes = [], list(self.notes)
        for i, fc in enumerate(self.facets):
            if not isinstance(fc, Facet):
                fc = Facet(*fc)
            normal = tuple(int(a) for a in fc.normal)
            if len(normal) != self.dim:
                raise DimensionError(
                    f"facet {i} normal {normal} does not have length {self.dim}")
            offset = Fraction(fc.offset)
            g = reduce(gcd, normal, 0)
            if g == 0:
                raise NotAPolytopeError(f"facet {i} has zero normal")
            if g != 1:
                msg = (f"{self.label or 'polytope'}: facet {i} normal {normal} "
                       f"divided by {g}")
                warnings.warn(msg, NormalizationWarning, stacklevel=3)
                notes.append(msg)
                normal = tuple(a // g for a in normal)
                offset = offset / g
            canon.append(Facet(normal, offset))
        object.__setattr__(self, "facets", tuple(canon))
        object.__setattr__(self, "notes", tuple(notes))

    @classmethod
    def from_inequalities(cls, normals, offsets, label=""):
        n = len(normals[0])
        return cls(n, tuple(Facet(tuple(a), Fraction(c))
                            for a, c in zip(normals, offsets)), label)

    @property
    def normals(self):
        return [f.normal for f in self.facets]

    @cached_property
    def _vertex_data(self):
        n = self.dim
        if not positively_spans(self.normals, n):
            raise NotAPolytopeError(f"{self.label or 'polytope'} is unbounded")
        found = {}
        for subset in combinations(range(len(self.facets)), n):
            a = [self.facets[i].normal for i in subset]
            b = [-self.facets[i].offset for i in subset]
            x = solve_rational(a, b)
            if x is None:
                continue
            x = tuple(x)
            if x in found:
                continue
            vals = [f.value(x) for f in self.facets]
            if all(v >= 0 for v in vals):
                found[x] = frozenset(i for i, v in enumerate(vals) if v == 0)
        if not found:
            raise NotAPolytopeError(f"{self.label or 'polytope'} is empty")
        pts = sorted(found)
        if _affine_rank(pts) < n:
            raise NotAPolytopeError(
                f"{self.label or 'polytope'} is not full-dimensional")
        return [(p, found[p]) for p in pts]

    @property
    def vertices(self):
        return [p for p, _ in self._vertex_data]

    @property
    def vertex_active_sets(self):
        return [s for _, s in self._vertex_data]

    @cached_property
    def _delzant_report(self):
        return _check_delzant(self)

    @cached_property
    def _lattice(self):
        return _face_lattice(self)

    def face_vertices(self, active):
        """Indices of vertices lying on every facet in ``active``."""
        active = frozenset(active)
        return frozenset(i for i, s in enumerate(self.vertex_active_sets)
                         if active <= s)

    def __str__(self):
        return self.label or f"polytope with {len(self.facets)} facets in R^{self.dim}"


def _affine_rank(points):
    if len(points) <= 1:
        return 0
    p0 = points[0]
    diffs = [[(a - b) for a, b in zip(p, p0)] for p in points[1:]]
    den = 1
    for row in diffs:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    return rank([[int(x * den) for x in row] for row in diffs])


def enumerate_vertices(p):
    """Vertices of ``p``, sorted lexicographically.

    Raises NotAPolytopeError for unbounded, empty or lower-dimensional input.
    """
    return p.vertices


def check_delzant(p):
    """Report every way in which ``p`` fails to be a Delzant polytope."""
    return p._delzant_report


def _check_delzant(p):
    rep = Report(f"polytope {p.label}" if p.label else "polytope", notes=list(p.notes))
    n = p.dim
    try:
        data = p._vertex_data
    except NotAPolytopeError as exc:
        rep.add("not-a-polytope", p.label or "polytope", str(exc))
        return rep
    for i, fc in enumerate(p.facets):
        if reduce(gcd, fc.normal, 0) != 1:
            rep.add("non-primitive", f"facet {i}", str(fc.normal))
        on = [x for x, s in data if i in s]
        if _affine_rank(on) < n - 1:
            rep.add("redundant-facet", f"facet {i}",
                    f"{fc} touches the polytope in dimension < {n - 1}")
    for k, (x, s) in enumerate(data):
        where = f"vertex {k} {_fmt_point(x)}"
        if len(s) != n:
            rep.add("not-simple", where, f"lies on {len(s)} facets {sorted(s)}")
            continue
        d = determinant([p.facets[i].normal for i in sorted(s)])
        if abs(d) != 1:
            rep.add("not-smooth", where,
                    f"|det| of normals of facets {sorted(s)} is {abs(d)}")
    return rep


def _fmt_point(x):
    return "(" + ", ".join(str(c) for c in x) + ")"


def face_lattice(p):
    """All faces of a Delzant polytope keyed by active facet set."""
    rep = check_delzant(p)
    if not rep.ok:
        raise PreconditionError(f"not a Delzant polytope:\n{rep}")
    return p._lattice


def _face_lattice(p):
    n = p.dim
    faces = {}
    for s in p.vertex_active_sets:
        assert len(s) == n, "simpleness"
        for k in range(n + 1):
            for sub in combinations(sorted(s), k):
                act = frozenset(sub)
                if act not in faces:
                    faces[act] = Face(act, n - k, p.face_vertices(act))
    return FaceLattice(n, faces)


def facet_h_vector(p, facet_index):
    """h-vector of facet ``facet_index`` viewed as an (n-1)-dimensional polytope."""
    if not 0 <= facet_index < len(p.facets):
        raise IndexError(f"facet index {facet_index} out of range")
    lat = face_lattice(p)
    n = p.dim
    # faces of the facet of dimension d, for d = n-2 down to 0
    counts = [0] * n
    for act, face in lat.faces.items():
        if facet_index in act:
            counts[face.dim] += 1
    f = tuple(counts[n - 2 - j] for j in range(n - 1))
    return h_vector(f, n - 1)
