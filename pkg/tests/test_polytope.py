import warnings
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog
from scipy.spatial import HalfspaceIntersection

from toric_origami.families import HEXAGON, OCTAGON, box, hirzebruch, polygon
from toric_origami.errors import NotAPolytopeError, PreconditionError
from toric_origami.polytope import (DelzantPolytope, Facet, NormalizationWarning,
                                    check_delzant, enumerate_vertices, face_lattice,
                                    facet_h_vector)


def kinds(rep):
    return sorted({v.kind for v in rep.violations})


def test_hexagon_vertices():
    p = polygon(HEXAGON)
    assert enumerate_vertices(p) == sorted(
        [(0, 1), (1, 0), (3, 0), (3, 2), (2, 3), (0, 3)])
    assert check_delzant(p).ok


def test_triangle_with_fat_corner_is_not_smooth():
    p = polygon((((1, 0), 0), ((0, 1), 0), ((-1, -2), 2)))
    rep = check_delzant(p)
    assert kinds(rep) == ["not-smooth"]
    (v,) = rep.violations
    assert "(0, 1)" in v.where and "2" in v.detail


def test_standard_simplex_is_delzant():
    p = polygon((((1, 0), 0), ((0, 1), 0), ((-1, -1), 1)))
    assert check_delzant(p).ok
    assert face_lattice(p).counts() == (3, 3, 1)


def test_non_primitive_normal_is_normalised_with_note():
    with pytest.warns(NormalizationWarning):
        p = DelzantPolytope(2, (Facet((2, 0), 0), Facet((0, 1), 0),
                                Facet((-1, 0), 1), Facet((0, -1), 1)), "sq")
    assert p.facets[0].normal == (1, 0)
    assert p.notes and "divided by 2" in p.notes[0]
    assert check_delzant(p).ok


def test_non_primitive_offset_scaled_exactly():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NormalizationWarning)
        p = DelzantPolytope(1, (Facet((2,), 1), Facet((-1,), 1)))
    assert p.facets[0].offset == Fraction(1, 2)
    assert enumerate_vertices(p) == [(Fraction(-1, 2),), (1,)]


def test_redundant_facet_reported():
    p = polygon((((1, 0), 0), ((0, 1), 0), ((-1, 0), 1), ((0, -1), 1), ((-1, -1), 5)))
    assert kinds(check_delzant(p)) == ["redundant-facet"]
    with pytest.raises(PreconditionError):
        face_lattice(p)


def test_square_pyramid_apex_is_not_simple():
    rows = [((0, 0, 1), 0), ((1, 0, -1), 1), ((-1, 0, -1), 1), ((0, 1, -1), 1), ((0, -1, -1), 1)]
    p = DelzantPolytope.from_inequalities([r[0] for r in rows], [r[1] for r in rows])
    assert "not-simple" in kinds(check_delzant(p))


@pytest.mark.parametrize("rows, what", [
    ((((1, 0), 0), ((0, 1), 0)), "unbounded"),
    ((((1, 0), 0), ((-1, 0), -1), ((0, 1), 0), ((0, -1), 1)), "empty"),
    ((((1, 0), 0), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 1)), "full-dimensional"),
])
def test_not_a_polytope(rows, what):
    p = polygon(rows)
    with pytest.raises(NotAPolytopeError, match=what):
        enumerate_vertices(p)
    assert kinds(check_delzant(p)) == ["not-a-polytope"]


def test_face_lattices():
    assert face_lattice(polygon(HEXAGON)).counts() == (6, 6, 1)
    assert face_lattice(polygon(OCTAGON)).counts() == (8, 8, 1)
    assert face_lattice(box(3)).counts() == (8, 12, 6, 1)
    assert face_lattice(box(4)).counts() == (16, 32, 24, 8, 1)


def test_facet_h_vectors():
    assert facet_h_vector(polygon(HEXAGON), 2) == (1, 1)
    assert facet_h_vector(box(3), 0) == (1, 2, 1)
    with pytest.raises(IndexError):
        facet_h_vector(box(3), 6)


@given(st.integers(0, 6))
def test_hirzebruch_family_is_delzant(k):
    p = hirzebruch(k)
    assert check_delzant(p).ok
    assert len(enumerate_vertices(p)) == 4


def _float_vertices(normals, offsets):
    a = np.array(normals, dtype=float)
    c = np.array(offsets, dtype=float)
    n = a.shape[1]
    # Chebyshev centre: maximise r with a x + c >= r |a|
    norms = np.linalg.norm(a, axis=1)
    res = linprog(np.r_[np.zeros(n), -1.0], A_ub=np.c_[-a, norms], b_ub=c,
                  bounds=[(None, None)] * n + [(0, 10)])
    if res.status != 0 or res.x[-1] < 1e-7:
        return None
    hs = HalfspaceIntersection(np.c_[-a, -c], res.x[:n])
    pts = {tuple(np.round(v, 6)) for v in hs.intersections}
    return sorted(pts)


@pytest.mark.filterwarnings("ignore::toric_origami.polytope.NormalizationWarning")
@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 6)),
                min_size=0, max_size=4))
def test_vertex_enumeration_against_float_oracle(extra):
    rows = [((1, 0), 0), ((0, 1), 0), ((-1, 0), 5), ((0, -1), 5)]
    rows += [((a, b), c) for a, b, c in extra if (a, b) != (0, 0)]
    normals, offsets = [r[0] for r in rows], [r[1] for r in rows]
    oracle = _float_vertices(normals, offsets)
    p = polygon(rows)
    if oracle is None:
        with pytest.raises(NotAPolytopeError):
            enumerate_vertices(p)
        return
    got = [tuple(round(float(x), 6) for x in v) for v in enumerate_vertices(p)]
    assert got == oracle


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=2, max_size=4))
def test_boxes_face_counts(sizes):
    n = len(sizes)
    rows = []
    for i, s in enumerate(sizes):
        e = [0] * n
        e[i] = 1
        rows += [(tuple(e), 0), (tuple(-x for x in e), s)]
    p = DelzantPolytope.from_inequalities([r[0] for r in rows], [r[1] for r in rows])
    assert check_delzant(p).ok
    counts = face_lattice(p).counts()
    assert counts == tuple(comb(n, d) * 2 ** (n - d) for d in range(n + 1))
