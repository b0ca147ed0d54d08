import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from toric_origami.families import box_chain, hexagon_ring, octagon_template, prism_template
from conftest import ACYCLIC_FIXTURES
from oracles import face_ring_series, series_coefficients
from strategies import octagon_templates
from toric_origami.errors import InconsistencyError, PreconditionError
from toric_origami.homology import HomologyProfile
from toric_origami.invariants import (betti_closed_form, betti_inductive, cut_coherence,
                                      dehn_sommerville_check, equivariant_poincare_series,
                                      euler_checks, h_double_prime, invariant_report,
                                      h_prime_crosscheck, relaxed_report,
                                      restriction_rank_report, schenzel_h_prime)
from toric_origami.orbit_space import acyclicity_report, build_face_classes, f_vector
from toric_origami.polynomials import h_vector
from toric_origami.template import check_orientable, non_bridges


def profile(*ranks):
    return HomologyProfile(ranks, ((),) * len(ranks))


@pytest.mark.parametrize("h, b1, n, b", [
    ((1, 2, 1), 0, 2, (1, 0, 2, 0, 1)),
    ((1, 6, 1), 1, 2, (1, 1, 8, 1, 1)),
    ((1, 3, 3, 1), 0, 3, (1, 0, 3, 0, 3, 0, 1)),
])
def test_betti_closed_form(h, b1, n, b):
    assert betti_closed_form(h, b1, n) == b


def test_betti_closed_form_rejects_negative():
    with pytest.raises(InconsistencyError):
        betti_closed_form((1, 0, 0, 1), 1, 3)


@pytest.mark.parametrize("name, b", [
    ("t_ring4", (1, 1, 8, 1, 1)),
    ("t_chain4", (1, 0, 10, 0, 1)),
    ("t_fold2", (1, 0, 2, 0, 1)),
    ("t_square", (1, 0, 2, 0, 1)),
    ("t_cube2", (1, 0, 3, 0, 3, 0, 1)),
    ("t_figure1", (1, 1, 8, 1, 1)),
])
def test_betti_inductive(fixtures, name, b):
    assert betti_inductive(fixtures[name]) == b


def test_inductive_needs_acyclic_faces(fixtures):
    with pytest.raises(PreconditionError):
        betti_inductive(fixtures["t_prismring"])


@pytest.mark.parametrize("h, ranks, n, hp", [
    ((1, 6, 1), (1, 2), 2, (1, 6, 2)),
    ((1, 2, 1), (0, 1), 2, (1, 2, 1)),
    ((1, 3, 3, 1), (0, 0, 0), 3, (1, 3, 3, 1)),
    ((1, 3, 3, 1), (0, 0, 1), 3, (1, 3, 3, 1)),
])
def test_schenzel_h_prime(h, ranks, n, hp):
    assert schenzel_h_prime(h, profile(*ranks), n) == hp


def test_h_double_prime():
    assert h_double_prime((1, 6, 2), profile(1, 2), 2) == (4,)
    assert h_double_prime((1, 2, 1), profile(0, 1), 2) == (2,)
    with pytest.raises(InconsistencyError):
        h_double_prime((1, 1, 2), profile(1, 2), 2)
    with pytest.raises(InconsistencyError):
        h_double_prime((1, 4, 3, 1), profile(0, 0, 1), 3)


def test_schenzel_warns_on_torsion():
    tor = HomologyProfile((0, 0), ((), (2,)))
    with pytest.warns(RuntimeWarning):
        schenzel_h_prime((1, 2, 1), tor, 2)


@pytest.mark.parametrize("h, b1, chi, n", [
    ((1, 6, 1), 1, 0, 2), ((1, 2, 1), 0, 0, 2), ((1, 3, 3, 1), 0, 2, 3)])
def test_dehn_sommerville_examples(h, b1, chi, n):
    ds = dehn_sommerville_check(h, b1, chi, n)
    assert not any(ds.residuals) and ds.euler_residual == 0


def test_euler_checks(fixtures):
    e = euler_checks(fixtures["t_ring4"])
    assert (e.chi_M, e.vertex_count) == (8, 8) and e.cut_residuals == {0: 0, 1: 0, 2: 0, 3: 0}
    assert euler_checks(fixtures["t_square"]).chi_M == 4
    assert euler_checks(fixtures["t_cube2"]).chi_M == 8


def test_ring4_cut_gives_chain_euler(fixtures):
    c = cut_coherence(fixtures["t_ring4"], 0)
    assert c.folded_facet_h == (1, 1) and c.ok


def test_equivariant_examples():
    # degree 4 of the square: 3 h0 + 2 h1 + h2 = 8
    assert equivariant_poincare_series((1, 2, 1), 0, 2, 4) == (1, 0, 4, 0, 8)
    assert equivariant_poincare_series((1, 6, 1), 1, 2, 2) == (1, 1, 8)
    with pytest.raises(ValueError):
        equivariant_poincare_series((1, 2, 1), 0, 2, -1)


@pytest.mark.parametrize("name", ACYCLIC_FIXTURES)
def test_equivariant_series_matches_oracles(fixtures, name):
    t = fixtures[name]
    n = t.n
    f = f_vector(build_face_classes(t))
    h = h_vector(f, n)
    terms = 6
    got = equivariant_poincare_series(h, 0, n, 2 * terms - 2)[::2]
    assert list(got) == series_coefficients(h, n, terms)
    assert list(got) == face_ring_series(f, n, terms)


def test_restriction_ranks():
    r = restriction_rank_report((1, 1, 8, 1, 1), 1, 2)
    assert (r.coker_deg2, r.ker_deg4) == (2, 1)
    assert r.quotient_ranks == (1, 6, 2)
    r = restriction_rank_report((1, 3, 30, 0, 30, 0, 30, 3, 1), 3, 4)
    assert (r.coker_deg2, r.ker_deg4) == (12, 18)
    r = restriction_rank_report((1, 0, 2, 0, 1), 0, 2)
    assert (r.coker_deg2, r.ker_deg4) == (0, 0)


def test_relaxed_prismring(fixtures):
    r = relaxed_report(fixtures["t_prismring"])
    assert r.r_min == 2 and not r.full_betti_available
    assert r.vanishing_indices() == () and r.relation_indices() == ()
    assert r.constraints[:2] == ("b_0 = b_6 = 1", "b_1 = b_5 = 1")


def test_relaxed_trivial_cases(fixtures):
    r = relaxed_report(fixtures["t_ring4"])
    assert r.r_min == 1 and r.full_betti_available and r.vanishing_indices() == ()
    assert relaxed_report(fixtures["t_cube2"]).full_betti_available


def test_invariant_report_ring4(fixtures):
    r = invariant_report(fixtures["t_ring4"])
    assert (r.f, r.h, r.h_prime, r.h_double_prime) == ((8, 8), (1, 6, 1), (1, 6, 2), (4,))
    assert r.betti_closed == r.betti_inductive == (1, 1, 8, 1, 1)
    assert r.methods_agree and r.dual_homology_matches and r.surface_genus == 0
    assert not any(r.dehn_sommerville) and not any(r.h_prime_residual)
    assert not any(r.h_double_prime_residual)
    assert r.equivariant_series == (1, 1, 8, 0, 16)
    assert r.to_dict()["euler_cut_residuals"] == {"0": 0, "1": 0, "2": 0, "3": 0}


def test_invariant_report_relaxed(fixtures):
    with pytest.raises(PreconditionError):
        invariant_report(fixtures["t_prismring"])
    r = invariant_report(fixtures["t_prismring"], relaxed=True)
    assert r.relaxed.r_min == 2 and r.betti_closed is None and r.chi_M == 16


def test_prismring_cut_only_keeps_euler(fixtures):
    c = cut_coherence(fixtures["t_prismring"], 0)
    assert not c.acyclic and c.ok
    # the h-polynomial identity needs acyclic faces and fails here
    assert c.h_poly_residual == (-2, 4, -2)


@pytest.mark.parametrize("n, k, b", [
    (3, 2, (1, 0, 3, 0, 3, 0, 1)),
    (3, 3, (1, 0, 3, 0, 3, 0, 1)),
    (4, 2, (1, 0, 4, 0, 6, 0, 4, 0, 1)),
])
def test_box_chains(n, k, b):
    # a chain of cubes has the face numbers of one cube
    r = invariant_report(box_chain(n, k))
    assert r.betti_closed == r.betti_inductive == b


@pytest.mark.parametrize("k", [2, 4])
def test_prism_chain(k):
    r = invariant_report(prism_template(k, False))
    assert r.methods_agree and not any(r.h_prime_residual)
    assert r.betti_closed[1::2] == (0, 0, 0)


@pytest.mark.parametrize("k", [2, 4, 6])
def test_hexagon_rings(k):
    r = invariant_report(hexagon_ring(k))
    assert r.methods_agree and r.b1 == 1
    # two circles of k edges each
    assert r.f == (2 * k, 2 * k)
    assert r.betti_closed == (1, 1, 2 * k, 1, 1)


def test_genus_one_orbit_surface():
    # the orbit surface is a punctured torus: one circle instead of three
    t = octagon_template(3, [(0, 1, 0), (0, 1, 1), (1, 2, 3), (1, 2, 2)])
    r = invariant_report(t)
    assert r.betti_closed == r.betti_inductive == (1, 2, 10, 2, 1)
    assert r.chi_M == r.f[1] == 8
    assert r.dual_homology == (0, 1) and r.dual_homology_expected == (2, 3)
    assert not r.dual_homology_matches and r.surface_genus == 1
    assert r.h_prime_residual == (0, 0, -2)


def _betti_shape(b, b1, n):
    assert len(b) == 2 * n + 1
    assert b == b[::-1]
    assert b[0] == 1 and b[1] == b1
    assert all(b[2 * i + 1] == 0 for i in range(1, n - 1))


@settings(max_examples=80, deadline=None)
@given(octagon_templates())
def test_octagon_properties(t):
    fp = build_face_classes(t)
    assume(acyclicity_report(fp).r_min == 1 and check_orientable(t))
    r = invariant_report(t)
    assert r.betti_closed == r.betti_inductive
    _betti_shape(r.betti_closed, r.b1, 2)
    assert not any(r.dehn_sommerville)
    assert r.chi_M == r.f[-1]
    assert not any(r.euler_cut_residuals.values())
    if r.dual_homology_matches:
        assert not any(r.h_prime_residual) and not any(r.h_double_prime_residual)
    else:
        # every handle of the orbit surface removes two circles
        assert r.surface_genus >= 1
    for k in non_bridges(t):
        assert cut_coherence(t, k).ok


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.integers(1, 4))
def test_box_chain_properties(n, k):
    r = invariant_report(box_chain(n, k))
    _betti_shape(r.betti_closed, 0, n)
    assert r.methods_agree and not any(r.h_prime_residual)
    assert not any(r.dehn_sommerville)
