"""Numeric invariants of a toric origami manifold read off its template.

Everything is exact integer arithmetic. Betti vectors are tuples
``(b_0, ..., b_2n)``; h-vectors are ``(h_0, ..., h_n)``.
"""

import warnings
from dataclasses import asdict, dataclass, field

from . import polynomials as poly
from .errors import InconsistencyError, PreconditionError
from .homology import chain_complex, expected_dual_homology, homology
from .orbit_space import (acyclicity_report, build_face_classes, f_vector,
                          order_complex)
from .polynomials import binomial, h_vector
from .template import (check_coorientable, check_orientable, cut,
                       graph_cycle_rank, lowest_non_bridge, non_bridges)

__all__ = [
    "h_vector", "betti_closed_form", "betti_inductive", "inductive_steps",
    "schenzel_h_prime", "h_double_prime", "h_double_prime_crosscheck",
    "dehn_sommerville_check", "boundary_euler", "euler_checks",
    "equivariant_poincare_series", "restriction_rank_report",
    "h_prime_crosscheck", "relaxed_report", "cut_coherence",
    "invariant_report", "InvariantReport",
]


def _check_betti(b):
    bad = [j for j, x in enumerate(b) if x < 0]
    if bad:
        raise InconsistencyError(
            f"negative Betti number b_{bad[0]} = {b[bad[0]]}: the template "
            f"does not have acyclic proper faces")
    return tuple(b)


def _odd_part(b, b1, n):
    b[1] = b1
    b[2 * n - 1] = b1
    return b


def betti_closed_form(h, b1, n):
    """Betti numbers from the h-vector of the orbit space and b1.

    ``b_2i = h_i - (-1)^i C(n, i) b1`` for ``1 <= i <= n-1``,
    ``b_2n = h_n + (1 - (-1)^n) b1``; odd degrees other than 1 and 2n-1 vanish.
    """
    if n < 2:
        raise PreconditionError("Betti formulas need n >= 2")
    h = tuple(h)
    if len(h) != n + 1:
        raise InconsistencyError(f"h-vector {h} must have {n + 1} entries")
    b = [0] * (2 * n + 1)
    b[0] = h[0]
    for i in range(1, n):
        b[2 * i] = h[i] - (-1) ** i * binomial(n, i) * b1
    b[2 * n] = h[n] + (1 - (-1) ** n) * b1
    return _check_betti(_odd_part(b, b1, n))


@dataclass(frozen=True)
class CutStep:
    edge: int           # edge id in the template being cut
    folded_facet_h: tuple
    betti_after: tuple  # Betti vector of the cut manifold


def _require_full(t, fp=None):
    if t.n < 2:
        raise PreconditionError("Betti formulas need n >= 2")
    fp = fp or build_face_classes(t)
    ar = acyclicity_report(fp)
    if ar.r_min > 1:
        raise PreconditionError(
            f"r_min = {ar.r_min}: some proper face is not acyclic, so the Betti "
            f"numbers are not determined; use relaxed_report instead")
    if not check_orientable(t):
        raise PreconditionError("template is not orientable")
    return fp


def inductive_steps(t):
    """Betti vector by repeatedly cutting the lowest-id non-bridge edge.

    Returns ``(betti, steps)``, steps ordered from ``t`` downwards.
    """
    fp = _require_full(t)
    n = t.n
    k = lowest_non_bridge(t)
    if k is None:
        h = h_vector(f_vector(fp), n)
        b = [0] * (2 * n + 1)
        for i in range(n + 1):
            b[2 * i] = h[i]
        return _check_betti(b), []
    res = cut(t, k)
    b_cut, steps = inductive_steps(res.template)
    hf = tuple(res.folded_facet_h) + (0,)
    b = list(b_cut)
    for i in range(1, n):
        b[2 * i] = b_cut[2 * i] - hf[i] - hf[i - 1]
    b = _odd_part(b, b_cut[1] + 1, n)
    return _check_betti(b), [CutStep(k, res.folded_facet_h, b_cut)] + steps


def betti_inductive(t):
    return inductive_steps(t)[0]


def _ranks(dual_homology, n):
    if not dual_homology.torsion_free:
        warnings.warn("dual homology has torsion; ranks are field dependent",
                      RuntimeWarning, stacklevel=3)
    return dual_homology.padded(n).ranks


def schenzel_h_prime(h, dual_homology, n):
    """``h'_j = h_j + C(n,j) sum_{i=-1}^{j-2} (-1)^(j-i) dim H~_i`` (H~_-1 = 0)."""
    r = _ranks(dual_homology, n)
    out = []
    for j in range(n + 1):
        corr = sum((-1) ** (j - i) * r[i] for i in range(0, j - 1))
        out.append(h[j] + binomial(n, j) * corr)
    return tuple(out)


def h_double_prime(hp, dual_homology, n):
    """``h''_j = h'_j - C(n,j) dim H~_{j-1}`` for ``1 <= j <= n-1``.

    Returned as a tuple indexed from degree 1. Raises InconsistencyError
    unless nonnegative and symmetric.
    """
    r = _ranks(dual_homology, n)
    out = tuple(hp[j] - binomial(n, j) * r[j - 1] for j in range(1, n))
    if any(x < 0 for x in out):
        raise InconsistencyError(f"h'' = {out} has a negative entry")
    if out != out[::-1]:
        raise InconsistencyError(f"h'' = {out} is not symmetric")
    return out


def h_double_prime_crosscheck(hpp, b, b1, n):
    """Residuals of ``h''_j = b_2j - n b1 ([j=1] + [j=n-1])``, degrees 1..n-1."""
    out = []
    for j in range(1, n):
        want = b[2 * j] - n * b1 * ((j == 1) + (j == n - 1))
        out.append(hpp[j - 1] - want)
    return tuple(out)


def h_prime_crosscheck(hp, b, b1, n):
    """Coefficients of ``sum h'_i t^i - (sum b_2i t^i - n b1 t + C(n,2) b1 t^2)``."""
    rhs = [b[2 * i] for i in range(n + 1)]
    rhs[1] -= n * b1
    rhs[2] += binomial(n, 2) * b1
    return tuple(x - y for x, y in zip(hp, rhs))


def boundary_euler(f, n):
    """Euler characteristic of the boundary cell structure with face numbers ``f``."""
    return sum((-1) ** (n - 1 - i) * fi for i, fi in enumerate(f))


def sphere_euler(d):
    return 1 + (-1) ** d


@dataclass(frozen=True)
class DehnSommerville:
    residuals: tuple      # index i = 0..n
    euler_residual: int   # chi(bd) - chi(S^{n-1}) - ((-1)^n - 1) b1

    @property
    def ok(self):
        return not any(self.residuals) and self.euler_residual == 0


def dehn_sommerville_check(h, b1, chi_boundary, n):
    d = chi_boundary - sphere_euler(n - 1)
    res = tuple(h[n - i] - h[i] - (-1) ** i * d * binomial(n, i)
                for i in range(n + 1))
    return DehnSommerville(res, d - ((-1) ** n - 1) * b1)


@dataclass(frozen=True)
class EulerReport:
    chi_M: int
    vertex_count: int
    chi_boundary: int
    from_betti: bool
    cut_residuals: dict = field(default_factory=dict)  # edge id -> residual

    @property
    def ok(self):
        return self.chi_M == self.vertex_count and not any(self.cut_residuals.values())


def _euler(b):
    return sum((-1) ** j * x for j, x in enumerate(b))


def _chi_manifold(t, fp):
    """chi(M) from closed-form Betti numbers, or the fixed-point count if undetermined."""
    n = t.n
    f = f_vector(fp)
    if n >= 2 and acyclicity_report(fp).r_min == 1:
        b = betti_closed_form(h_vector(f, n), graph_cycle_rank(t), n)
        return _euler(b), True
    return f[n - 1], False


def euler_checks(t):
    fp = build_face_classes(t)
    n = t.n
    f = f_vector(fp)
    chi, from_betti = _chi_manifold(t, fp)
    residuals = {}
    for k in non_bridges(t):
        res = cut(t, k)
        chi_cut, _ = _chi_manifold(res.template, build_face_classes(res.template))
        residuals[k] = chi_cut - chi - 2 * sum(res.folded_facet_h)
    return EulerReport(chi, f[n - 1], boundary_euler(f, n), from_betti, residuals)


def equivariant_poincare_series(h, b1, n, degree_cap):
    """Ranks of equivariant cohomology in degrees ``0..degree_cap``.

    Even degree 2d: coefficient of ``s^d`` in ``sum h_j s^j / (1 - s)^n``;
    degree 1: b1; other odd degrees: 0.
    """
    if degree_cap < 0:
        raise ValueError("degree_cap must be nonnegative")
    out = []
    for deg in range(degree_cap + 1):
        if deg % 2:
            out.append(b1 if deg == 1 else 0)
        else:
            d = deg // 2
            out.append(sum(h[j] * binomial(n - 1 + d - j, n - 1)
                           for j in range(min(d, n) + 1)))
    return tuple(out)


@dataclass(frozen=True)
class RestrictionRanks:
    coker_deg2: int
    ker_deg4: int
    quotient_ranks: tuple   # rank of the even quotient ring in degrees 0, 2, ..., 2n
    non_iso_degrees: tuple
    non_surjective_degrees: tuple


def restriction_rank_report(b, b1, n):
    """Rank bookkeeping for the map from the equivariant quotient ring to H*(M)."""
    coker = n * b1
    ker = binomial(n, 2) * b1
    q = [b[2 * i] for i in range(n + 1)]
    q[1] -= coker
    q[2] += ker
    return RestrictionRanks(coker, ker, tuple(q),
                            tuple(sorted({2, 4, 2 * n - 1})),
                            tuple(sorted({2, 2 * n - 1})))


@dataclass(frozen=True)
class RelaxedReport:
    r_min: int
    b1: int
    vanishing_range: tuple    # (lo, hi): b_{2i+1} = 0 for lo <= i <= hi
    relation_range: tuple     # (lo, hi): cut relations hold for lo <= i <= hi
    constraints: tuple        # human-readable constraint strings
    full_betti_available: bool

    def vanishing_indices(self):
        lo, hi = self.vanishing_range
        return tuple(range(lo, hi + 1))

    def relation_indices(self):
        lo, hi = self.relation_range
        return tuple(range(lo, hi + 1))


def relaxed_report(t):
    """What survives when only faces of codimension >= r_min are acyclic."""
    fp = build_face_classes(t)
    ar = acyclicity_report(fp)
    r, n = ar.r_min, t.n
    b1 = graph_cycle_rank(t)
    rep = RelaxedReport(r, b1, (r, n - r - 1), (r, n - r), (), r == 1)
    cons = [f"b_0 = b_{2 * n} = 1", f"b_1 = b_{2 * n - 1} = {b1}",
            f"sum_j (-1)^j b_j = {f_vector(fp)[n - 1]}"]
    cons += [f"b_{2 * i + 1} = 0" for i in rep.vanishing_indices()]
    for k in non_bridges(t):
        hf = tuple(cut(t, k).folded_facet_h) + (0,)
        for i in rep.relation_indices():
            delta = hf[i] + (hf[i - 1] if i >= 1 else 0)
            cons.append(f"edge {k}: b_{2 * i}(M') = b_{2 * i}(M) + {delta}")
    return RelaxedReport(r, b1, rep.vanishing_range, rep.relation_range,
                         tuple(cons), r == 1)


@dataclass(frozen=True)
class CutCoherence:
    edge: int
    folded_facet_h: tuple
    h_poly_residual: tuple   # h_{M'}(t) - h_M(t) - (t+1) h_F(t) + (t-1)^n
    euler_residual: int      # chi(M') - chi(M) - 2 chi(B)
    betti_residuals: tuple   # b_2i(M') - b_2i(M) - h_i(F) - h_{i-1}(F), i = 1..n-1
    odd_residuals: tuple     # b_{2i+1}(M') - b_{2i+1}(M), i = 1..n-2
    b1_drop: int
    # False when some proper face of M is not acyclic: then only the Euler
    # identity and the drop of b1 are expected, and no Betti residuals exist
    acyclic: bool = True

    @property
    def ok(self):
        if not self.acyclic:
            return self.euler_residual == 0 and self.b1_drop == 1
        return (not self.h_poly_residual and self.euler_residual == 0
                and not any(self.betti_residuals) and not any(self.odd_residuals)
                and self.b1_drop == 1)


def cut_coherence(t, edge_id):
    """Check the cut relations between M and M' for one non-bridge edge.

    Betti numbers of both sides come from the closed form, so the relations
    are tested rather than assumed.
    """
    n = t.n
    res = cut(t, edge_id)
    fp, fp2 = build_face_classes(t), build_face_classes(res.template)
    f, f2 = f_vector(fp), f_vector(fp2)
    e = res.edge
    lat = t.polytopes[e.v1]._lattice
    counts = [0] * n
    for act, face in lat.faces.items():
        if e.f1 in act:
            counts[face.dim] += 1
    f_facet = tuple(counts[n - 2 - j] for j in range(n - 1))
    h_m, h_m2 = poly.h_polynomial(f, n), poly.h_polynomial(f2, n)
    h_f = poly.h_polynomial(f_facet, n - 1)
    resid = poly.add(h_m2, poly.scale(h_m, -1), poly.scale(poly.mul((1, 1), h_f), -1),
                     poly.power((-1, 1), n))
    b1, b1_cut = graph_cycle_rank(t), graph_cycle_rank(res.template)
    chi_b = sum(res.folded_facet_h)
    if acyclicity_report(fp).r_min > 1:
        chi_res = (_chi_manifold(res.template, fp2)[0]
                   - _chi_manifold(t, fp)[0] - 2 * chi_b)
        return CutCoherence(edge_id, res.folded_facet_h, resid, chi_res, (), (),
                            b1 - b1_cut, acyclic=False)
    b = betti_closed_form(h_vector(f, n), b1, n)
    b2 = betti_closed_form(h_vector(f2, n), b1_cut, n)
    hf = tuple(res.folded_facet_h) + (0,)
    betti_res = tuple(b2[2 * i] - b[2 * i] - hf[i] - hf[i - 1] for i in range(1, n))
    odd_res = tuple(b2[2 * i + 1] - b[2 * i + 1] for i in range(1, n - 1))
    chi_res = _euler(b2) - _euler(b) - 2 * chi_b
    return CutCoherence(edge_id, res.folded_facet_h, resid, chi_res, betti_res,
                        odd_res, b1 - b1_cut)


@dataclass
class InvariantReport:
    label: str
    n: int
    b1: int
    r_min: int
    orientable: bool
    coorientable: bool
    f: tuple
    h: tuple
    chi_boundary: int
    chi_M: int = None
    dual_homology: tuple = None
    dual_homology_expected: tuple = None
    h_prime: tuple = None
    h_double_prime: tuple = None
    betti_closed: tuple = None
    betti_inductive: tuple = None
    inductive_cuts: tuple = None
    methods_agree: bool = None
    dehn_sommerville: tuple = None
    euler_cut_residuals: dict = None
    h_prime_residual: tuple = None
    h_double_prime_residual: tuple = None
    restriction: RestrictionRanks = None
    equivariant_series: tuple = None
    relaxed: RelaxedReport = None

    @property
    def dual_homology_matches(self):
        return self.dual_homology == self.dual_homology_expected

    @property
    def surface_genus(self):
        """Genus of the orbit surface when n = 2 (circles = b1 + 1 - 2 genus)."""
        if self.n != 2 or self.dual_homology is None:
            return None
        return (self.b1 - self.dual_homology[0]) // 2

    def to_dict(self):
        d = asdict(self)
        if self.dual_homology is not None:
            d["dual_homology_matches"] = self.dual_homology_matches
            d["surface_genus"] = self.surface_genus
        if self.euler_cut_residuals is not None:
            d["euler_cut_residuals"] = {str(k): v for k, v in
                                        sorted(self.euler_cut_residuals.items())}
        return d


def invariant_report(t, mode="both", relaxed=False, degree_cap=None):
    """Compute every invariant of ``t``.

    ``mode`` selects the Betti method(s): "closed", "inductive" or "both".
    When some proper face is not acyclic, a PreconditionError is raised
    unless ``relaxed`` is set, in which case only the surviving constraints
    are reported.
    """
    if mode not in ("closed", "inductive", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    n = t.n
    fp = build_face_classes(t)
    ar = acyclicity_report(fp)
    b1 = graph_cycle_rank(t)
    f = f_vector(fp)
    h = h_vector(f, n)
    rep = InvariantReport(t.label, n, b1, ar.r_min, check_orientable(t),
                          check_coorientable(t), f, h, boundary_euler(f, n))
    if ar.r_min > 1:
        if not relaxed:
            raise PreconditionError(
                f"r_min = {ar.r_min}: a face of codimension "
                f"{ar.r_min - 1} is not acyclic, so the Betti numbers are not "
                f"determined; rerun in relaxed mode")
        rep.relaxed = relaxed_report(t)
        rep.chi_M = f[n - 1]
        return rep
    if n < 2:
        raise PreconditionError("invariants need n >= 2")
    if not rep.orientable:
        raise PreconditionError("template is not orientable")

    hom = homology(chain_complex(order_complex(fp), reduced=True))
    if not hom.torsion_free:
        raise InconsistencyError(f"dual homology has torsion: {hom}")
    hom = hom.padded(n)
    expected = expected_dual_homology(n, b1)
    # for n = 2 the orbit space is a surface that may have genus; then it has
    # fewer than b1 + 1 boundary circles and the h'-identities shift
    if hom.ranks != expected.ranks and n > 2:
        raise InconsistencyError(
            f"dual homology {hom.ranks} differs from expected {expected.ranks}")
    rep.dual_homology = hom.ranks
    rep.dual_homology_expected = expected.ranks
    rep.h_prime = schenzel_h_prime(h, hom, n)
    rep.h_double_prime = h_double_prime(rep.h_prime, hom, n)

    b = betti_closed_form(h, b1, n)
    if mode in ("closed", "both"):
        rep.betti_closed = b
    if mode in ("inductive", "both"):
        bi, steps = inductive_steps(t)
        rep.betti_inductive = bi
        rep.inductive_cuts = tuple((s.edge, s.folded_facet_h) for s in steps)
    if mode == "both":
        rep.methods_agree = rep.betti_closed == rep.betti_inductive
    main = rep.betti_closed or rep.betti_inductive
    rep.chi_M = _euler(main)
    rep.dehn_sommerville = dehn_sommerville_check(h, b1, rep.chi_boundary, n).residuals
    rep.euler_cut_residuals = euler_checks(t).cut_residuals
    rep.h_prime_residual = h_prime_crosscheck(rep.h_prime, main, b1, n)
    rep.h_double_prime_residual = h_double_prime_crosscheck(rep.h_double_prime, main, b1, n)
    rep.restriction = restriction_rank_report(main, b1, n)
    cap = 2 * n if degree_cap is None else degree_cap
    rep.equivariant_series = equivariant_poincare_series(h, b1, n, cap)
    return rep
