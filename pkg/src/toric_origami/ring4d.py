"""Degree 2 and 4 of the equivariant cohomology quotient for n = 2.

Generators ``τ_i`` are the facet classes along the boundary circles of the
orbit space, numbered 1..N cycle by cycle. In degree 4 the face ring is
free on the squares ``s_i = τ_i²`` and one class ``p_σ`` per vertex class
``σ`` (``τ_i τ_j`` is the sum of ``p_σ`` over the vertices joining ``i`` and
``j``, which is a single term unless the circle is a bigon). The ideal
generated by the linear forms is spanned in degree 4 by ``π*(u) τ_i``.
"""

from dataclasses import dataclass
from itertools import product

from .errors import CapabilityError, PreconditionError, StructuralError
from .exact_linalg import in_row_space, rank, smith_normal_form
from .orbit_space import acyclicity_report, boundary_components, build_face_classes
from .template import check_orientable, graph_cycle_rank, orientation_signs

TAU = "τ"
MU = "μ"


def _det(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


@dataclass(frozen=True)
class BoundaryCycle:
    component: int
    classes: tuple       # facet class ids in cyclic order
    normals: tuple       # primitive inward normal of each facet class
    vertices: tuple      # vertices[i] joins classes[i] and classes[i+1]
    vertex_signs: tuple  # orientation sign of the polytope holding each vertex

    @property
    def dets(self):
        m = len(self.normals)
        return tuple(_det(self.normals[i], self.normals[(i + 1) % m]) for i in range(m))

    def __len__(self):
        return len(self.classes)


def _class_normal(t, fc):
    normals = {t.polytopes[v].facets[s[0]].normal for v, s in fc.constituents}
    if len(normals) != 1:
        raise StructuralError(f"facet class {fc.id} has normals {sorted(normals)}")
    return normals.pop()


def _aligned_start(normals, v1, v2):
    m = len(normals)
    for want in ((v1, v2), (v1, None)):
        for i in range(m):
            if normals[i] == want[0] and want[1] in (None, normals[(i + 1) % m]):
                return i
    return 0


def multifan_2d(t, fp=None):
    """Boundary circles with their normals, oriented so most determinants are +1.

    The first circle starts at its lowest facet class; every later circle
    starts at its first class (in cycle order) whose normal and successor
    normal repeat those of the first circle, falling back to matching the
    normal alone, then to the lowest class.
    """
    if t.n != 2:
        raise CapabilityError(f"the ring presentation is only implemented for n = 2 (got n = {t.n})")
    fp = fp or build_face_classes(t)
    if acyclicity_report(fp).r_min > 1:
        raise PreconditionError("some proper face is not acyclic")
    if not check_orientable(t):
        raise PreconditionError("template is not orientable")
    signs = orientation_signs(t)
    cycles = []
    for k, comp in enumerate(boundary_components(fp)):
        if not comp.vertices:
            raise StructuralError(f"boundary circle {k} has no vertices")
        fs, vs = list(comp.facets), list(comp.vertices)
        normals = [_class_normal(t, fp.classes[c]) for c in fs]
        m = len(fs)
        dets = [_det(normals[i], normals[(i + 1) % m]) for i in range(m)]
        if any(abs(d) != 1 for d in dets):
            raise StructuralError(f"boundary circle {k} has corner determinants {dets}")
        if dets.count(-1) > dets.count(1):
            fs = [fs[0]] + fs[:0:-1]
            normals = [normals[0]] + normals[:0:-1]
            vs = [vs[(-i - 1) % m] for i in range(m)]
        if cycles:
            # later circles start where the first one does when the normals
            # allow it, so circles with the same fan get parallel labels
            first = cycles[0].normals
            s = _aligned_start(normals, first[0], first[1 % len(first)])
            fs, normals, vs = fs[s:] + fs[:s], normals[s:] + normals[:s], vs[s:] + vs[:s]
        vsigns = []
        for v in vs:
            (poly_id, _), = fp.classes[v].constituents
            vsigns.append(signs[poly_id])
        cycles.append(BoundaryCycle(k, tuple(fs), tuple(normals), tuple(vs), tuple(vsigns)))
    return cycles


def _flat(cycles):
    """(cycle index, position) for every generator, in τ order."""
    return [(k, i) for k, c in enumerate(cycles) for i in range(len(c))]


def tau_label(j):
    return f"{TAU}{j + 1}"


def format_relation(coeffs, labels):
    """``Σ c_j x_j = 0`` written as positive terms = negative terms."""
    def side(terms):
        out = ""
        for c, lab in terms:
            s = lab if c == 1 else f"{c}{lab}"
            out += s if not out else "+" + s
        return out or "0"
    pos = [(c, lab) for c, lab in zip(coeffs, labels) if c > 0]
    neg = [(-c, lab) for c, lab in zip(coeffs, labels) if c < 0]
    return f"{side(pos)}={side(neg)}"


@dataclass(frozen=True)
class Degree2Presentation:
    generators: tuple        # τ labels
    normals: tuple
    relation_matrix: tuple   # rows <e1*, v_j>, <e2*, v_j>
    relation_rank: int
    rank: int
    dual_basis: tuple        # covectors dual to (v_1, v_2)
    relations: tuple         # relation strings in the dual basis


def degree2_presentation(cycles):
    normals = [cycles[k].normals[i] for k, i in _flat(cycles)]
    labels = [tau_label(j) for j in range(len(normals))]
    mat = [[v[0] for v in normals], [v[1] for v in normals]]
    r = rank(mat)
    v1, v2 = cycles[0].normals[0], cycles[0].normals[1 % len(cycles[0])]
    d = _det(v1, v2)
    if abs(d) != 1:
        raise StructuralError(f"first two normals {v1}, {v2} are not a basis")
    # rows of the inverse of the matrix with columns v1, v2
    dual = ((v2[1] * d, -v2[0] * d), (-v1[1] * d, v1[0] * d))
    rels = tuple(format_relation([_dot(u, v) for v in normals], labels) for u in dual)
    return Degree2Presentation(tuple(labels), tuple(normals),
                               tuple(tuple(row) for row in mat), r,
                               len(normals) - r, dual, rels)


@dataclass(frozen=True)
class Degree4Structure:
    monomials: tuple         # labels of the free generators s_1.., p_σ..
    relation_matrix: tuple   # one row per (τ_i, basis covector)
    relation_rank: int
    rank: int
    torsion: tuple
    mu: tuple                # per cycle: vector in the free module
    mu_expressions: tuple    # per cycle: every equal expression, as strings
    mu_det: tuple            # per cycle: det(v_i, v_{i+1}) τ_i τ_{i+1} version
    mu_det_agrees: bool      # whether both normalisations give the same kernel
    kernel_basis: tuple      # vectors μ_1 - μ_k
    kernel_labels: tuple
    kernel_rank: int
    degree_map: tuple        # value on each monomial of the map to H^4(M) = Z

    def in_quotient_zero(self, vec):
        return in_row_space(self.relation_matrix, vec)


class _Module:
    """The free degree-4 module and its relation rows."""

    def __init__(self, cycles):
        self.cycles = cycles
        flat = _flat(cycles)
        self.N = len(flat)
        self.index = {kc: j for j, kc in enumerate(flat)}
        self.normals = [cycles[k].normals[i] for k, i in flat]
        # vertex generators: (cycle, position) -> column after the squares
        self.vcol = {}
        labels = [f"{tau_label(j)}²" for j in range(self.N)]
        pairs = {}
        for k, c in enumerate(cycles):
            m = len(c)
            for i in range(m):
                a, b = self.index[(k, i)], self.index[(k, (i + 1) % m)]
                pairs.setdefault(tuple(sorted((a, b))), []).append((k, i))
        for k, c in enumerate(cycles):
            m = len(c)
            for i in range(m):
                a, b = self.index[(k, i)], self.index[(k, (i + 1) % m)]
                lab = f"{tau_label(a)}{tau_label(b)}"
                if len(pairs[tuple(sorted((a, b)))]) > 1:
                    lab += f"[v{c.vertices[i]}]"
                self.vcol[(k, i)] = len(labels)
                labels.append(lab)
        self.labels = labels
        self.size = len(labels)

    def zero(self):
        return [0] * self.size

    def square(self, j):
        v = self.zero()
        v[j] = 1
        return v

    def vertex(self, k, i):
        v = self.zero()
        v[self.vcol[(k, i % len(self.cycles[k]))]] = 1
        return v

    def relation(self, j, u):
        """``π*(u) τ_j`` in the free module."""
        k, i = next(kc for kc, jj in self.index.items() if jj == j)
        c = self.cycles[k]
        m = len(c)
        row = self.zero()
        row[j] += _dot(u, c.normals[i])
        row[self.vcol[(k, (i - 1) % m)]] += _dot(u, c.normals[(i - 1) % m])
        row[self.vcol[(k, i)]] += _dot(u, c.normals[(i + 1) % m])
        return row

    def relations(self):
        return [self.relation(j, u) for j in range(self.N) for u in ((1, 0), (0, 1))]


def _combo(vectors, coeffs):
    out = [0] * len(vectors[0])
    for v, c in zip(vectors, coeffs):
        for a, x in enumerate(v):
            out[a] += c * x
    return out


def _sub(a, b):
    return [x - y for x, y in zip(a, b)]


def _term(c, label):
    return label if c == 1 else f"-{label}" if c == -1 else f"{c}{label}"


def _degree_map(mod):
    """The map to H^4(M) = Z: p_σ -> polytope sign, s_i solved from the relations."""
    phi = [None] * mod.size
    for (k, i), col in mod.vcol.items():
        phi[col] = mod.cycles[k].vertex_signs[i]
    for j in range(mod.N):
        k, i = next(kc for kc, jj in mod.index.items() if jj == j)
        c = mod.cycles[k]
        m = len(c)
        # phi(s_j) v_j = -(sign_prev v_prev + sign_next v_next)
        w = [-(c.vertex_signs[(i - 1) % m] * c.normals[(i - 1) % m][a]
               + c.vertex_signs[i] * c.normals[(i + 1) % m][a]) for a in range(2)]
        v = c.normals[i]
        if _det(v, w) != 0:
            raise StructuralError(
                f"orientation signs are inconsistent at {tau_label(j)}: no degree map")
        phi[j] = w[0] // v[0] if v[0] else w[1] // v[1]
    for row in mod.relations():
        if sum(a * b for a, b in zip(row, phi)):
            raise StructuralError("degree map does not vanish on the relations")
    return tuple(phi)


def degree4_structure(cycles):
    mod = _Module(cycles)
    rels = mod.relations()
    rrank = rank(rels)
    snf = smith_normal_form(rels)
    q_rank = mod.size - rrank

    mus, mus_det, exprs = [], [], []
    c_signs = []
    for k, c in enumerate(cycles):
        m = len(c)
        dets = c.dets
        cands = [[s * x for x in mod.vertex(k, i)] for i, s in enumerate(c.vertex_signs)]
        for i in range(1, m):
            if not in_row_space(rels, _sub(cands[i], cands[0])):
                raise StructuralError(f"{MU}{k + 1} is not well defined")
        det_cands = [[d * x for x in mod.vertex(k, i)] for i, d in enumerate(dets)]
        for i in range(1, m):
            if not in_row_space(rels, _sub(det_cands[i], det_cands[0])):
                raise StructuralError(f"det-normalised {MU}{k + 1} is not well defined")
        ratio = {s * d for s, d in zip(c.vertex_signs, dets)}
        if len(ratio) != 1:
            raise StructuralError(f"orientation sign and corner determinant disagree "
                                  f"along boundary circle {k}")
        c_signs.append(ratio.pop())
        mus.append(tuple(cands[0]))
        mus_det.append(tuple(det_cands[0]))
        exprs.append(tuple(_term(s, mod.labels[mod.vcol[(k, i)]])
                           for i, s in enumerate(c.vertex_signs)))
    kernel = [tuple(_sub(mus[0], mu)) for mu in mus[1:]]
    labels = tuple(f"{MU}1-{MU}{k + 1}" for k in range(1, len(mus)))
    k_rank = rank(rels + [list(v) for v in kernel]) - rrank if kernel else 0
    phi = _degree_map(mod)
    for v in kernel:
        if sum(a * b for a, b in zip(v, phi)):
            raise StructuralError("a μ difference does not map to zero")
    # one class per boundary circle; with b1 + 1 circles this is 1 + b1
    if q_rank != len(cycles):
        raise StructuralError(f"degree-4 rank {q_rank} != {len(cycles)} circles")
    if k_rank != len(cycles) - 1:
        raise StructuralError(f"kernel rank {k_rank} != {len(cycles) - 1}")
    return Degree4Structure(tuple(mod.labels), tuple(tuple(r) for r in rels), rrank,
                            q_rank, tuple(d for d in snf if d > 1), tuple(mus),
                            tuple(exprs), tuple(mus_det), len(set(c_signs)) <= 1,
                            tuple(kernel), labels, k_rank, phi)


@dataclass(frozen=True)
class TauSquare:
    index: int            # 0-based τ index
    covector: tuple
    coefficients: dict    # monomial label -> coefficient
    vector: tuple         # the expression in the free module

    def __str__(self):
        terms = [_term(c, lab) for lab, c in self.coefficients.items() if c]
        rhs = "+".join(terms).replace("+-", "-") if terms else "0"
        return f"{tau_label(self.index)}²={rhs}"


def _unit_covector(v):
    """Integer u with <u, v> = 1, smallest L1 norm then lexicographically smallest."""
    bound = max(abs(x) for x in v)
    best = None
    for u in product(range(-bound, bound + 1), repeat=2):
        if _dot(u, v) == 1:
            key = (abs(u[0]) + abs(u[1]), u)
            if best is None or key < best:
                best = key
    if best is None:
        raise StructuralError(f"normal {v} is not primitive")
    return best[1]


def tau_square_expansion(cycles, j):
    """``τ_j²`` as a combination of the two adjacent products (``j`` is 0-based)."""
    mod = _Module(cycles)
    if not 0 <= j < mod.N:
        raise IndexError(f"no generator {tau_label(j)}")
    k, i = next(kc for kc, jj in mod.index.items() if jj == j)
    c = cycles[k]
    m = len(c)
    v = c.normals[i]
    u = _unit_covector(v)
    coeffs = {}
    vec = mod.zero()
    for pos, nb in (((i - 1) % m, (i - 1) % m), (i, (i + 1) % m)):
        coef = -_dot(u, c.normals[nb])
        lab = mod.labels[mod.vcol[(k, pos)]]
        coeffs[lab] = coeffs.get(lab, 0) + coef
        vec[mod.vcol[(k, pos)]] += coef
    rels = mod.relations()
    if not in_row_space(rels, _sub(mod.square(j), vec)):
        raise StructuralError(f"expansion of {tau_label(j)}² does not hold")
    # another admissible covector must give the same class
    u2 = (u[0] - v[1], u[1] + v[0])
    vec2 = mod.zero()
    for pos, nb in (((i - 1) % m, (i - 1) % m), (i, (i + 1) % m)):
        vec2[mod.vcol[(k, pos)]] -= _dot(u2, c.normals[nb])
    if not in_row_space(rels, _sub(vec, vec2)):
        raise StructuralError("expansion depends on the choice of covector")
    return TauSquare(j, u, coeffs, tuple(vec))


@dataclass(frozen=True)
class RingPresentation:
    cycles: tuple
    degree2: Degree2Presentation
    degree4: Degree4Structure
    squares: tuple
    b1: int

    @property
    def genus(self):
        """Genus of the orbit surface: b1 + 1 = circles + 2 genus."""
        return (self.b1 + 1 - len(self.cycles)) // 2


def ring_presentation(t):
    fp = build_face_classes(t)
    cycles = multifan_2d(t, fp)
    b1 = graph_cycle_rank(t)
    d2 = degree2_presentation(cycles)
    d4 = degree4_structure(cycles)
    sq = tuple(tau_square_expansion(cycles, j) for j in range(len(d2.generators)))
    return RingPresentation(tuple(cycles), d2, d4, sq, b1)
